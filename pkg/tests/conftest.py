import random

import pytest
from hypothesis import settings

settings.register_profile("fast", max_examples=25, deadline=None)
settings.load_profile("fast")

from tropdimer import catalog
from tropdimer.dimer import DualDimer, Polytope
from tropdimer.lattice import UnimodularMap, Vec2


def unimodular_image(dimer: DualDimer, rng: random.Random) -> DualDimer:
    """A random SL(2,Z) image of the dimer, plus an integer translation."""
    # Build the map from elementary shears so the determinant is +1 exactly.
    # small shears keep coordinates bounded, which keeps the exact torus
    # intersection tests cheap; the maps are still a decent spread of SL(2,Z)
    m = UnimodularMap.identity()
    for _ in range(rng.randint(1, 2)):
        k = rng.randint(-1, 1)
        shear = UnimodularMap(1, k, 0, 1) if rng.random() < 0.5 else UnimodularMap(1, 0, k, 1)
        m = m.compose(shear)
    m = UnimodularMap(m.a, m.b, m.c, m.d, Vec2(rng.randint(-1, 1), rng.randint(-1, 1)))
    polytopes = tuple(
        Polytope(p.color, p.polygon.__class__(tuple(m.apply(v) for v in p.polygon.vertices)))
        for p in dimer.polytopes
    )
    return DualDimer(dimer.denominator, polytopes)


@pytest.fixture
def honeycomb():
    return catalog.build("honeycomb")


@pytest.fixture
def pants_min():
    return catalog.build("pants-min")
