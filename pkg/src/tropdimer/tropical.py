"""Max-plus tropical polynomials and their nonlinearity loci.

A tropical polynomial is a finite set of affine functions
``q -> coeff + <exponent, q>`` combined by max.  Its nonlinearity locus is
a weighted balanced polyhedral curve; edge multiplicities are lattice
lengths of the dual Newton-subdivision edges, measured in the exponent
lattice (1/D)Z^2 where D clears all exponent denominators.

Concave duals (the mirror family of functions attached to the second
dimer color) are stored by their negated exponent data plus a flag; the
flag negates evaluation but never moves the nonlinearity locus, so all
curve computations ignore it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .lattice import (
    Rat,
    RatPolygon,
    Vec2,
    convex_hull,
    dilate,
    interior_lattice_points,
    unit_triangle,
)


@dataclass(frozen=True)
class TropicalPolynomial:
    terms: tuple  # sorted tuple of (exponent: Vec2, coefficient: Rat)
    concave: bool = False

    def __post_init__(self):
        items = self.terms
        if isinstance(items, dict):
            items = items.items()
        items = tuple(sorted((Vec2(a.x, a.y), Fraction(c)) for a, c in items))
        if not items:
            raise ValueError("polynomial needs at least one term")
        if len({a for a, _ in items}) != len(items):
            raise ValueError("exponents must be pairwise distinct")
        object.__setattr__(self, "terms", items)


def tropical_polynomial(term_map, concave: bool = False) -> TropicalPolynomial:
    return TropicalPolynomial(tuple(term_map.items() if isinstance(term_map, dict) else term_map), concave)


def evaluate(phi: TropicalPolynomial, q: Vec2) -> Rat:
    m = max(c + a.dot(q) for a, c in phi.terms)
    return -m if phi.concave else m


def newton_polytope(phi: TropicalPolynomial) -> RatPolygon:
    return convex_hull([a for a, _ in phi.terms])


def dual_function(delta: RatPolygon, color: str) -> TropicalPolynomial:
    """The tropical function dual to a polygon.

    ``color="convex"`` takes the vertices as exponents with zero
    coefficients; ``color="concave"`` takes the negated vertices and sets
    the concavity flag.
    """
    if delta.is_degenerate:
        raise ValueError("degenerate polygon has no dual function")
    zero = Fraction(0)
    if color == "convex":
        return TropicalPolynomial(tuple((v, zero) for v in delta.vertices))
    if color == "concave":
        return TropicalPolynomial(tuple((-v, zero) for v in delta.vertices), concave=True)
    raise ValueError(f"unknown duality color {color!r}")


# ---------------------------------------------------------------------------
# curves


@dataclass(frozen=True)
class CurveEdge:
    """A segment (both endpoints) or a ray (one endpoint plus direction)."""

    a: Vec2
    b: Optional[Vec2] = None
    ray: Optional[Vec2] = None  # primitive integer direction when b is None
    multiplicity: int = 1

    def __post_init__(self):
        if (self.b is None) == (self.ray is None):
            raise ValueError("edge is either a segment or a ray")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if self.ray is not None and self.ray.primitive() != self.ray:
            raise ValueError("ray direction must be primitive")

    @property
    def is_ray(self) -> bool:
        return self.b is None


@dataclass(frozen=True)
class TropicalCurve:
    vertices: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))


def _outgoing(curve: TropicalCurve, v: Vec2):
    """(primitive direction, multiplicity) of every edge germ leaving v."""
    out = []
    for e in curve.edges:
        if e.is_ray:
            if e.a == v:
                out.append((e.ray, e.multiplicity))
        else:
            if e.a == v:
                out.append(((e.b - e.a).primitive(), e.multiplicity))
            elif e.b == v:
                out.append(((e.a - e.b).primitive(), e.multiplicity))
    return out


def check_balancing(curve: TropicalCurve) -> bool:
    for v in curve.vertices:
        total = Vec2(0, 0)
        for d, m in _outgoing(curve, v):
            total = total + d.scale(m)
        if not total.is_zero():
            return False
    return True


def _exponent_denominator(phi: TropicalPolynomial) -> int:
    d = 1
    for a, _ in phi.terms:
        d = math.lcm(d, a.x.denominator, a.y.denominator)
    return d


def nonlinearity_locus(phi: TropicalPolynomial) -> TropicalCurve:
    """The weighted balanced curve where the defining max is not smooth.

    Computed pairwise: for every pair of terms the tie line is intersected
    with the region where the pair is dominant; a piece is emitted only
    when the pair spans the full dual subdivision edge, with multiplicity
    the lattice length of that edge.
    """
    terms = phi.terms
    if len(terms) == 1:
        return TropicalCurve((), ())
    den = _exponent_denominator(phi)
    vertices: set = set()
    edges = []
    n = len(terms)
    for i in range(n):
        for j in range(i + 1, n):
            (ai, ci), (aj, cj) = terms[i], terms[j]
            u = ai - aj  # tie: <u, q> = cj - ci
            if u.is_zero():
                continue
            p0 = u.scale(Fraction(cj - ci) / u.dot(u))
            d = u.rot90().primitive()
            lo, hi = None, None  # None = unbounded
            empty = False
            for k in range(n):
                if k in (i, j):
                    continue
                ak, ck = terms[k]
                # need ci + <ai,q> >= ck + <ak,q> along q = p0 + t d
                w = ai - ak
                slope = w.dot(d)
                const = w.dot(p0) + ci - ck
                if slope == 0:
                    if const < 0:
                        empty = True
                        break
                elif slope > 0:
                    t = -const / slope
                    if lo is None or t > lo:
                        lo = t
                else:
                    t = -const / slope
                    if hi is None or t < hi:
                        hi = t
            if empty or (lo is not None and hi is not None and lo >= hi):
                continue
            # witness point in the relative interior of the piece
            if lo is None and hi is None:
                tw = Fraction(0)
            elif lo is None:
                tw = hi - 1
            elif hi is None:
                tw = lo + 1
            else:
                tw = (lo + hi) / 2
            qw = p0 + d.scale(tw)
            val = max(c + a.dot(qw) for a, c in terms)
            active = sorted(a for a, c in terms if c + a.dot(qw) == val)
            if ai not in (active[0], active[-1]) or aj not in (active[0], active[-1]):
                continue  # an inner pair of a longer dual edge
            if (ai, aj) != (active[0], active[-1]) and (aj, ai) != (active[0], active[-1]):
                continue
            if ai != min(ai, aj):
                continue  # emit each geometric piece once, from its lex-least pair
            diff = (active[-1] - active[0]).scale(den)
            mult = math.gcd(abs(int(diff.x)), abs(int(diff.y)))
            if lo is None and hi is None:
                # a full line: one vertex carrying two opposite rays
                vertices.add(p0)
                edges.append(CurveEdge(p0, ray=d, multiplicity=mult))
                edges.append(CurveEdge(p0, ray=-d, multiplicity=mult))
            elif lo is None:
                v = p0 + d.scale(hi)
                vertices.add(v)
                edges.append(CurveEdge(v, ray=-d, multiplicity=mult))
            elif hi is None:
                v = p0 + d.scale(lo)
                vertices.add(v)
                edges.append(CurveEdge(v, ray=d, multiplicity=mult))
            else:
                va, vb = p0 + d.scale(lo), p0 + d.scale(hi)
                vertices.update((va, vb))
                edges.append(CurveEdge(va, vb, multiplicity=mult))
    return TropicalCurve(tuple(sorted(vertices)), tuple(edges))


def make_fan(rays) -> TropicalCurve:
    """A one-vertex curve at the origin from (direction, multiplicity) pairs."""
    o = Vec2(0, 0)
    return TropicalCurve(
        (o,),
        tuple(CurveEdge(o, ray=d.primitive(), multiplicity=m) for d, m in rays),
    )


def fan_equal(v1: TropicalCurve, v2: TropicalCurve) -> bool:
    """Compare two single-vertex curves by their (ray, multiplicity) data.

    Rays with equal direction are merged by summing multiplicities, and
    the vertex position is quotiented out.
    """

    def normal_form(curve: TropicalCurve):
        if len(curve.vertices) != 1 or any(not e.is_ray for e in curve.edges):
            raise ValueError("non-fan input")
        acc: dict = {}
        for e in curve.edges:
            acc[e.ray] = acc.get(e.ray, 0) + e.multiplicity
        return tuple(sorted(acc.items()))

    return normal_form(v1) == normal_form(v2)


def genus_degree(d: int) -> int:
    if d < 1:
        raise ValueError("degree must be positive")
    return (d - 1) * (d - 2) // 2


def genus_of(delta: RatPolygon) -> int:
    return len(interior_lattice_points(delta))


def is_unimodular_subdivision(phi: TropicalPolynomial) -> bool:
    """Whether the induced regular subdivision of the Newton polygon is
    unimodular (all dual edges have lattice length 1).

    Exposed as a smoothness proxy; whether this matches any particular
    notion of a smooth tropical polynomial is deliberately left open.
    """
    curve = nonlinearity_locus(phi)
    return all(e.multiplicity == 1 for e in curve.edges)
