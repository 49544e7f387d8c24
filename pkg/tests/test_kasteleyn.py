from fractions import Fraction

import pytest

from tropdimer import catalog
from tropdimer.dimer import build_graph
from tropdimer.kasteleyn import (
    LaurentPolynomial,
    boltzmann_monomial,
    det_matches_matchings,
    determinant,
    enumerate_matchings,
    format_laurent,
    kasteleyn_matrix,
    kasteleyn_signs,
    make_gauge,
    monomial,
    novikov_necessary_condition,
)
from tropdimer.lattice import Vec2

V = Vec2

SQUARE_NAMES = [
    n
    for n in catalog.NAMES
    if len(catalog.build(n).indices("white")) == len(catalog.build(n).indices("black"))
]


def test_laurent_arithmetic_is_exact():
    p = monomial(V(1, 0)) + monomial(V(0, 1), Fraction(1, 3))
    q = p * p
    assert dict(q.terms)[V(0, 2)] == Fraction(1, 9)
    assert (p - p).is_zero


def test_format_constant_first_then_lex_descending():
    p = (
        monomial(V(0, 0), 3)
        - monomial(V(1, 0))
        - monomial(V(0, 1))
        - monomial(V(-1, -1))
    )
    assert format_laurent(p) == "3 - z1 - z2 - z1^-1*z2^-1"
    assert format_laurent(LaurentPolynomial(())) == "0"


def test_honeycomb_partition_function(honeycomb):
    det = determinant(kasteleyn_matrix(honeycomb))
    assert format_laurent(det) == "3 - z1 - z2 - z1^-1*z2^-1"


def test_gauge_changes_shift_exponents_only(honeycomb):
    graph = build_graph(honeycomb)
    base = determinant(kasteleyn_matrix(honeycomb)).normalized()
    for seed in range(5):
        gauge = make_gauge(graph, f"random:{seed}")
        det = determinant(kasteleyn_matrix(honeycomb, gauge)).normalized()
        assert det == base


def test_unknown_gauge_rejected(honeycomb):
    with pytest.raises(ValueError, match="unknown gauge"):
        make_gauge(build_graph(honeycomb), "hadamard")


def test_honeycomb_matching_count(honeycomb):
    assert len(enumerate_matchings(build_graph(honeycomb))) == 6


def test_boltzmann_monomials_match_determinant_support(honeycomb):
    graph = build_graph(honeycomb)
    det = determinant(kasteleyn_matrix(honeycomb))
    exps = {a for a, _ in det.terms}
    for m in enumerate_matchings(graph):
        ((a, c),) = boltzmann_monomial(graph, m).terms
        assert c == 1 and a in exps


@pytest.mark.parametrize("name", SQUARE_NAMES)
def test_determinant_counts_matchings(name):
    assert det_matches_matchings(catalog.build(name))


@pytest.mark.parametrize("name", SQUARE_NAMES)
def test_sign_assignment_satisfies_face_condition(name):
    dimer = catalog.build(name)
    signs = kasteleyn_signs(dimer)
    assert set(signs) <= {1, -1}
    from tropdimer.dimer import faces, validate

    if validate(dimer).self_intersecting:
        assert set(signs) == {1}
        return
    for face in faces(dimer):
        k = len(face.edge_indices) // 2
        prod = 1
        for idx in face.edge_indices:
            prod *= signs[idx]
        assert prod == (-1) ** (k + 1)


def test_novikov_condition(honeycomb):
    graph = build_graph(honeycomb)
    flat = {e.edge_id: Fraction(1) for e in graph.edges}
    assert novikov_necessary_condition(honeycomb, flat)
    skew = dict(flat)
    skew[graph.edges[0].edge_id] = Fraction(7)
    with pytest.raises(ValueError, match="nonnegative"):
        novikov_necessary_condition(honeycomb, {e.edge_id: Fraction(-1) for e in graph.edges})
