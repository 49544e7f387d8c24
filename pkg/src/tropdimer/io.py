"""JSON documents for dimers and base diagrams.

The dimer schema is bit-exact:

    {"schema": "tropdimer/1",
     "denominator": N,
     "polytopes": [{"color": "white"|"black", "vertices": [[px, py], ...]}, ...],
     "weights": {"w<i>-b<j>@<ax>,<ay>": [num, den], ...}}

Vertex entries are integer numerators over N; edge ids use anchor
numerators.  Serialization canonicalizes: rationals reduced, every polygon
translated so its least vertex lies in the fundamental domain and rotated
to start there, polytopes stably ordered with white before black (the
stored within-color order is meaningful: it fixes the Kasteleyn row and
column order, hence the determinant's sign).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .dimer import DualDimer, Polytope, WHITE, BLACK
from .lattice import RatPolygon, Vec2

SCHEMA = "tropdimer/1"
DIAGRAM_SCHEMA = "tropdimer-diagram/1"


class SchemaError(ValueError):
    """The document is well-formed JSON but violates the schema."""


def _require(cond: bool, message: str):
    if not cond:
        raise SchemaError(message)


def parse_dimer(text: str):
    """Parse a dimer document; returns (DualDimer, weights dict).

    Raises json.JSONDecodeError for malformed JSON and SchemaError for
    schema violations; axiom failures are the caller's concern.
    """
    doc = json.loads(text)
    _require(isinstance(doc, dict), "top level must be an object")
    _require(doc.get("schema") == SCHEMA, f"schema must be {SCHEMA!r}")
    den = doc.get("denominator")
    _require(isinstance(den, int) and den >= 1, "denominator must be a positive integer")
    polys = doc.get("polytopes")
    _require(isinstance(polys, list) and polys, "polytopes must be a nonempty list")
    polytopes = []
    for entry in polys:
        _require(isinstance(entry, dict), "polytope must be an object")
        color = entry.get("color")
        _require(color in (WHITE, BLACK), "color must be 'white' or 'black'")
        verts = entry.get("vertices")
        _require(isinstance(verts, list) and len(verts) >= 3, "vertices must list >= 3 points")
        points = []
        for pair in verts:
            _require(
                isinstance(pair, list)
                and len(pair) == 2
                and all(isinstance(c, int) for c in pair),
                "vertex must be a pair of integer numerators",
            )
            points.append(Vec2(Fraction(pair[0], den), Fraction(pair[1], den)))
        try:
            polygon = RatPolygon(tuple(points))
        except ValueError as exc:
            raise SchemaError(str(exc))
        polytopes.append(Polytope(color, polygon))
    weights = {}
    raw_weights = doc.get("weights", {})
    _require(isinstance(raw_weights, dict), "weights must be an object")
    for key, value in raw_weights.items():
        _require(
            isinstance(value, list)
            and len(value) == 2
            and all(isinstance(c, int) for c in value)
            and value[1] > 0,
            "weight must be [numerator, positive denominator]",
        )
        weights[key] = Fraction(value[0], value[1])
    try:
        dimer = DualDimer(den, tuple(polytopes))
    except ValueError as exc:
        raise SchemaError(str(exc))
    return dimer, weights


def _canonical_polygon(polygon: RatPolygon) -> RatPolygon:
    least = min(polygon.vertices)
    shift = Vec2(
        -(least.x.numerator // least.x.denominator),
        -(least.y.numerator // least.y.denominator),
    )
    moved = polygon.translate(shift)
    verts = list(moved.vertices)
    k = verts.index(min(verts))
    return RatPolygon(tuple(verts[k:] + verts[:k]))


def canonicalize(dimer: DualDimer) -> DualDimer:
    ordered = [p for p in dimer.polytopes if p.color == WHITE] + [
        p for p in dimer.polytopes if p.color == BLACK
    ]
    return DualDimer(
        dimer.denominator,
        tuple(Polytope(p.color, _canonical_polygon(p.polygon)) for p in ordered),
    )


def serialize_dimer(dimer: DualDimer, weights=None) -> str:
    canon = canonicalize(dimer)
    n = canon.denominator
    doc = {
        "schema": SCHEMA,
        "denominator": n,
        "polytopes": [
            {
                "color": p.color,
                "vertices": [[int(v.x * n), int(v.y * n)] for v in p.polygon.vertices],
            }
            for p in canon.polytopes
        ],
    }
    if weights:
        doc["weights"] = {
            key: [weights[key].numerator, weights[key].denominator]
            for key in sorted(weights)
        }
    return json.dumps(doc, separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# base diagrams


def _rat_pair(q) -> list:
    f = Fraction(q)
    return [f.numerator, f.denominator]


def _vec(v: Vec2) -> list:
    return [_rat_pair(v.x), _rat_pair(v.y)]


def _parse_rat(pair) -> Fraction:
    _require(
        isinstance(pair, list)
        and len(pair) == 2
        and all(isinstance(c, int) for c in pair)
        and pair[1] > 0,
        "rational must be [numerator, positive denominator]",
    )
    return Fraction(pair[0], pair[1])


def _parse_vec(pair) -> Vec2:
    _require(isinstance(pair, list) and len(pair) == 2, "point must be a pair")
    return Vec2(_parse_rat(pair[0]), _parse_rat(pair[1]))


def serialize_diagram(diagram) -> str:
    doc = {
        "schema": DIAGRAM_SCHEMA,
        "boundary": [_vec(v) for v in diagram.boundary.vertices]
        if diagram.boundary is not None
        else None,
        "traded": sorted(diagram.traded),
        "nodes": [
            {
                "position": _vec(node.position),
                "eigenray": [int(node.eigenray.x), int(node.eigenray.y)],
                "multiplicity": node.multiplicity,
            }
            for node in diagram.nodes
        ],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def parse_diagram(text: str):
    from .almost_toric import BaseDiagram, Node

    doc = json.loads(text)
    _require(isinstance(doc, dict), "top level must be an object")
    _require(doc.get("schema") == DIAGRAM_SCHEMA, f"schema must be {DIAGRAM_SCHEMA!r}")
    boundary = None
    if doc.get("boundary") is not None:
        boundary = RatPolygon(tuple(_parse_vec(v) for v in doc["boundary"]))
    nodes = []
    for entry in doc.get("nodes", []):
        ray = entry.get("eigenray")
        _require(
            isinstance(ray, list) and len(ray) == 2 and all(isinstance(c, int) for c in ray),
            "eigenray must be an integer pair",
        )
        nodes.append(
            Node(
                _parse_vec(entry["position"]),
                Vec2(ray[0], ray[1]),
                int(entry.get("multiplicity", 1)),
            )
        )
    traded = tuple(doc.get("traded", []))
    return BaseDiagram(boundary, tuple(nodes), traded)
