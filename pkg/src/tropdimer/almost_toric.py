"""Almost-toric base diagrams, nodal trades, and tropical curves on them.

A base diagram is a polygon (or the whole plane) with marked nodes; each
node carries a primitive eigenray and a multiplicity and induces a cut
along its eigenline with a shear monodromy fixing that line.  Trading a
Delzant corner pushes a node into the interior with the eigenray pointing
back at the corner; the monodromy straightens the corner, so the boundary
becomes an affine circle.

Curves live in the single ambient chart; cut crossings are implicit.
Legs attached to nodes must run parallel to the eigenray.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .lattice import RatPolygon, UnimodularMap, Vec2, on_segment
from .tropical import CurveEdge, TropicalCurve, TropicalPolynomial, evaluate


@dataclass(frozen=True)
class Node:
    position: Vec2
    eigenray: Vec2  # primitive integer direction
    multiplicity: int = 1

    def __post_init__(self):
        if not self.eigenray.is_integral() or self.eigenray.primitive() != self.eigenray:
            raise ValueError("eigenray must be a primitive integer vector")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")

    def monodromy(self) -> UnimodularMap:
        """The k-fold shear fixing the eigenline through the node:
        v -> v + k <n, v> e with n the clockwise quarter turn of e."""
        e = self.eigenray
        n = Vec2(e.y, -e.x)
        k = self.multiplicity
        a = 1 + k * int(e.x * n.x)
        b = k * int(e.x * n.y)
        c = k * int(e.y * n.x)
        d = 1 + k * int(e.y * n.y)
        linear = UnimodularMap(a, b, c, d)
        return UnimodularMap(a, b, c, d, self.position - linear.apply_vector(self.position))

    def on_eigenline(self, p: Vec2) -> bool:
        return (p - self.position).cross(self.eigenray) == 0


@dataclass(frozen=True)
class Cut:
    """The ray along which a node's monodromy acts, with its transition."""

    start: Vec2
    direction: Vec2
    transition: UnimodularMap
    node_index: int


@dataclass(frozen=True)
class BaseDiagram:
    boundary: Optional[RatPolygon]  # None = the whole plane
    nodes: tuple = ()
    traded: tuple = ()  # (corner index, node index) pairs

    @property
    def cuts(self):
        return tuple(
            Cut(node.position, node.eigenray, node.monodromy(), i)
            for i, node in enumerate(self.nodes)
        )


@dataclass(frozen=True)
class CurveOnBase:
    curve: TropicalCurve
    attachments: tuple = ()  # (edge index, node index) pairs


# ---------------------------------------------------------------------------
# nodal trades


def _corner_data(boundary: RatPolygon, corner_index: int):
    verts = boundary.vertices
    n = len(verts)
    c = verts[corner_index]
    u = (verts[(corner_index - 1) % n] - c).primitive()
    v = (verts[(corner_index + 1) % n] - c).primitive()
    return c, u, v


def nodal_trade(diagram: BaseDiagram, corner_index: int, t=1) -> BaseDiagram:
    """Replace a corner of the boundary by an interior node at lattice
    distance ``t`` whose eigenray points back into the corner."""
    if diagram.boundary is None:
        raise ValueError("non-corner index")
    n = len(diagram.boundary.vertices)
    if not (0 <= corner_index < n):
        raise ValueError("non-corner index")
    if any(ci == corner_index for ci, _ in diagram.traded):
        raise ValueError("corner already traded")
    t = Fraction(t)
    if t <= 0:
        raise ValueError("trade distance must be positive")
    corner, u, v = _corner_data(diagram.boundary, corner_index)
    w = (u + v).primitive()
    node = Node(corner + w.scale(t), -w, 1)
    return BaseDiagram(
        diagram.boundary,
        diagram.nodes + (node,),
        diagram.traded + ((corner_index, len(diagram.nodes)),),
    )


def trade_all_corners(diagram: BaseDiagram, t=1) -> BaseDiagram:
    for i in range(len(diagram.boundary.vertices)):
        diagram = nodal_trade(diagram, i, t)
    return diagram


# ---------------------------------------------------------------------------
# admissibility


def _ray_hits(edge: CurveEdge, p: Vec2) -> bool:
    d = edge.ray
    r = p - edge.a
    if r.cross(d) != 0:
        return False
    return r.dot(d) >= 0


def _edge_touches(edge: CurveEdge, p: Vec2) -> bool:
    if edge.is_ray:
        return _ray_hits(edge, p)
    return on_segment(p, edge.a, edge.b)


def admissible(curve: CurveOnBase, diagram: BaseDiagram) -> bool:
    """Legs attached to nodes run parallel to the eigenray and terminate
    there; everything else stays clear of the nodes and the boundary."""
    attached = {ei: ni for ei, ni in curve.attachments}
    for idx, edge in enumerate(curve.curve.edges):
        if idx in attached:
            node = diagram.nodes[attached[idx]]
            if edge.is_ray:
                return False
            ends = (edge.a, edge.b)
            if node.position not in ends:
                return False
            if (edge.b - edge.a).cross(node.eigenray) != 0:
                return False
        else:
            if any(_edge_touches(edge, nd.position) for nd in diagram.nodes):
                return False
    for v in curve.curve.vertices:
        if any(v == nd.position for nd in diagram.nodes):
            return False
        if diagram.boundary is not None and not diagram.boundary.contains(v, strict=True):
            return False
    if diagram.boundary is not None and any(e.is_ray for e in curve.curve.edges):
        return False
    return True


# ---------------------------------------------------------------------------
# boundary-parallel tori


def _traded_corner_nodes(diagram: BaseDiagram):
    if diagram.boundary is None:
        raise ValueError("diagram has no boundary")
    n = len(diagram.boundary.vertices)
    by_corner = dict(diagram.traded)
    if sorted(by_corner) != list(range(n)):
        raise ValueError("every corner must be traded first")
    return [diagram.nodes[by_corner[i]] for i in range(n)]


def _corner_frame(diagram: BaseDiagram, i: int):
    """(corner, inward direction w, lattice distance to the node)."""
    corner, u, v = _corner_data(diagram.boundary, i)
    w = (u + v).primitive()
    node = _traded_corner_nodes(diagram)[i]
    offset = node.position - corner
    t = offset.x / w.x if w.x != 0 else offset.y / w.y
    return corner, w, t


def build_outer_torus(diagram: BaseDiagram, r) -> CurveOnBase:
    """The boundary-parallel circle at collar depth r, with its corners on
    the cuts (where the monodromy straightens them); no node contact."""
    nodes = _traded_corner_nodes(diagram)
    r = Fraction(r)
    n = len(nodes)
    pts = []
    for i in range(n):
        corner, w, t = _corner_frame(diagram, i)
        if not (0 < r < t):
            raise ValueError("collar depth out of range")
        pts.append(corner + w.scale(r))
    edges = tuple(CurveEdge(pts[i], pts[(i + 1) % n]) for i in range(n))
    return CurveOnBase(TropicalCurve(tuple(pts), edges), ())


def build_inner_torus(diagram: BaseDiagram, s=None) -> CurveOnBase:
    """One trivalent vertex per node, past the node on its eigenline, with
    an eigenray leg to the node; the remaining legs glue into a closed
    boundary-parallel cycle.  All vertices sit at the same lattice depth."""
    nodes = _traded_corner_nodes(diagram)
    n = len(nodes)
    frames = [_corner_frame(diagram, i) for i in range(n)]
    if s is None:
        s = max(t for _, _, t in frames) + 1
    s = Fraction(s)
    if any(s <= t for _, _, t in frames):
        raise ValueError("inconsistent placement")
    pts = [corner + w.scale(s) for corner, w, _ in frames]
    for i in range(n):
        leg = (nodes[i].position - pts[i]).primitive()
        prev = (pts[(i - 1) % n] - pts[i]).primitive()
        nxt = (pts[(i + 1) % n] - pts[i]).primitive()
        if leg + prev + nxt != Vec2(0, 0):
            raise ValueError("inconsistent placement")
    loop = [CurveEdge(pts[i], pts[(i + 1) % n]) for i in range(n)]
    legs = [CurveEdge(pts[i], nodes[i].position) for i in range(n)]
    attachments = tuple((n + i, dict(diagram.traded)[i]) for i in range(n))
    return CurveOnBase(TropicalCurve(tuple(pts), tuple(loop + legs)), attachments)


# ---------------------------------------------------------------------------
# the nodal-trade exchange


def local_model():
    """The model pair Q_x: one node at the origin with vertical eigenray,
    and the line through it (the nonlinearity locus of 1 (+) x1)."""
    node = Node(Vec2(0, 0), Vec2(0, 1))
    diagram = BaseDiagram(None, (node,))
    o = Vec2(0, 0)
    line = TropicalCurve(
        (o,), (CurveEdge(o, ray=Vec2(0, 1)), CurveEdge(o, ray=Vec2(0, -1)))
    )
    return diagram, CurveOnBase(line, ())


def _retarget(edges, old: Vec2, new: Vec2):
    out = []
    for e in edges:
        if e.is_ray:
            out.append(CurveEdge(new, ray=e.ray, multiplicity=e.multiplicity) if e.a == old else e)
        elif e.a == old:
            out.append(CurveEdge(new, e.b, multiplicity=e.multiplicity))
        elif e.b == old:
            out.append(CurveEdge(e.a, new, multiplicity=e.multiplicity))
        else:
            out.append(e)
    return out


def _pants_directions(e: Vec2):
    """The two non-leg germ (direction, length factor) pairs of the
    exchanged trivalent vertex; together with the eigenray leg they
    balance: -n + (n - e) + e = 0."""
    n = Vec2(e.y, -e.x)
    first = -n
    second = n - e
    sp = second.primitive()
    length = math.gcd(abs(int(second.x)), abs(int(second.y)))
    return (first, 1), (sp, length)


def nodal_trade_exchange(
    diagram: BaseDiagram, curve: CurveOnBase, node_index: int, delta=1
) -> CurveOnBase:
    """Exchange a curve across one node.

    Forward from a line through the node (local model): the straight edge
    becomes a trivalent pants vertex pushed off the node plus a thimble
    leg.  Forward from a two-valent cut vertex on the corner side (an
    outer-torus corner): the vertex moves past the node and picks up a
    thimble leg.  Both inverses are supported; the thimble is detected by
    its attachment.
    """
    node = diagram.nodes[node_index]
    e = node.eigenray
    q = node.position
    delta = Fraction(delta)
    attached_here = {ei for ei, ni in curve.attachments if ni == node_index}
    edges = list(curve.curve.edges)
    verts = list(curve.curve.vertices)

    # inverse: a vertex carrying a thimble leg to this node
    for leg_idx in sorted(attached_here):
        leg = edges[leg_idx]
        v = leg.a if leg.b == q else leg.b
        others = [
            (i, ed)
            for i, ed in enumerate(edges)
            if i != leg_idx and (ed.a == v or (not ed.is_ray and ed.b == v))
        ]
        (d1, m1), (d2, m2) = _pants_directions(e)
        pants = sorted([(d1.primitive(), m1 * leg.multiplicity), (d2, m2 * leg.multiplicity)])
        germs = sorted(
            (ed.ray, ed.multiplicity) for _, ed in others if ed.is_ray
        )
        if len(others) == 2 and germs == pants:
            # undo the line exchange: restore the straight line through the node
            keep = [ed for i, ed in enumerate(edges) if i != leg_idx and i not in {j for j, _ in others}]
            m = leg.multiplicity
            new_edges = keep + [
                CurveEdge(q, ray=e, multiplicity=m),
                CurveEdge(q, ray=-e, multiplicity=m),
            ]
            new_verts = [w for w in verts if w != v] + [q]
            new_attach = _reindex_attachments(curve, edges, new_edges, drop={leg_idx})
            return CurveOnBase(TropicalCurve(tuple(sorted(set(new_verts))), tuple(new_edges)), new_attach)
        # undo a vertex exchange: move the vertex back to the corner side
        keep = [ed for i, ed in enumerate(edges) if i != leg_idx]
        target = q + e.scale(delta)
        new_edges = _retarget(keep, v, target)
        new_verts = [target if w == v else w for w in verts]
        new_attach = _reindex_attachments(curve, edges, new_edges, drop={leg_idx})
        return CurveOnBase(TropicalCurve(tuple(new_verts), tuple(new_edges)), new_attach)

    # forward from a vertex at the node itself: the straight-line case
    if q in verts:
        incident = [
            (i, ed) for i, ed in enumerate(edges)
            if ed.a == q or (not ed.is_ray and ed.b == q)
        ]
        for _, ed in incident:
            d = ed.ray if ed.is_ray else (ed.b - ed.a).primitive()
            if d.cross(e) != 0:
                raise ValueError("edge not parallel to eigenray")
        m = incident[0][1].multiplicity
        v = q - e.scale(delta)
        keep = [ed for i, ed in enumerate(edges) if i not in {i for i, _ in incident}]
        (d1, m1), (d2, m2) = _pants_directions(e)
        new_edges = keep + [
            CurveEdge(v, ray=d1.primitive(), multiplicity=m1 * m),
            CurveEdge(v, ray=d2, multiplicity=m2 * m),
            CurveEdge(v, q, multiplicity=m),
        ]
        new_verts = [w for w in verts if w != q] + [v]
        new_attach = _reindex_attachments(curve, edges, new_edges, drop=set())
        new_attach = new_attach + ((len(new_edges) - 1, node_index),)
        return CurveOnBase(TropicalCurve(tuple(sorted(set(new_verts))), tuple(new_edges)), new_attach)

    # forward from a cut vertex on the corner side of the node
    for v in verts:
        offset = v - q
        if offset.cross(e) == 0 and offset.dot(e) > 0:
            target = q - e.scale(delta)
            new_edges = _retarget(edges, v, target)
            new_edges.append(CurveEdge(target, q))
            new_verts = [target if w == v else w for w in verts]
            new_attach = _reindex_attachments(curve, edges, new_edges, drop=set())
            new_attach = new_attach + ((len(new_edges) - 1, node_index),)
            return CurveOnBase(TropicalCurve(tuple(new_verts), tuple(new_edges)), new_attach)

    # nothing at the node: any edge crossing the node is transverse
    if any(_edge_touches(ed, q) for ed in edges):
        raise ValueError("edge not parallel to eigenray")
    raise ValueError("no exchange site at this node")


def _reindex_attachments(curve: CurveOnBase, old_edges, new_edges, drop):
    """Carry attachments over to the new edge list (matching by value)."""
    out = []
    for ei, ni in curve.attachments:
        if ei in drop:
            continue
        target = old_edges[ei]
        out.append((new_edges.index(target), ni))
    return tuple(out)


def curve_key(curve: CurveOnBase):
    """Canonical form for equality of curves up to storage order."""
    edges = curve.curve.edges
    attach = {ei: ni for ei, ni in curve.attachments}

    def edge_key(i, e):
        if e.is_ray:
            geom = ("ray", e.a, e.ray, e.multiplicity)
        else:
            lo, hi = sorted((e.a, e.b))
            geom = ("seg", lo, hi, e.multiplicity)
        return geom + (attach.get(i, -1),)

    return (
        tuple(sorted(set(curve.curve.vertices))),
        tuple(sorted(edge_key(i, e) for i, e in enumerate(edges))),
    )


def curves_equal(c1: CurveOnBase, c2: CurveOnBase) -> bool:
    return curve_key(c1) == curve_key(c2)


# ---------------------------------------------------------------------------
# the A_n chain


def an_chain_curve(n: int):
    """A chain of n nodes on one eigenline and the closed loop weaving
    around them, with one eigenray leg per node.

    The loop is the shadow of an (n+2)-punctured sphere; it is admissible
    but, like any polygonal shadow, not balanced at its detour corners.
    """
    if n < 1:
        raise ValueError("chain length must be positive")
    nodes = tuple(Node(Vec2(0, i), Vec2(0, 1)) for i in range(1, n + 1))
    diagram = BaseDiagram(None, nodes)
    half = Fraction(1, 2)
    L = [Vec2(0, i - half) for i in range(1, n + 2)]
    R = [Vec2(1, i) for i in range(1, n + 1)]
    top, bottom = Vec2(-1, n + half), Vec2(-1, half)
    verts = L + R + [top, bottom]
    edges = []
    for i in range(n):
        edges.append(CurveEdge(L[i], R[i]))
        edges.append(CurveEdge(R[i], L[i + 1]))
    edges.append(CurveEdge(L[n], top))
    edges.append(CurveEdge(top, bottom))
    edges.append(CurveEdge(bottom, L[0]))
    attachments = []
    for i in range(n):
        edges.append(CurveEdge(L[i], nodes[i].position))
        attachments.append((len(edges) - 1, i))
    return diagram, CurveOnBase(TropicalCurve(tuple(verts), tuple(edges)), tuple(attachments))


# ---------------------------------------------------------------------------
# the del-Pezzo data set


@dataclass(frozen=True)
class DelPezzo:
    name: str
    polygon: RatPolygon
    fan: tuple
    diagram: BaseDiagram
    dimer: "object"


@dataclass(frozen=True)
class DelPezzoCatalog:
    CP2: DelPezzo
    P1P1: DelPezzo
    BL1: DelPezzo
    BL2: DelPezzo
    BL3: DelPezzo
    X3333: tuple  # vanishing-cycle classes of the square quotient example

    @property
    def names(self):
        return ("CP2", "P1P1", "BL1", "BL2", "BL3")


def catalog() -> DelPezzoCatalog:
    """Per del-Pezzo surface: moment polygon, fan, fully traded diagram,
    and the seed dual dimer; plus the X3333 vanishing-cycle classes."""
    from .catalog import DEL_PEZZO_FANS, MOMENT_POLYGONS, SEED_FAN, load
    from .lattice import H1Class

    entries = {}
    for short, seed in (
        ("cp2", "cp2-seed"),
        ("p1p1", "p1p1-seed"),
        ("bl1", "bl1-seed"),
        ("bl2", "bl2-seed"),
        ("bl3", "bl3-seed"),
    ):
        polygon = MOMENT_POLYGONS[short]
        entries[short] = DelPezzo(
            short,
            polygon,
            DEL_PEZZO_FANS[short],
            trade_all_corners(BaseDiagram(polygon)),
            load(seed),
        )
    x3333 = (H1Class(1, 0), H1Class(0, 1), H1Class(-1, 1), H1Class(1, 1))
    return DelPezzoCatalog(
        entries["cp2"], entries["p1p1"], entries["bl1"], entries["bl2"], entries["bl3"], x3333
    )


# ---------------------------------------------------------------------------
# charted sections


@dataclass(frozen=True)
class Chart:
    region: RatPolygon
    phi: TropicalPolynomial


@dataclass(frozen=True)
class ChartedSection:
    charts: tuple
    transitions: tuple = ()  # ((i, j), UnimodularMap): x_i = T(x_j)
    diagram: Optional[BaseDiagram] = None

    def transition(self, i: int, j: int) -> UnimodularMap:
        for (a, b), t in self.transitions:
            if (a, b) == (i, j):
                return t
            if (a, b) == (j, i):
                return t.inverse()
        return UnimodularMap.identity()


def _clip(subject: RatPolygon, clipper: RatPolygon) -> Optional[RatPolygon]:
    """Exact Sutherland-Hodgman intersection of convex polygons; None when
    the intersection has empty interior."""
    pts = list(subject.vertices)
    for a, b in clipper.edges():
        if not pts:
            return None
        out = []
        n = b - a
        inside = [n.cross(p - a) >= 0 for p in pts]  # left of (or on) a->b
        for k, p in enumerate(pts):
            q = pts[(k + 1) % len(pts)]
            pi, qi = inside[k], inside[(k + 1) % len(pts)]
            if pi:
                out.append(p)
            if pi != qi:
                d = q - p
                denom = n.cross(d)
                t = n.cross(a - p) / denom
                out.append(p + d.scale(t))
        pts = out
    dedup = []
    for p in pts:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if dedup and dedup[0] == dedup[-1]:
        dedup.pop()
    if len(dedup) < 3:
        return None
    poly = RatPolygon(tuple(dedup))
    if poly.area2() == 0:
        return None
    return poly


def _transform_polynomial(phi: TropicalPolynomial, t: UnimodularMap) -> TropicalPolynomial:
    """The pullback along t^{-1}: (result)(x) = phi(t^{-1} x)."""
    inv = t.inverse()
    terms = []
    for a, c in phi.terms:
        a2 = Vec2(inv.a * a.x + inv.c * a.y, inv.b * a.x + inv.d * a.y)
        c2 = c + a.dot(inv.t)
        terms.append((a2, c2))
    return TropicalPolynomial(tuple(terms), phi.concave)


def _tie_lines(phi: TropicalPolynomial):
    lines = []
    for i in range(len(phi.terms)):
        for j in range(i + 1, len(phi.terms)):
            (a, c), (b, d) = phi.terms[i], phi.terms[j]
            u = a - b
            if not u.is_zero():
                lines.append((u, d - c))  # <u, x> = rhs
    return lines


def _line_intersections(lines, overlap: RatPolygon):
    pts = set(overlap.vertices)
    boundary = [((b - a).rot90(), (b - a).rot90().dot(a)) for a, b in overlap.edges()]
    every = lines + boundary
    for i in range(len(every)):
        for j in range(i + 1, len(every)):
            (u1, r1), (u2, r2) = every[i], every[j]
            det = u1.cross(u2)
            if det == 0:
                continue
            x = (r1 * u2.y - r2 * u1.y) / det
            y = (r2 * u1.x - r1 * u2.x) / det
            p = Vec2(x, y)
            if overlap.contains(p):
                pts.add(p)
    return sorted(pts)


def _affine_on(samples, values):
    """Fit g . x + c through the samples and check it matches everywhere;
    returns the gradient g, or None if the data is not affine."""
    base_p, base_v = samples[0], values[0]
    pair = None
    for i in range(1, len(samples)):
        for j in range(i + 1, len(samples)):
            if (samples[i] - base_p).cross(samples[j] - base_p) != 0:
                pair = (i, j)
                break
        if pair:
            break
    if pair is None:
        # all samples collinear: any consistent slope along the line works
        for i in range(1, len(samples)):
            d = samples[i] - base_p
            if not d.is_zero():
                # values must be affine in the line parameter; check pairwise
                ref = (values[i] - base_v) / d.dot(d)
                for j in range(1, len(samples)):
                    dj = samples[j] - base_p
                    if values[j] - base_v != ref * d.dot(dj):
                        return None
                break
        return Vec2(0, 0)
    i, j = pair
    di, dj = samples[i] - base_p, samples[j] - base_p
    det = di.cross(dj)
    vi, vj = values[i] - base_v, values[j] - base_v
    gx = (vi * dj.y - vj * di.y) / det
    gy = (vj * di.x - vi * dj.x) / det
    g = Vec2(gx, gy)
    for p, v in zip(samples, values):
        if base_v + g.dot(p - base_p) != v:
            return None
    return g


def _covector_fixed(alpha: Vec2, m: UnimodularMap) -> bool:
    """alpha o M = alpha for the linear part of m."""
    return (
        alpha.x * m.a + alpha.y * m.c == alpha.x
        and alpha.x * m.b + alpha.y * m.d == alpha.y
    )


def validate_section(section: ChartedSection) -> bool:
    charts = section.charts
    # overlap compatibility: differences affine with integral gradient
    for i in range(len(charts)):
        for j in range(i + 1, len(charts)):
            t = section.transition(i, j)
            moved = RatPolygon(tuple(t.apply(v) for v in charts[j].region.vertices))
            if moved.area2() < 0:
                moved = RatPolygon(tuple(reversed(moved.vertices)))
            overlap = _clip(charts[i].region, moved)
            if overlap is None:
                continue
            phi_i = charts[i].phi
            phi_j = _transform_polynomial(charts[j].phi, t)
            lines = _tie_lines(phi_i) + _tie_lines(phi_j)
            samples = _line_intersections(lines, overlap)
            values = [evaluate(phi_i, p) - evaluate(phi_j, p) for p in samples]
            g = _affine_on(samples, values)
            if g is None or not g.is_integral():
                return False
    # node compatibility: active covectors near the cut must be
    # monodromy-invariant in every chart containing the node
    if section.diagram is not None:
        for node in section.diagram.nodes:
            m = node.monodromy()
            for chart in charts:
                if not chart.region.contains(node.position):
                    continue
                for sign in (1, -1):
                    eps = Fraction(1)
                    probe = None
                    while eps >= Fraction(1, 4096):
                        p = node.position + node.eigenray.scale(sign * eps)
                        if chart.region.contains(p, strict=True):
                            probe = p
                            break
                        eps /= 2
                    if probe is None:
                        continue
                    best = max(c + a.dot(probe) for a, c in chart.phi.terms)
                    for a, c in chart.phi.terms:
                        if c + a.dot(probe) == best and not _covector_fixed(a, m):
                            return False
    return True
