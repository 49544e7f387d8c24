"""Edge weights, face mutation, Euler characteristic, and mutation directions.

Mutation removes the polytopes around a zero-weight disk face and replaces
them by the convex hulls of consistent plane lifts of its white and black
boundary polytopes.

Mutation directions are the classes of face boundary cycles.  A face
boundary bounds its own disk on the torus, so its class is taken in the
first homology of the closed surface assembled from the dimer graph with
a disk glued along every zigzag cycle; that surface is a torus for all
catalog dimers (Euler count |V| - |E| + #zigzags = 0), so classes land in
Z^2, canonically up to a unimodular change of basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .dimer import (
    BLACK,
    WHITE,
    DimerFace,
    DualDimer,
    Polytope,
    build_graph,
    faces,
    reduce_mod_lattice,
    validate,
    zigzag_paths,
)
from .lattice import H1Class, UnimodularMap, Vec2, convex_hull


# ---------------------------------------------------------------------------
# weights


def exact_assignment(dimer: DualDimer) -> dict:
    """The constant weight 1 on every edge; zeroes every cycle by parity."""
    graph = build_graph(dimer)
    return {e.edge_id: Fraction(1) for e in graph.edges}


def cycle_weight(graph, cycle, weights) -> Fraction:
    """Signed weight of a closed walk: +w on black-to-white traversal,
    -w on white-to-black.

    ``cycle`` is a sequence of (edge index, orientation) with orientation
    +1 for white-to-black.  The empty walk weighs 0.
    """
    if not cycle:
        return Fraction(0)
    # closedness: consecutive darts must chain head to tail
    def tail(idx, sign):
        e = graph.edges[idx]
        return e.white if sign > 0 else e.black

    def head(idx, sign):
        e = graph.edges[idx]
        return e.black if sign > 0 else e.white

    m = len(cycle)
    for k in range(m):
        if head(*cycle[k]) != tail(*cycle[(k + 1) % m]):
            raise ValueError("walk is not closed")
    total = Fraction(0)
    for idx, sign in cycle:
        w = Fraction(weights[graph.edges[idx].edge_id])
        total += -w if sign > 0 else w
    return total


# ---------------------------------------------------------------------------
# mutation


@dataclass(frozen=True)
class MutationResult:
    dimer: DualDimer
    immersed: bool
    replaced_face: DimerFace


def _face_polytope_lifts(dimer: DualDimer, face: DimerFace):
    """Integer translations making the face's boundary polytopes share
    vertices literally in the plane, walking once around the face."""
    graph = build_graph(dimer)
    m = len(face.edge_indices)
    offsets = []  # (polytope index, translation) per boundary position
    tau = Vec2(0, 0)
    for k in range(m):
        idx = face.edge_indices[k]
        sign = face.orientations[k]
        e = graph.edges[idx]
        here, there = (e.white, e.black) if sign > 0 else (e.black, e.white)
        a = e.white_vertex if sign > 0 else e.black_vertex
        b = e.black_vertex if sign > 0 else e.white_vertex
        offsets.append((here, tau))
        tau = tau + (a - b)
    if not tau.is_zero():
        raise ValueError("face walk does not close in the plane")
    return offsets


def mutate_face(dimer: DualDimer, face: DimerFace, weights) -> MutationResult:
    all_faces = faces(dimer)
    if face not in all_faces:
        raise ValueError("face not found")
    graph = build_graph(dimer)
    if cycle_weight(graph, list(zip(face.edge_indices, face.orientations)), weights) != 0:
        raise ValueError("face not mutable")

    offsets = _face_polytope_lifts(dimer, face)
    boundary_indices = {i for i, _ in offsets}
    white_points, black_points = [], []
    for i, tau in offsets:
        p = dimer.polytopes[i]
        bucket = white_points if p.color == WHITE else black_points
        bucket.extend(v + tau for v in p.polygon.vertices)

    kept = [p for i, p in enumerate(dimer.polytopes) if i not in boundary_indices]
    new_polys = kept + [
        Polytope(WHITE, convex_hull(white_points)),
        Polytope(BLACK, convex_hull(black_points)),
    ]
    result = DualDimer(dimer.denominator, tuple(new_polys))
    report = validate(result)
    if not report.ok:
        raise ValueError("mutation produced an invalid dimer")
    return MutationResult(result, report.self_intersecting, face)


# ---------------------------------------------------------------------------
# Euler characteristic and mutation directions


def euler_characteristic(dimer: DualDimer) -> int:
    graph = build_graph(dimer)
    return len(dimer.polytopes) - len(graph.edges) + len(faces(dimer))


def _smith_normal_form(rows, width):
    """Smith normal form of an integer matrix given as a list of rows.

    Returns (diagonal entries, V) with U*A*V = D; only the right transform
    V (an integer matrix with |det| = 1, as columns) is tracked, since we
    need coordinates on the quotient lattice Z^width / rowspace(A).
    """
    a = [list(r) for r in rows]
    h = len(a)
    v = [[1 if i == j else 0 for j in range(width)] for i in range(width)]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_col(src, dst, k):  # col_dst += k * col_src
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]

    def add_row(src, dst, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]

    diag = []
    t = 0
    while t < min(h, width):
        # find a pivot
        pivot = None
        for i in range(t, h):
            for j in range(t, width):
                if a[i][j] != 0:
                    if pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear column t with row operations
            dirty = False
            for i in range(t + 1, h):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, width):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        if a[t][t] < 0:
            for r in a:
                r[t] = -r[t]
            for r in v:
                r[t] = -r[t]
        diag.append(a[t][t])
        t += 1
    return diag, v


def _zigzag_walks(dimer: DualDimer, graph):
    """Each zigzag as an integer chain over the graph edges (oriented
    white-to-black)."""
    edge_at = {e.anchor: idx for idx, e in enumerate(graph.edges)}
    colors = {i: p.color for i, p in enumerate(dimer.polytopes)}
    chains = []
    for path in zigzag_paths(dimer):
        chain = [0] * len(graph.edges)
        steps = path.steps
        m = len(steps)
        for k in range(m):
            anchor = reduce_mod_lattice(steps[k].end)
            idx = edge_at[anchor]
            # traversal goes from the polytope of step k to that of step k+1
            sign = 1 if colors[steps[k].polytope] == WHITE else -1
            chain[idx] += sign
        chains.append(chain)
    return chains


def _cycle_coordinates(graph):
    """A projection from closed chains to coordinates on the cycle space,
    via a spanning tree: a cycle is determined by its non-tree entries."""
    n_edges = len(graph.edges)
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    tree = set()
    for idx, e in enumerate(graph.edges):
        ra, rb = find(("w", e.white)), find(("b", e.black))
        if ra != rb:
            parent[ra] = rb
            tree.add(idx)
    non_tree = [i for i in range(n_edges) if i not in tree]
    return non_tree


def homology_classes_of_faces(dimer: DualDimer):
    """Classes of the face boundary cycles in H_1 of the zigzag-disk
    surface, as H1Class values in an arbitrary (but fixed) basis.

    Requires that surface to be a torus: rank 2 and no torsion.
    """
    graph = build_graph(dimer)
    non_tree = _cycle_coordinates(graph)
    zig_rows = [[chain[i] for i in non_tree] for chain in _zigzag_walks(dimer, graph)]
    diag, v = _smith_normal_form(zig_rows, len(non_tree))
    rank = len([d for d in diag if d != 0])
    if any(d not in (0, 1) for d in diag):
        raise ValueError("zigzag surface has torsion homology")
    free = len(non_tree) - rank
    if free != 2:
        raise ValueError("zigzag surface is not a torus")
    free_cols = list(range(rank, len(non_tree)))

    classes = []
    for face in faces(dimer):
        chain = [0] * len(graph.edges)
        for idx, sign in zip(face.edge_indices, face.orientations):
            chain[idx] += sign
        x = [chain[i] for i in non_tree]
        coords = [sum(x[r] * v[r][c] for r in range(len(non_tree))) for c in free_cols]
        classes.append(H1Class(coords[0], coords[1]))
    return classes


def mutation_directions(dimer: DualDimer):
    """The multiset of face-boundary classes (see module docstring)."""
    return sorted(homology_classes_of_faces(dimer), key=lambda c: (c.a, c.b))


# ---------------------------------------------------------------------------
# del-Pezzo seeds


def seed_directions(fan_rays):
    """Vanishing-cycle classes of a del-Pezzo Lagrangian seed.

    One class per corner of the moment polygon, i.e. per adjacent pair of
    fan rays r1, r2 in counterclockwise order; the corner eigenray is the
    primitivized sum of the corner's edge directions and the class is its
    quarter turn, which works out to r1 - r2.
    """
    from .catalog import DEL_PEZZO_FANS

    rays = tuple(sorted(Vec2(r.x, r.y).primitive() for r in fan_rays))
    known = {name: tuple(sorted(rs)) for name, rs in DEL_PEZZO_FANS.items()}
    if rays not in known.values():
        raise ValueError("unknown fan")

    ordered = _sort_ccw(list(rays))
    out = []
    n = len(ordered)
    for i in range(n):
        d = ordered[i] - ordered[(i + 1) % n]
        p = d.primitive()
        out.append(H1Class(int(p.x), int(p.y)))
    return sorted(out, key=lambda c: (c.a, c.b))


def _sort_ccw(vectors):
    """Counterclockwise angular order starting from the positive x-axis."""
    import functools

    def cmp(u: Vec2, w: Vec2):
        hu = 0 if (u.y > 0 or (u.y == 0 and u.x > 0)) else 1
        hw = 0 if (w.y > 0 or (w.y == 0 and w.x > 0)) else 1
        if hu != hw:
            return -1 if hu < hw else 1
        c = u.cross(w)
        return 0 if c == 0 else (-1 if c > 0 else 1)

    return sorted(vectors, key=functools.cmp_to_key(cmp))


def compare_up_to_unimodular(a, b) -> Optional[UnimodularMap]:
    """A unimodular linear map sending multiset ``a`` to multiset ``b``,
    or None.  Exhaustive over ordered pairs; sizes here are at most 6."""
    a = [c if isinstance(c, H1Class) else H1Class(*c) for c in a]
    b = [c if isinstance(c, H1Class) else H1Class(*c) for c in b]
    if len(a) != len(b):
        raise ValueError("multisets must have equal size")

    def multiset(classes):
        return sorted((c.a, c.b) for c in classes)

    target = multiset(b)
    # an independent pair of a
    pair = None
    for i in range(len(a)):
        for j in range(len(a)):
            if a[i].a * a[j].b - a[i].b * a[j].a != 0:
                pair = (i, j)
                break
        if pair:
            break
    if pair is None:
        return UnimodularMap.identity() if multiset(a) == target else None
    i, j = pair
    det_a = a[i].a * a[j].b - a[i].b * a[j].a
    for b1 in b:
        for b2 in b:
            # solve M * a_i = b1, M * a_j = b2
            num = [
                b1.a * a[j].b - b2.a * a[i].b,
                -b1.a * a[j].a + b2.a * a[i].a,
                b1.b * a[j].b - b2.b * a[i].b,
                -b1.b * a[j].a + b2.b * a[i].a,
            ]
            if any(x % det_a for x in num):
                continue
            ma, mb, mc, md = (x // det_a for x in num)
            if abs(ma * md - mb * mc) != 1:
                continue
            m = UnimodularMap(ma, mb, mc, md)
            if multiset([m.apply_class(c) for c in a]) == target:
                return m
    return None
