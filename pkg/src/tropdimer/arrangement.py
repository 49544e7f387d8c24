"""Dual dimers from oriented line arrangements on the torus.

An oriented line with primitive direction c and offset o is the geodesic
{ p : <rot90(c), p> = o mod 1 } traversed in direction c.  For a generic
arrangement (no triple points, no repeated geodesics) the complement
decomposes into convex regions; a region whose counterclockwise boundary
runs along every line's orientation is a black polytope, one running
against every orientation is white, and the mixed regions are the faces.
The black and white regions always assemble into a valid dual dimer: at
each crossing the black and white corners are the two opposite cones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dimer import BLACK, WHITE, DualDimer, Polytope
from .lattice import RatPolygon, Vec2, reduce_mod_lattice


@dataclass(frozen=True)
class TorusLine:
    direction: Vec2  # primitive integer vector
    offset: Fraction

    def __post_init__(self):
        if self.direction.primitive() != self.direction:
            raise ValueError("line direction must be primitive")

    @property
    def normal(self) -> Vec2:
        return self.direction.rot90()

    def base_point(self) -> Vec2:
        n = self.normal
        return n.scale(Fraction(self.offset) / n.dot(n))


def _comonomial(c: Vec2) -> Vec2:
    """An integer covector m with <m, c> = 1 for primitive c."""
    g, x, y = _egcd(int(c.x), int(c.y))
    assert g == 1
    return Vec2(x, y)


def _egcd(a: int, b: int):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return (g, y, x - (a // b) * y)


def _crossings(lines):
    """All pairwise intersection points, as torus points, with the set of
    (line index, parameter t in [0,1)) passages through each."""
    points = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            li, lj = lines[i], lines[j]
            d = li.normal.cross(lj.normal)
            if d == 0:
                continue
            for ki in range(abs(int(d))):
                for kj in range(abs(int(d))):
                    # solve <n_i,p> = o_i + ki, <n_j,p> = o_j + kj
                    bi = li.offset + ki
                    bj = lj.offset + kj
                    p = Vec2(
                        (bi * lj.normal.y - bj * li.normal.y) / d,
                        (bj * li.normal.x - bi * lj.normal.x) / d,
                    )
                    t = reduce_mod_lattice(p)
                    points.setdefault(t, set()).update((i, j))
    # parameter of each crossing along each of its lines
    passages = {}
    for t, incident in points.items():
        if len(incident) > 2:
            raise ValueError("arrangement has a triple point; perturb offsets")
        for i in incident:
            line = lines[i]
            m = _comonomial(line.direction)
            s = m.dot(t.coords - line.base_point())
            s = s - (s.numerator // s.denominator)
            passages.setdefault(i, []).append((s, t))
    for i in passages:
        passages[i].sort()
    return points, passages


@dataclass(frozen=True)
class _Dart:
    line: int
    start: Vec2  # plane lift of the start crossing
    end: Vec2
    forward: bool  # True when traversed along the line's orientation


def _darts(lines, passages):
    out = []
    for i, stops in passages.items():
        line = lines[i]
        base = line.base_point()
        if len(stops) < 1:
            raise ValueError("a line misses every crossing; add directions")
        m = len(stops)
        for k in range(m):
            s0, _ = stops[k]
            s1, _ = stops[(k + 1) % m]
            if k + 1 == m:
                s1 += 1
            a = base + line.direction.scale(s0)
            b = base + line.direction.scale(s1)
            out.append(_Dart(i, a, b, True))
            out.append(_Dart(i, b, a, False))
    return out


def _trace_regions(darts):
    """Orbits of the arrangement's face permutation; each orbit is a closed
    boundary walk, lifted consistently to the plane."""
    # group dart ends by torus point for the rotation system
    by_vertex = {}
    for d in darts:
        by_vertex.setdefault(reduce_mod_lattice(d.start), []).append(d)

    def angle_less(u: Vec2, w: Vec2):
        hu = 0 if (u.y > 0 or (u.y == 0 and u.x > 0)) else 1
        hw = 0 if (w.y > 0 or (w.y == 0 and w.x > 0)) else 1
        if hu != hw:
            return hu < hw
        return u.cross(w) > 0

    for v in by_vertex:
        ring = by_vertex[v]
        # insertion sort with the exact angular comparator
        for i in range(1, len(ring)):
            j = i
            while j > 0 and angle_less(
                ring[j].end - ring[j].start, ring[j - 1].end - ring[j - 1].start
            ):
                ring[j - 1], ring[j] = ring[j], ring[j - 1]
                j -= 1

    def next_dart(d: _Dart) -> _Dart:
        v = reduce_mod_lattice(d.end)
        ring = by_vertex[v]
        # the reverse dart is the unique one on the same line leaving v in
        # the opposite traversal sense
        pos = next(
            k
            for k, cand in enumerate(ring)
            if cand.line == d.line and cand.forward == (not d.forward)
        )
        return ring[(pos + 1) % len(ring)]

    seen = set()
    walks = []
    for d in darts:
        key = (d.line, reduce_mod_lattice(d.start), d.forward)
        if key in seen:
            continue
        walk = []
        cur = d
        while True:
            k = (cur.line, reduce_mod_lattice(cur.start), cur.forward)
            if k in seen:
                break
            seen.add(k)
            walk.append(cur)
            cur = next_dart(cur)
        walks.append(walk)
    return walks


def _unroll(walk):
    """Consistent plane lifts of the walk's corner points; None if the walk
    does not close up (a non-disk region)."""
    pts = []
    here = walk[0].start
    for d in walk:
        pts.append(here)
        here = here + (d.end - d.start)
    drift = here - walk[0].start
    if not drift.is_zero():
        return None
    return pts


def _signed_area2(pts):
    total = Fraction(0)
    for i in range(len(pts)):
        total += pts[i].cross(pts[(i + 1) % len(pts)])
    return total


def arrangement_dimer(lines) -> DualDimer:
    """The dual dimer whose polytopes are the uniformly-oriented regions of
    the arrangement.  Raises if the arrangement is degenerate."""
    lines = list(lines)
    dirs = {(l.direction, l.offset) for l in lines}
    if len(dirs) != len(lines):
        raise ValueError("repeated line")
    _, passages = _crossings(lines)
    if len(passages) != len(lines):
        raise ValueError("a line misses every crossing; add directions")
    darts = _darts(lines, passages)
    walks = _trace_regions(darts)

    polytopes = []
    for walk in walks:
        pts = _unroll(walk)
        if pts is None:
            raise ValueError("arrangement region is not a disk")
        if _signed_area2(pts) < 0:
            walk = [_Dart(d.line, d.end, d.start, not d.forward) for d in reversed(walk)]
            pts = _unroll(walk)
        senses = {d.forward for d in walk}
        if len(senses) != 1:
            continue  # mixed region: a dimer face, not a polytope
        color = BLACK if senses == {True} else WHITE
        # drop collinear passage points so vertices are strictly convex
        corners = []
        m = len(pts)
        for k in range(m):
            prev, here, nxt = pts[(k - 1) % m], pts[k], pts[(k + 1) % m]
            if (here - prev).cross(nxt - here) != 0:
                corners.append(here)
        polytopes.append(Polytope(color, RatPolygon(tuple(corners))))

    den = 1
    for p in polytopes:
        for v in p.polygon.vertices:
            den = math.lcm(den, v.x.denominator, v.y.denominator)
    return DualDimer(den, tuple(polytopes))
