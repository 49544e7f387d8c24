"""Static SVG rendering of dimers on the fundamental domain.

Output is deterministic byte-for-byte: coordinates are exact rationals
formatted with a fixed precision, and element order follows storage order.
White polytopes are drawn hollow, black ones filled; graph edges are line
elements through their anchors; zigzag overlays are polyline groups.
"""

from __future__ import annotations

from fractions import Fraction

from .dimer import BLACK, DualDimer, build_graph, validate, zigzag_paths
from .lattice import Vec2

SCALE = 240
MARGIN = 24

ZIGZAG_COLORS = ("#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085")


def _fmt(q) -> str:
    return f"{float(q):.3f}"


def _pt(p: Vec2) -> str:
    # y is flipped so the lattice y-axis points up on screen
    return f"{_fmt(MARGIN + p.x * SCALE)},{_fmt(MARGIN + (1 - p.y) * SCALE)}"


def _canonical_lift(polygon):
    least = min(polygon.vertices)
    shift = Vec2(
        -(least.x.numerator // least.x.denominator),
        -(least.y.numerator // least.y.denominator),
    )
    return polygon.translate(shift)


def render_dimer(dimer: DualDimer, show=()) -> str:
    """SVG text; ``show`` may contain "edges" and "zigzags"."""
    size = SCALE + 2 * MARGIN
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{SCALE}" height="{SCALE}" '
        'fill="none" stroke="#cccccc" stroke-dasharray="4 4"/>',
    ]
    for p in dimer.polytopes:
        lifted = _canonical_lift(p.polygon)
        points = " ".join(_pt(v) for v in lifted.vertices)
        if p.color == BLACK:
            style = 'fill="#222222" stroke="#222222"'
        else:
            style = 'fill="none" stroke="#222222"'
        out.append(f'<polygon points="{points}" {style} stroke-width="1.5"/>')

    if "edges" in show and validate(dimer).ok:
        graph = build_graph(dimer)
        for e in graph.edges:
            cw = dimer.polytopes[e.white].polygon.centroid()
            a = _pt(cw)
            b = _pt(cw + e.displacement)  # the black centroid's compatible lift
            out.append(
                f'<line x1="{a.split(",")[0]}" y1="{a.split(",")[1]}" '
                f'x2="{b.split(",")[0]}" y2="{b.split(",")[1]}" '
                'stroke="#888888" stroke-width="0.8"/>'
            )

    if "zigzags" in show and validate(dimer).ok:
        for k, path in enumerate(zigzag_paths(dimer)):
            color = ZIGZAG_COLORS[k % len(ZIGZAG_COLORS)]
            pts = [path.steps[0].start] + [s.end for s in path.steps]
            base = pts[0] - Vec2(
                pts[0].x.numerator // pts[0].x.denominator,
                pts[0].y.numerator // pts[0].y.denominator,
            )
            shift = base - pts[0]
            points = " ".join(_pt(p + shift) for p in pts)
            out.append(f'<g class="zigzag" stroke="{color}" fill="none">')
            out.append(f'<polyline points="{points}" stroke-width="2"/>')
            out.append("</g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_diagram(diagram) -> str:
    """SVG of a base diagram: boundary, nodes as crosses, cut segments."""
    if diagram.boundary is not None:
        xs = [v.x for v in diagram.boundary.vertices]
        ys = [v.y for v in diagram.boundary.vertices]
    else:
        xs = [n.position.x for n in diagram.nodes] or [Fraction(0)]
        ys = [n.position.y for n in diagram.nodes] or [Fraction(0)]
    lo = Vec2(min(xs) - 1, min(ys) - 1)
    hi = Vec2(max(xs) + 1, max(ys) + 1)
    span = max(hi.x - lo.x, hi.y - lo.y)
    unit = Fraction(SCALE) / span

    def pt(p: Vec2) -> str:
        x = MARGIN + (p.x - lo.x) * unit
        y = MARGIN + (hi.y - p.y) * unit
        return f"{_fmt(x)},{_fmt(y)}"

    size = SCALE + 2 * MARGIN
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    if diagram.boundary is not None:
        points = " ".join(pt(v) for v in diagram.boundary.vertices)
        out.append(f'<polygon points="{points}" fill="none" stroke="#222222" stroke-width="1.5"/>')
    for cut in diagram.cuts:
        a = pt(cut.start)
        b = pt(cut.start + cut.direction.scale(Fraction(3, 2)))
        out.append(
            f'<line x1="{a.split(",")[0]}" y1="{a.split(",")[1]}" '
            f'x2="{b.split(",")[0]}" y2="{b.split(",")[1]}" '
            'stroke="#c0392b" stroke-width="1" stroke-dasharray="3 3"/>'
        )
    for node in diagram.nodes:
        c = pt(node.position)
        cx, cy = c.split(",")
        out.append(
            f'<text x="{cx}" y="{cy}" font-size="14" text-anchor="middle" '
            f'dominant-baseline="middle">×</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
