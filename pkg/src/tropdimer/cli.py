"""Command-line surface.

Exit codes: 0 success, 1 domain failure (axiom violations, impossible
operations), 2 usage or parse failure (bad flags, malformed JSON, schema
violations).  Set TROPDIMER_COLOR=1 for ANSI-colored status lines.
"""

from __future__ import annotations

import argparse
import functools
import json
import os
import sys
from fractions import Fraction

from . import catalog as cat
from .dimer import (
    build_graph,
    dimer_to_tropical_fan,
    faces,
    validate,
    zigzag_paths,
)
from .io import SchemaError, parse_dimer, serialize_dimer, serialize_diagram
from .kasteleyn import (
    determinant,
    enumerate_matchings,
    format_laurent,
    kasteleyn_matrix,
    make_gauge,
)
from .mutation import (
    compare_up_to_unimodular,
    euler_characteristic,
    exact_assignment,
    mutate_face,
    mutation_directions,
    seed_directions,
)
from .render import render_diagram, render_dimer
from .tropical import genus_degree


def _color(text: str, code: str) -> str:
    if os.environ.get("TROPDIMER_COLOR") == "1":
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _load_input(source: str):
    """(DualDimer, weights) from `catalog:<name>` or a file path."""
    if source.startswith("catalog:"):
        text = cat.catalog_text(source.split(":", 1)[1])
    else:
        with open(source, "rb") as fh:
            text = fh.read().decode("utf-8")
    return parse_dimer(text)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


@functools.lru_cache(maxsize=1)
def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="tropdimer")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        p = sub.add_parser(name, **kw)
        return p

    for name in ("validate", "graph", "zigzags", "fan", "euler", "directions", "matchings"):
        p = add(name)
        p.add_argument("input")
        p.add_argument("--json", action="store_true")

    p = add("kasteleyn")
    p.add_argument("input")
    p.add_argument("--gauge", default="paper")

    p = add("mutate")
    p.add_argument("input")
    p.add_argument("--face", type=int, required=True)
    p.add_argument("--out")

    p = add("compare-seed")
    p.add_argument("input")
    p.add_argument("fan", choices=sorted(cat.DEL_PEZZO_FANS))

    p = add("genus")
    p.add_argument("degree", type=int)

    p = add("render")
    p.add_argument("input")
    p.add_argument("--show", default="", help="comma-separated layers: edges,zigzags")
    p.add_argument("--out")

    p = add("catalog")
    p.add_argument("name", nargs="?")

    p = add("atf")
    atf = p.add_subparsers(dest="atf_command", required=True)
    q = atf.add_parser("trade")
    q.add_argument("surface", choices=sorted(cat.MOMENT_POLYGONS))
    q.add_argument("--corner", type=int, default=None, help="default: trade every corner")
    q.add_argument("--out")
    q.add_argument("--render", action="store_true")
    for name in ("inner", "outer"):
        q = atf.add_parser(name)
        q.add_argument("surface", choices=sorted(cat.MOMENT_POLYGONS))
        if name == "outer":
            q.add_argument("--depth", default="1/2")
    q = atf.add_parser("exchange")
    q.add_argument("surface", choices=sorted(cat.MOMENT_POLYGONS) + ["local"])
    q = atf.add_parser("an")
    q.add_argument("n", type=int)

    return top


def _curve_summary(label, curve, diagram):
    from .almost_toric import admissible
    from .tropical import check_balancing

    lines = [
        f"{label}: {len(curve.curve.vertices)} vertices, "
        f"{len(curve.curve.edges)} edges, {len(curve.attachments)} attachments",
        f"admissible: {str(admissible(curve, diagram)).lower()}",
        f"balanced: {str(check_balancing(curve.curve)).lower()}",
    ]
    return "\n".join(lines) + "\n"


def _run_atf(args) -> int:
    from .almost_toric import (
        BaseDiagram,
        an_chain_curve,
        build_inner_torus,
        build_outer_torus,
        local_model,
        nodal_trade,
        nodal_trade_exchange,
        trade_all_corners,
    )

    if args.atf_command == "trade":
        diagram = BaseDiagram(cat.MOMENT_POLYGONS[args.surface])
        if args.corner is None:
            diagram = trade_all_corners(diagram)
        else:
            diagram = nodal_trade(diagram, args.corner)
        _emit(render_diagram(diagram) if args.render else serialize_diagram(diagram), args.out)
        return 0
    if args.atf_command in ("inner", "outer"):
        diagram = trade_all_corners(BaseDiagram(cat.MOMENT_POLYGONS[args.surface]))
        if args.atf_command == "inner":
            curve = build_inner_torus(diagram)
        else:
            curve = build_outer_torus(diagram, Fraction(args.depth))
        sys.stdout.write(_curve_summary(f"{args.atf_command} torus", curve, diagram))
        return 0
    if args.atf_command == "exchange":
        if args.surface == "local":
            diagram, curve = local_model()
            curve = nodal_trade_exchange(diagram, curve, 0)
        else:
            diagram = trade_all_corners(BaseDiagram(cat.MOMENT_POLYGONS[args.surface]))
            curve = build_outer_torus(diagram, Fraction(1, 2))
            for i in range(len(diagram.nodes)):
                curve = nodal_trade_exchange(diagram, curve, i)
        sys.stdout.write(_curve_summary("exchanged curve", curve, diagram))
        return 0
    if args.atf_command == "an":
        diagram, curve = an_chain_curve(args.n)
        sys.stdout.write(_curve_summary(f"A{args.n} chain", curve, diagram))
        return 0
    return 2


def _run(args) -> int:
    if args.command == "genus":
        print(genus_degree(args.degree))
        return 0
    if args.command == "catalog":
        if args.name is None:
            for name in cat.NAMES:
                print(name)
            return 0
        sys.stdout.write(cat.catalog_text(args.name))
        return 0
    if args.command == "atf":
        return _run_atf(args)

    dimer, weights = _load_input(args.input)

    if args.command == "validate":
        report = validate(dimer)
        if args.json:
            print(json.dumps({
                "ok": report.ok,
                "immersed": report.self_intersecting,
            }))
        elif report.ok:
            print(_color("ok", "32") + (" (immersed)" if report.self_intersecting else ""))
        else:
            for line in report.lines():
                print(_color(line, "31"))
        return 0 if report.ok else 1

    if args.command == "graph":
        graph = build_graph(dimer)
        if args.json:
            print(json.dumps({
                "whites": len(graph.whites),
                "blacks": len(graph.blacks),
                "edges": [e.edge_id for e in graph.edges],
            }))
        else:
            print(f"{len(graph.whites)} white, {len(graph.blacks)} black, {len(graph.edges)} edges")
            for e in graph.edges:
                print(f"  {e.edge_id}")
        return 0

    if args.command == "zigzags":
        classes = [(p.cls.a, p.cls.b) for p in zigzag_paths(dimer)]
        if args.json:
            print(json.dumps(classes))
        else:
            for a, b in classes:
                print(f"<{a},{b}>")
        return 0

    if args.command == "fan":
        fan = dimer_to_tropical_fan(dimer)
        rays = [((int(e.ray.x), int(e.ray.y)), e.multiplicity) for e in fan.edges]
        if args.json:
            print(json.dumps(rays))
        else:
            for (x, y), m in rays:
                print(f"({x},{y}) x{m}")
        return 0

    if args.command == "kasteleyn":
        graph = build_graph(dimer)
        gauge = make_gauge(graph, args.gauge)
        print(format_laurent(determinant(kasteleyn_matrix(dimer, gauge))))
        return 0

    if args.command == "matchings":
        graph = build_graph(dimer)
        found = enumerate_matchings(graph)
        if args.json:
            print(json.dumps([list(m) for m in found]))
        else:
            print(len(found))
        return 0

    if args.command == "mutate":
        all_faces = faces(dimer)
        if not (0 <= args.face < len(all_faces)):
            raise ValueError("face not found")
        if not weights:
            weights = exact_assignment(dimer)
        result = mutate_face(dimer, all_faces[args.face], weights)
        if args.out:
            _emit(serialize_dimer(result.dimer), args.out)
        else:
            sys.stdout.write(serialize_dimer(result.dimer))
        print(f"immersed: {str(result.immersed).lower()}")
        return 0

    if args.command == "euler":
        value = euler_characteristic(dimer)
        print(json.dumps({"euler": value}) if args.json else value)
        return 0

    if args.command == "directions":
        dirs = [(c.a, c.b) for c in mutation_directions(dimer)]
        if args.json:
            print(json.dumps(dirs))
        else:
            for a, b in dirs:
                print(f"<{a},{b}>")
        return 0

    if args.command == "compare-seed":
        want = seed_directions(cat.DEL_PEZZO_FANS[args.fan])
        got = mutation_directions(dimer)
        m = compare_up_to_unimodular(want, got)
        if m is None:
            print("no unimodular map")
            return 1
        print(f"[[{m.a},{m.b}],[{m.c},{m.d}]]")
        return 0

    if args.command == "render":
        show = tuple(s for s in args.show.split(",") if s)
        _emit(render_dimer(dimer, show), args.out)
        return 0

    return 2


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0,) else 0
    try:
        return _run(args)
    except json.JSONDecodeError as exc:
        print(
            _color(f"error: malformed JSON at line {exc.lineno} column {exc.colno}", "31"),
            file=sys.stderr,
        )
        return 2
    except SchemaError as exc:
        print(_color(f"error: {exc}", "31"), file=sys.stderr)
        return 2
    except (UnicodeDecodeError, FileNotFoundError, IsADirectoryError) as exc:
        print(_color(f"error: {exc}", "31"), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(_color(f"error: {exc}", "31"), file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
