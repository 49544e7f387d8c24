#!/usr/bin/env python3
"""Render every catalog dimer (with zigzag overlays) and the fully traded
del-Pezzo base diagrams to SVG files under a target directory."""

import argparse
import pathlib

from tropdimer import catalog
from tropdimer.almost_toric import BaseDiagram, trade_all_corners
from tropdimer.render import render_diagram, render_dimer


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="gallery", help="output directory")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for name in catalog.NAMES:
        dimer = catalog.build(name)
        path = out / f"{name}.svg"
        path.write_text(render_dimer(dimer, ("edges", "zigzags")))
        print(f"wrote {path}")

    for name, polygon in catalog.MOMENT_POLYGONS.items():
        diagram = trade_all_corners(BaseDiagram(polygon))
        path = out / f"diagram-{name}.svg"
        path.write_text(render_diagram(diagram))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
