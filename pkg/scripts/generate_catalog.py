#!/usr/bin/env python3
"""Regenerate the frozen catalog documents under src/tropdimer/catalog/."""

import pathlib

from tropdimer import catalog
from tropdimer.io import serialize_dimer

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "tropdimer" / "catalog"


def main():
    OUT.mkdir(exist_ok=True)
    for name in catalog.NAMES:
        text = serialize_dimer(catalog.build(name))
        path = OUT / f"{name}.json"
        path.write_text(text)
        print(f"wrote {path} ({len(text)} bytes)")


if __name__ == "__main__":
    main()
