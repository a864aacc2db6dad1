"""Render every reference scene to SVG.

    python scripts/render_scenes.py [--scenes DIR] [--out DIR]

With the defaults this regenerates the golden files used by the tests.
"""
import argparse
import json
from pathlib import Path

from tropgeom.render import render_document

ROOT = Path(__file__).resolve().parents[1]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scenes", type=Path, default=ROOT / "tests" / "data" / "scenes")
    ap.add_argument("--out", type=Path, default=ROOT / "tests" / "data" / "golden")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for scene in sorted(args.scenes.glob("*.json")):
        svg = render_document(json.loads(scene.read_text(encoding="utf-8")))
        target = args.out / f"{scene.stem}.svg"
        target.write_text(svg, encoding="utf-8", newline="\n")
        print(f"{scene.name} -> {target.relative_to(ROOT) if target.is_relative_to(ROOT) else target}")


if __name__ == "__main__":
    main()
