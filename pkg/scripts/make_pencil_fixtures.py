"""Generate the pencil-pair fixtures used by the projectivity tests.

    python scripts/make_pencil_fixtures.py [--count 24] [--seed 7]

A fixture is a pair of compatible pencils with one point per ray.  Random
pairs are kept when at least two distinct constructions exist; the script
reports how many draws that took, which is the honest success rate of the
construction on this distribution.
"""
import argparse
import itertools
import json
import random
from pathlib import Path

from tropgeom.pencils import iter_projectivities
from tropgeom.plane import RAYS, TropLine, is_coaxial_lines, point
from tropgeom.serialize import enc_point

ROOT = Path(__file__).resolve().parents[1]

REFERENCE = {
    "name": "reference",
    "source": {"vertex": ["0", "0"], "points": [["-2", "0"], ["0", "-2"], ["2", "2"]]},
    "target": {"vertex": ["12", "4"], "points": [["9", "4"], ["12", "2"], ["15", "7"]]},
}


def _fixture(name, L1, t1, L2, t2):
    return {
        "name": name,
        "source": {"vertex": list(enc_point(L1.vertex).values()), "points": [list(enc_point(p).values()) for p in t1]},
        "target": {"vertex": list(enc_point(L2.vertex).values()), "points": [list(enc_point(p).values()) for p in t2]},
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=24)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out", type=Path, default=ROOT / "tests" / "data" / "pencil_fixtures.json")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    fixtures = [REFERENCE]
    draws = 0
    while len(fixtures) < args.count:
        v1 = point(rng.randint(-5, 5), rng.randint(-5, 5))
        v2 = point(rng.randint(-15, 15), rng.randint(-15, 15))
        L1, L2 = TropLine.through_vertex(v1), TropLine.through_vertex(v2)
        if v1 == v2 or is_coaxial_lines(L1, L2):
            continue
        draws += 1
        t1 = tuple(L1.point_on(r, rng.randint(1, 6)) for r in RAYS)
        t2 = tuple(L2.point_on(r, rng.randint(1, 6)) for r in RAYS)
        found = list(itertools.islice(iter_projectivities(L1, t1, L2, t2), 2))
        if len(found) == 2:
            fixtures.append(_fixture(f"random-{draws}", L1, t1, L2, t2))
    body = ",\n ".join(json.dumps(f) for f in fixtures)
    args.out.write_text(f"[\n {body}\n]\n", encoding="utf-8")
    print(f"{len(fixtures) - 1} random fixtures from {draws} compatible draws")


if __name__ == "__main__":
    main()
