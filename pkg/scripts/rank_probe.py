"""Count extremal generators of random tropical cones.

    python scripts/rank_probe.py [--dim 3] [--gens 6] [--trials 200] [--seed 1]

Draws ``--gens`` random integer vectors in T^dim, reduces them to a
minimal generating set and tallies the sizes.  Sizes above ``--dim`` are
cones that need more generators than the ambient dimension.
"""
import argparse
import random
from collections import Counter

from tropgeom.linalg import minimal_generating_set


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=3)
    ap.add_argument("--gens", type=int, default=6)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--range", type=int, default=5, help="coordinates drawn from [-range, range]")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    sizes = Counter()
    example = None
    for _ in range(args.trials):
        gens = [tuple(rng.randint(-args.range, args.range) for _ in range(args.dim)) for _ in range(args.gens)]
        basis = minimal_generating_set(gens)
        sizes[len(basis)] += 1
        if example is None and len(basis) > args.dim:
            example = basis
    print(f"minimal generating set sizes for {args.gens} random vectors in T^{args.dim}:")
    for k in sorted(sizes):
        print(f"  {k}: {sizes[k]}")
    above = sum(c for k, c in sizes.items() if k > args.dim)
    print(f"{above}/{args.trials} cones need more than {args.dim} generators")
    if example is not None:
        print("first such cone:", [tuple(int(x) for x in v) for v in example])


if __name__ == "__main__":
    main()
