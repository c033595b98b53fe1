"""Run one verification sweep with custom parameters and print its summary.

Examples:

    python scripts/sweep.py thm31 --n-max 120
    python scripts/sweep.py roundtrip --count 1000 --seed 7
    python scripts/sweep.py prop15 --n-max 24 --ds 2 4 6
"""

import argparse
import sys

from simplexkit import suites


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("suite", choices=sorted(suites.SUITES))
    p.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    p.add_argument("--count", type=int, help="sample size for randomized sweeps")
    p.add_argument("--n-max", type=int)
    p.add_argument("--box", type=int, default=3, help="coordinate box for white3d")
    p.add_argument("--ds", type=int, nargs="+", help="tuple lengths (prop15) or half-dimensions (thm18)")
    p.add_argument("--show", type=int, default=5, help="violations to print")
    args = p.parse_args(argv)

    kw = {}
    if args.suite == "white3d":
        kw["box"] = args.box
    if args.suite in ("prop24", "roundtrip", "par-oracle"):
        kw["seed"] = args.seed
    if args.count is not None:
        kw["count"] = args.count
    if args.n_max is not None:
        kw["n_max"] = args.n_max
    if args.ds:
        kw["ds"] = tuple(args.ds)

    res = suites.SUITES[args.suite](**kw)
    print(res.summary())
    for v in res.violations[: args.show]:
        print("  violation:", v)
    return 0 if res.passed else 1


if __name__ == "__main__":
    sys.exit(main())
