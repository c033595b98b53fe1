"""Census of empty lattice tetrahedra in a coordinate box.

Every empty class found is decomposed and printed with its ``(a, n)``
label, so the output doubles as a table of White's family up to the
volume reachable in the box.

    python scripts/white3d_census.py --box 3
"""

import argparse
import itertools
from collections import Counter

from simplexkit import linalg
from simplexkit.cayley import cayley_decompose
from simplexkit.simplex import LatticeSimplex, lattice_points_in_dilate, normal_form


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--box", type=int, default=3)
    args = p.parse_args(argv)

    pts = [q for q in itertools.product(range(args.box + 1), repeat=3) if any(q)]
    classes = {}
    for a, b, c in itertools.combinations(pts, 3):
        if linalg.det([a, b, c]):
            S = LatticeSimplex(((0, 0, 0), a, b, c))
            classes.setdefault(normal_form(S), S)

    labels = Counter()
    for S in classes.values():
        if len(lattice_points_in_dilate(S, 1)) == len(S.vertices):
            dec = cayley_decompose(S)
            # (a, n) and (a', n) with a*a' = 1 or a = -a' mod n are equivalent
            a = dec.a[0] % dec.n if dec.n > 1 else 0
            canon = min(x % dec.n for x in (a, -a, pow(a, -1, dec.n), -pow(a, -1, dec.n))) if dec.n > 1 else 0
            labels[(dec.n, canon)] += 1
    print(f"{len(classes)} tetrahedra classes in [0,{args.box}]^3, {sum(labels.values())} empty")
    print("  n   a   classes")
    for (n, a), k in sorted(labels.items()):
        print(f"{n:3d} {a:3d}   {k}")


if __name__ == "__main__":
    main()
