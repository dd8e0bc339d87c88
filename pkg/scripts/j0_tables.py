"""Print j0 of torus2_8 and whitehead over GF(p) for every pair of nonzero images.

Both the rank path and the elementary-ideal path are shown; the script exits
nonzero if they ever disagree.

    python3 scripts/j0_tables.py --primes 3 5
"""

import argparse
import sys
from itertools import combinations_with_replacement

from alexcolor.catalog import catalog_get
from alexcolor.ideals import j0_from_ideals
from alexcolor.linalg import coloring_space
from alexcolor.rings import GF, specialization


def rows_for(p, diagrams):
    for images in combinations_with_replacement(range(1, p), 2):
        phi = specialization(GF(p), images)
        by_rank = tuple(coloring_space(d, phi).j0 for d in diagrams)
        by_ideals = tuple(j0_from_ideals(d, phi) for d in diagrams)
        yield images, by_rank, by_ideals


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--primes", type=int, nargs="+", default=[3, 5])
    args = parser.parse_args(argv)
    diagrams = [catalog_get("torus2_8"), catalog_get("whitehead")]
    ok = True
    for p in args.primes:
        print(f"GF({p})   (t1, t2)   torus2_8  whitehead")
        for images, by_rank, by_ideals in rows_for(p, diagrams):
            mark = "" if by_rank == by_ideals else f"  MISMATCH ideals={by_ideals}"
            ok &= by_rank == by_ideals
            print(f"         {str(images):10s} {by_rank[0]:^9d} {by_rank[1]:^9d}{mark}")
        print()
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
