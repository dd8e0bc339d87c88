"""List the Fox tricolorings (t -> -1 over GF(3)) of catalog knots.

    python3 scripts/fox_colorings.py knot6_1 knot9_46
"""

import argparse
import sys

from alexcolor.catalog import KEYS, catalog_get
from alexcolor.linalg import coloring_space, enumerate_colorings, verify_coloring
from alexcolor.oracle import brute_force_count
from alexcolor.rings import GF, specialization


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("keys", nargs="*", default=["trefoil", "knot6_1", "knot9_46"])
    parser.add_argument("--prime", type=int, default=3)
    parser.add_argument("--show", action="store_true", help="print every coloring")
    args = parser.parse_args(argv)
    unknown = set(args.keys) - set(KEYS)
    if unknown:
        parser.error(f"unknown catalog keys: {', '.join(sorted(unknown))}")
    phi = specialization(GF(args.prime), [-1])
    for key in args.keys:
        d = catalog_get(key)
        if d.mu != 1:
            print(f"{key}: skipped, not a knot")
            continue
        space = coloring_space(d, phi)
        colorings = enumerate_colorings(space, limit=10_000) if space.count() <= 10_000 else []
        assert all(verify_coloring(d, phi, f) for f in colorings)
        brute = brute_force_count(d, phi, force=True).count if len(d.arcs) <= 10 else None
        print(f"{key}: arcs={len(d.arcs)} j0={space.j0} colorings={space.count()} brute_force={brute}")
        if args.show:
            for f in colorings:
                print("   ", " ".join(f"{a}={f[a]}" for a in d.arcs))
    return 0


if __name__ == "__main__":
    sys.exit(main())
