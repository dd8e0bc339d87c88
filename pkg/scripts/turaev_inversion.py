"""Show that the Turaev link T and its inverse T^inv have different coloring spaces.

Over GF(7) with t1 -> 3, t2 -> 1 the coloring space of T is 3-dimensional and
that of T^inv is 2-dimensional.  The second elementary ideal explains the gap:
its image vanishes for T but not for T^inv.
"""

import argparse
import sys

from alexcolor.catalog import catalog_get
from alexcolor.diagram import invert_diagram
from alexcolor.ideals import elementary_ideal_generators, ideal_image_is_zero, j0_from_ideals
from alexcolor.laurent import format_laurent
from alexcolor.linalg import coloring_space
from alexcolor.rings import GF, specialization


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--prime", type=int, default=7)
    parser.add_argument("--images", type=int, nargs=2, default=[3, 1])
    parser.add_argument("--ideals", action="store_true", help="also compute E_1..E_3 generator flags")
    args = parser.parse_args(argv)
    phi = specialization(GF(args.prime), args.images)
    T = catalog_get("turaev_T")
    for d in (T, invert_diagram(T)):
        space = coloring_space(d, phi)
        print(f"{d.name}: arcs={len(d.arcs)} j0(rank)={space.j0} j0(ideals)={j0_from_ideals(d, phi)} "
              f"E_2 image zero={ideal_image_is_zero(d, 2, phi)}")
        if args.ideals:
            for j in (1, 2, 3):
                g = elementary_ideal_generators(d, j)
                sample = ", ".join(format_laurent(x) for x in g.generators[:3])
                print(f"    E_{j}: {g.trivial_flag} ({g.evidence}), {len(g.generators)} generators, e.g. {sample}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
