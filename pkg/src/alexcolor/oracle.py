"""Exhaustive coloring counts, used as ground truth for the linear-algebra paths."""

from dataclasses import dataclass

from .config import BUDGETS
from .errors import BudgetExceeded, MuMismatchError, SpecializationError
from .rings import IntegersMod

MAX_CANDIDATES = BUDGETS.brute_candidates


@dataclass(frozen=True)
class BruteForceReport:
    diagram: str
    modulus: int
    images: tuple
    total: int
    count: int


def brute_force_count(d, phi, force=False):
    """Count maps ``A(D) -> Z/n`` satisfying the crossing relation everywhere.

    ``phi`` must land in ``GF(p)`` or ``Z/n``.  Arc values run as an odometer
    in declaration order; a crossing is tested as soon as its last arc is set.
    """
    R = phi.target
    if not isinstance(R, IntegersMod):
        raise SpecializationError(f"brute force needs a GF(p) or Z/n target, not {R.name}")
    if phi.mu != d.mu:
        raise MuMismatchError(f"diagram has {d.mu} components but the specialization has {phi.mu} images")
    n = R.n
    for i, x in enumerate(phi.images, start=1):
        if not R.is_unit(x):
            raise SpecializationError(f"image of t{i} ({x}) is not a unit mod {n}")
    arcs = d.arcs
    total = n ** len(arcs)
    if total > MAX_CANDIDATES and not force:
        raise BudgetExceeded(f"{total} candidate functions exceed {MAX_CANDIDATES}", required=total)

    index = d.arc_index()
    kappa = d.kappa
    # relation: f(a3) - (1 - t_k(a2)) f(a1) - t_k(a1) f(a2) == 0 (mod n)
    checks = [[] for _ in arcs]
    for c in d.crossings:
        i1, i2, i3 = index[c.over], index[c.under_right], index[c.under_left]
        c1 = (1 - phi.images[kappa[c.under_right] - 1]) % n
        c2 = phi.images[kappa[c.over] - 1] % n
        checks[max(i1, i2, i3)].append((i1, i2, i3, c1, c2))

    values = [0] * len(arcs)
    count = 0

    def ok(k):
        for i1, i2, i3, c1, c2 in checks[k]:
            if (values[i3] - c1 * values[i1] - c2 * values[i2]) % n:
                return False
        return True

    def descend(k):
        nonlocal count
        if k == len(arcs):
            count += 1
            return
        for v in range(n):
            values[k] = v
            if ok(k):
                descend(k + 1)

    descend(0)
    return BruteForceReport(d.name, n, tuple(phi.images), total, count)
