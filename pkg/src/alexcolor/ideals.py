"""Elementary ideals of a link diagram and their images under specializations.

Generators are minors of the Alexander matrix computed symbolically over
``Lambda_mu``.  Images under a specialization are computed as determinants of
specialized submatrices, which is legitimate because determinants commute
with ring homomorphisms; over GF(p) whole batches of minors are reduced at
once with numpy.
"""

from dataclasses import dataclass
from itertools import combinations, islice, product
from math import comb, gcd

import numpy as np

from .alexander import build_matrix, specialize_matrix
from .config import BUDGETS, PROBES
from .det import det
from .errors import BudgetExceeded, MuMismatchError, SpecializationError
from .laurent import LaurentPoly, normalize_unit
from .rings import GF, IntegerRing, LaurentRing, PrimeField, RationalField, SpecializationHom, evaluate

DEFAULT_BUDGET = BUDGETS.minors

ZERO_IDEAL = "zero_ideal"
FULL_RING = "full_ring"
PROPER = "proper"


@dataclass(frozen=True)
class IdealGenerators:
    """Generators of ``E_j``.

    ``trivial_flag`` is ``full_ring`` when ``j >= |A|``, when some generator
    is a unit, or when no probe specialization kills every generator;
    ``zero_ideal`` when ``j < |A| - |C|`` or every minor vanishes; ``proper``
    otherwise.  ``evidence`` says which rule decided the flag: ``definition``,
    ``generators`` or ``probe``.
    """

    j: int
    generators: tuple
    trivial_flag: str
    minors_computed: int = 0
    evidence: str = "definition"


def minor_det(m, rows, cols):
    """Determinant of the submatrix of ``m`` on ``rows`` x ``cols`` over ``Lambda_mu``."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    return det(m.submatrix(rows, cols), LaurentRing(m.mu))


def minor_count(d, j):
    n, m = len(d.arcs), len(d.crossings)
    k = n - j
    if k <= 0 or k > m:
        return 0
    return comb(m, k) * comb(n, k)


def _index_pairs(m, n, k):
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            yield rows, cols


def unit_pivot_reduce(rows, mu):
    """Eliminate unit entries of a presentation matrix over ``Lambda_mu``.

    Each step clears the column of a unit entry ``u`` at ``(r, c)`` by row
    operations, then drops row ``r`` and column ``c``.  The result presents the
    same module, so its ``(n' - j)``-minors generate the same ``E_j`` where
    ``n'`` is its column count.  Returns ``(rows, ncols)``.
    """
    A = [list(r) for r in rows]
    ncols = len(A[0]) if A else 0
    while A and ncols:
        best = None
        for i, row in enumerate(A):
            for c, x in enumerate(row):
                if not x.is_zero() and x.is_unit():
                    # fewest nonzeros in the pivot row and column keeps fill-in low
                    cost = sum(not y.is_zero() for y in row) * sum(not A[k][c].is_zero() for k in range(len(A)))
                    if best is None or cost < best[0]:
                        best = (cost, i, c)
        if best is None:
            break
        _, r, c = best
        inv = A[r][c] ** -1
        pivot_row = A.pop(r)
        for row in A:
            if not row[c].is_zero():
                f = row[c] * inv
                row[:] = [x - f * y for x, y in zip(row, pivot_row)]
        for row in A:
            del row[c]
        ncols -= 1
    A = [row for row in A if any(not x.is_zero() for x in row)]
    return A, ncols


def _generators_of(minors, j, computed, mu):
    seen = {}
    for g in minors:
        if not g.is_zero():
            seen.setdefault(normalize_unit(g), None)
    gens = tuple(sorted(seen, key=lambda p: (len(p.terms), sorted(p.terms.items()))))
    if not gens:
        return IdealGenerators(j, gens, ZERO_IDEAL, computed, "generators")
    if any(g.is_unit() for g in gens):
        return IdealGenerators(j, gens, FULL_RING, computed, "generators")
    # no maximal ideal of a probe field contains the generators
    for phi in probe_specializations(mu):
        if all(phi.target.is_zero(evaluate(phi, g)) for g in gens):
            return IdealGenerators(j, gens, PROPER, computed, "probe")
    return IdealGenerators(j, gens, FULL_RING, computed, "probe")


def _reduced_generators(d, j, budget):
    A, ncols = unit_pivot_reduce(build_matrix(d).rows(), d.mu)
    k = ncols - j
    if k <= 0:
        return IdealGenerators(j, (LaurentPoly.constant(1, d.mu),), FULL_RING, 0, "generators")
    if k > len(A):
        return IdealGenerators(j, (), ZERO_IDEAL, 0, "generators")
    required = comb(len(A), k) * comb(ncols, k)
    if required > budget:
        raise BudgetExceeded(f"E_{j} needs {required} minors of the reduced matrix, budget is {budget}",
                             required=required)
    R = LaurentRing(d.mu)
    minors = [det([[A[r][c] for c in cols] for r in rows], R)
              for rows, cols in _index_pairs(len(A), ncols, k)]
    return _generators_of(minors, j, len(minors), d.mu)


def _direct_generators(d, j, budget):
    n, m = len(d.arcs), len(d.crossings)
    required = minor_count(d, j)
    if required > budget:
        raise BudgetExceeded(f"E_{j} needs {required} minors, budget is {budget}", required=required)
    M = build_matrix(d)
    minors = [minor_det(M, rows, cols) for rows, cols in _index_pairs(m, n, n - j)]
    return _generators_of(minors, j, len(minors), d.mu)


def elementary_ideal_generators(d, j, budget=DEFAULT_BUDGET, method="reduced"):
    """Generators of ``E_j``, unit-normalized, deduplicated, zeros dropped.

    ``method="direct"`` takes every ``(|A|-j)``-minor of ``M(D)``.  The
    default ``"reduced"`` first eliminates unit pivots (see
    :func:`unit_pivot_reduce`) and takes the minors of what is left, which
    generate the same ideal with far fewer determinants.  Raises
    :class:`BudgetExceeded` when more than ``budget`` minors are needed.
    """
    n, m = len(d.arcs), len(d.crossings)
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j >= n:
        return IdealGenerators(j, (LaurentPoly.constant(1, d.mu),), FULL_RING)
    if j < n - m:
        return IdealGenerators(j, (), ZERO_IDEAL)
    if method == "reduced":
        return _reduced_generators(d, j, budget)
    if method == "direct":
        return _direct_generators(d, j, budget)
    raise ValueError(f"unknown method {method!r}")


# images under a specialization --------------------------------------------------

def _batch_det_mod_p(blocks, p):
    """Determinants mod p of a stack of square int64 matrices (shape B x k x k)."""
    A = blocks % p
    B, k, _ = A.shape
    result = np.ones(B, dtype=np.int64)
    inv_table = np.array([0] + [pow(x, -1, p) for x in range(1, p)], dtype=np.int64)
    idx = np.arange(B)
    for c in range(k):
        col = A[:, c:, c]
        nonzero = col != 0
        has = nonzero.any(axis=1)
        piv = np.argmax(nonzero, axis=1) + c
        result[~has] = 0
        swap = has & (piv != c)
        if swap.any():
            s = idx[swap]
            rc = A[s, c].copy()
            A[s, c] = A[s, piv[swap]]
            A[s, piv[swap]] = rc
            result[s] = (-result[s]) % p
        pv = A[idx, c, c]
        result = (result * pv) % p
        if c + 1 < k:
            factors = (A[:, c + 1:, c] * inv_table[pv][:, None]) % p
            A[:, c + 1:, :] = (A[:, c + 1:, :] - factors[:, :, None] * A[:, c, None, :]) % p
    return result % p


def _raw_minor_values(S, R, k, chunk):
    m, n = S.shape
    pairs = _index_pairs(m, n, k)
    if isinstance(R, PrimeField) and R.p < 2 ** 31:
        arr = np.array([[int(x) for x in row] for row in S.entries], dtype=np.int64)
        while True:
            batch = list(islice(pairs, chunk))
            if not batch:
                return
            rows = np.array([b[0] for b in batch], dtype=np.intp)
            cols = np.array([b[1] for b in batch], dtype=np.intp)
            blocks = arr[rows[:, :, None], cols[:, None, :]]
            yield from (int(v) for v in _batch_det_mod_p(blocks, R.p))
    elif isinstance(R, (PrimeField, RationalField, IntegerRing)):
        for rows, cols in pairs:
            yield det([[S.entries[r][c] for c in cols] for r in rows], R)
    else:
        raise SpecializationError(f"ideal images need a field or ZZ target, not {R.name}")


def _specialized_minor_values(d, j, phi, budget, chunk=4096):
    """Yield ``phi(minor)`` for every ``(|A|-j)``-minor in lexicographic order."""
    k = len(d.arcs) - j
    S = specialize_matrix(build_matrix(d), phi)
    for count, value in enumerate(_raw_minor_values(S, phi.target, k, min(chunk, budget + 1)), start=1):
        if count > budget:
            raise BudgetExceeded(f"budget of {budget} minors exhausted", required=minor_count(d, j))
        yield value


def ideal_image_is_zero(d, j, phi, budget=DEFAULT_BUDGET):
    """True iff ``phi(E_j) = 0``, i.e. every ``(|A|-j)``-minor maps to zero."""
    if phi.mu != d.mu:
        raise MuMismatchError(f"diagram has {d.mu} components but the specialization has {phi.mu} images")
    n, m = len(d.arcs), len(d.crossings)
    if j >= n:
        return False
    if j < n - m:
        return True
    R = phi.target
    for value in _specialized_minor_values(d, j, phi, budget):
        if not R.is_zero(value):
            return False
    return True


def ideal_image_gcd(d, j, phi, budget=DEFAULT_BUDGET):
    """Over ZZ: nonnegative generator of the principal ideal ``phi(E_j)``."""
    if not isinstance(phi.target, IntegerRing):
        raise SpecializationError("ideal_image_gcd needs a ZZ-valued specialization")
    n, m = len(d.arcs), len(d.crossings)
    if j >= n:
        return 1
    if j < n - m:
        return 0
    g = 0
    for value in _specialized_minor_values(d, j, phi, budget):
        g = gcd(g, value)
        if g == 1:
            break
    return g


def j0_from_ideals(d, phi, budget=DEFAULT_BUDGET):
    """Smallest ``j`` with ``phi(E_j) != 0``."""
    if not phi.target.is_field:
        raise SpecializationError(f"j0 is defined for field targets, not {phi.target.name}")
    n, m = len(d.arcs), len(d.crossings)
    for j in range(max(0, n - m), n + 1):
        if not ideal_image_is_zero(d, j, phi, budget):
            return j
    return n


def probe_specializations(mu, primes=PROBES.primes):
    """Every specialization into GF(p), p in ``primes``, with all images nonzero."""
    for p in primes:
        F = GF(p)
        for images in product(range(1, p), repeat=mu):
            yield SpecializationHom(F, images)
