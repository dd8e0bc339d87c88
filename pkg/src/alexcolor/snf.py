"""Smith normal form over ZZ and GF(p)[t], and coloring modules over a PID.

Invariant factors are reported in descending divisibility order
``d_0, d_1, ..., d_{n-1}`` (one per column, ``d_{j+1} | d_j``), so zero
factors come first and units last.  A module is described by the orders of
its cyclic summands, ``0`` standing for a free summand.
"""

from dataclasses import dataclass

from .alexander import build_matrix, specialize_matrix
from .errors import MuMismatchError, SpecializationError
from .rings import ZZ, IntegerRing, IntegersMod, LaurentPIDGF, LaurentRingGF, PolyRingGF


def identity(n, D):
    return [[D.one if i == j else D.zero for j in range(n)] for i in range(n)]


def matmul(A, B, D):
    if not A or not B:
        cols = len(B[0]) if B else 0
        return [[D.zero] * cols for _ in A]
    out = []
    for row in A:
        new = []
        for j in range(len(B[0])):
            acc = D.zero
            for k, x in enumerate(row):
                if not D.is_zero(x) and not D.is_zero(B[k][j]):
                    acc = D.add(acc, D.mul(x, B[k][j]))
            new.append(acc)
        out.append(new)
    return out


@dataclass(frozen=True)
class InvariantFactors:
    domain: object
    factors: tuple

    def nonunit(self):
        return tuple(d for d in self.factors if not self.domain.is_unit(d))

    def formatted(self):
        return [self.domain.format(d) for d in self.factors]


@dataclass(frozen=True)
class SmithForm:
    factors: InvariantFactors
    P: list
    Q: list
    S: list


def _smith_ascending(X, D):
    """Standard SNF ``U X V = diag(s_1 | s_2 | ...)`` with explicit transforms."""
    m = len(X)
    n = len(X[0]) if m else 0
    A = [list(r) for r in X]
    U = identity(m, D)
    V = identity(n, D)

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for M in (A, V):
            for row in M:
                row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        for M in (A, U):
            M[dst] = [D.sub(x, D.mul(q, y)) for x, y in zip(M[dst], M[src])]

    def add_col(dst, src, q):
        for M in (A, V):
            for row in M:
                row[dst] = D.sub(row[dst], D.mul(q, row[src]))

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if not D.is_zero(A[i][j]) and (best is None or D.norm(A[i][j]) < best[0]):
                        best = (D.norm(A[i][j]), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            pivot = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if not D.is_zero(A[i][t]):
                    q, r = D.divmod(A[i][t], pivot)
                    add_row(i, t, q)
                    dirty = dirty or not D.is_zero(r)
            for j in range(t + 1, n):
                if not D.is_zero(A[t][j]):
                    q, r = D.divmod(A[t][j], pivot)
                    add_col(j, t, q)
                    dirty = dirty or not D.is_zero(r)
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if not D.is_zero(D.divmod(A[i][j], pivot)[1])), None)
            if bad is None:
                break
            # row t picks up an entry the pivot does not divide
            add_row(t, bad[0], D.neg(D.one))
        if best is None:
            break
        c, u = D.canonical(A[t][t])
        if c != A[t][t]:
            A[t] = [D.mul(u, x) for x in A[t]]
            U[t] = [D.mul(u, x) for x in U[t]]
    return A, U, V


def smith_normal_form(X, D):
    """Return a :class:`SmithForm` with ``P X Q = S`` in descending order.

    ``S`` is ``m x n`` with ``d_j`` at row ``j - max(0, n - m)``, column ``j``.
    """
    m = len(X)
    n = len(X[0]) if m else 0
    X = [[D.convert(x) for x in row] for row in X]
    A, U, V = _smith_ascending(X, D)
    r = min(m, n)
    asc = [A[i][i] for i in range(r)]
    # columns reversed; the first min(m, n) rows reversed, any extra rows kept
    col_perm = list(range(n - 1, -1, -1))
    row_perm = list(range(r - 1, -1, -1)) + list(range(r, m))
    P = [U[i] for i in row_perm]
    Q = [[row[j] for j in col_perm] for row in V]
    S = [[A[i][j] for j in col_perm] for i in row_perm]
    factors = [D.zero] * (n - r) + asc[::-1]
    return SmithForm(InvariantFactors(D, tuple(factors)), P, Q, S)


def factor_matrix(factors, m, D):
    n = len(factors.factors)
    offset = max(0, n - m)
    S = [[D.zero] * n for _ in range(m)]
    for j, d in enumerate(factors.factors):
        if j >= offset:
            S[j - offset][j] = d
    return S


# modules over a PID ------------------------------------------------------------

@dataclass(frozen=True)
class ModuleSpec:
    """Direct sum of cyclic modules ``R/(o)``; ``o = 0`` is a free summand."""

    domain: object
    cyclic_orders: tuple

    def __post_init__(self):
        D = self.domain
        orders = tuple(D.normal(D.convert(o)) for o in self.cyclic_orders)
        object.__setattr__(self, "cyclic_orders", orders)

    @classmethod
    def cyclic(cls, n, domain=ZZ):
        return cls(domain, (n,))


@dataclass(frozen=True)
class ModuleDecomposition:
    domain: object
    factors: tuple

    def order(self):
        """Cardinality, or ``None`` when some summand is infinite."""
        D = self.domain
        total = 1
        for f in self.factors:
            if D.is_zero(f):
                return None
            total *= abs(f) if isinstance(D, IntegerRing) else D.p ** f.degree
        return total

    def formatted(self):
        return [self.domain.format(f) for f in self.factors]

    def describe(self):
        if not self.factors:
            return "0"
        name = "Z" if isinstance(self.domain, IntegerRing) else self.domain.name
        parts = []
        for f in self.factors:
            parts.append(name if self.domain.is_zero(f) else f"{name}/({self.domain.format(f)})")
        return " + ".join(parts)


def _gcd_star(D, a, b):
    """gcd with ``gcd(0, b) = b``, normalized."""
    return D.normal(D.gcd(a, b))


def hom_cyclic(d, m_spec):
    """``Hom(R/(d), M)`` for ``M`` a sum of cyclic modules."""
    D = m_spec.domain
    d = D.convert(d)
    out = []
    for o in m_spec.cyclic_orders:
        g = _gcd_star(D, d, o)
        if not D.is_unit(g):
            out.append(g)
    return ModuleDecomposition(D, tuple(out))


def euclidean_domain_for(target):
    """Domain in which the Smith form of ``phi(M(D))`` is computed (ZZ for ``Z/n`` lifts)."""
    if isinstance(target, (IntegerRing, IntegersMod)):
        return ZZ
    if isinstance(target, LaurentRingGF):
        return PolyRingGF(target.p)
    raise SpecializationError(f"{target.name} is not ZZ or GF(p)[t^±1]")


def module_domain_for(target):
    """Domain of the coefficient ring seen by coloring modules (``t`` a unit for Laurent targets)."""
    if isinstance(target, LaurentRingGF):
        return LaurentPIDGF(target.p)
    return euclidean_domain_for(target)


def cleared_matrix(d, phi):
    """``phi(M(D))`` over a Euclidean domain; Laurent rows are shifted by ``t^k`` into ``GF(p)[t]``."""
    if phi.mu != d.mu:
        raise MuMismatchError(f"diagram has {d.mu} components but the specialization has {phi.mu} images")
    D = euclidean_domain_for(phi.target)
    m = specialize_matrix(build_matrix(d), phi)
    rows = m.rows()
    if isinstance(phi.target, LaurentRingGF):
        R = phi.target
        cleared = []
        for row in rows:
            low = min((min(k for (k,) in x.terms) for x in row if not x.is_zero()), default=0)
            cleared.append([R.poly_part(x, low) for x in row])
        rows = cleared
    return D, rows, len(d.arcs)


def alexander_invariant_factors(d, phi):
    """Invariant factors of ``phi(M(D))``, normalized in the target's coefficient ring.

    For a ``Z/n`` target these are the factors over ZZ of the entrywise lift to ``0..n-1``.
    """
    D, rows, n = cleared_matrix(d, phi)
    R = module_domain_for(phi.target)
    if not rows:
        return InvariantFactors(R, (R.zero,) * n)
    factors = smith_normal_form(rows, D).factors.factors
    return InvariantFactors(R, tuple(R.normal(f) for f in factors))


def coloring_module(d, phi, m_spec=None):
    """``Hom(coker phi(M(D)), M)`` as a sum of cyclic modules.

    ``phi`` lands in ZZ or GF(p)[t^±1] with ``M`` given by ``m_spec``.  A
    ``Z/n`` target is also accepted, with ``M = Z/n`` implied: colorings mod
    ``n`` only see the matrix mod ``n``, so any integer lift presents them.
    """
    if isinstance(phi.target, IntegersMod):
        n = phi.target.n
        if m_spec is not None and m_spec != ModuleSpec.cyclic(n):
            raise SpecializationError(f"a Z/{n} specialization fixes M = Z/{n}")
        m_spec = ModuleSpec.cyclic(n)
    elif m_spec is None:
        raise SpecializationError("coloring_module needs a module M for this target")
    D = module_domain_for(phi.target)
    if m_spec.domain != D:
        raise SpecializationError(f"module over {m_spec.domain.name} but specialization lands in {D.name}")
    out = []
    for f in alexander_invariant_factors(d, phi).factors:
        out.extend(hom_cyclic(f, m_spec).factors)
    return ModuleDecomposition(D, tuple(out))


def diagram_stability_check(d1, d2, phi):
    if d1.mu != d2.mu:
        raise MuMismatchError(f"diagrams have {d1.mu} and {d2.mu} components")
    f1 = alexander_invariant_factors(d1, phi)
    f2 = alexander_invariant_factors(d2, phi)
    key = lambda fs: sorted(map(repr, fs.nonunit()))
    return key(f1) == key(f2)


