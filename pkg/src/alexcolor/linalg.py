"""Exact linear algebra over GF(p) and QQ; coloring spaces of diagrams."""

from dataclasses import dataclass
from itertools import product

from .alexander import build_matrix, specialize_matrix
from .config import BUDGETS
from .errors import BudgetExceeded, MuMismatchError, SpecializationError


def rref(rows, ring, ncols):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``.

    Pivots are the first nonzero entry scanning columns left to right.
    """
    A = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(A)) if not ring.is_zero(A[i][c])), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = ring.inv(A[r][c])
        A[r] = [ring.mul(inv, x) for x in A[r]]
        for i in range(len(A)):
            if i != r and not ring.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank_nullspace(m, ring=None, ncols=None):
    """Rank and a nullspace basis of a matrix over a field.

    Accepts a :class:`SpecializedMatrix` or a list of rows (then ``ring`` is
    required).  The basis is returned in reduced column echelon form: as rows
    it is the unique RREF of the kernel, so its leading coordinates are the
    earliest columns that can be chosen freely.
    """
    if ring is None:
        ring, rows, ncols = m.ring, m.rows(), m.shape[1]
    else:
        rows = [list(r) for r in m]
        ncols = len(rows[0]) if ncols is None else ncols
    if not ring.is_field:
        raise SpecializationError(f"{ring.name} is not a field")
    R, pivots = rref(rows, ring, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ring.zero] * ncols
        v[f] = ring.one
        for row, pc in zip(R, pivots):
            v[pc] = ring.neg(row[f])
        basis.append(v)
    if basis:
        basis, _ = rref(basis, ring, ncols)
    return len(pivots), basis


def in_span(vectors, v, ring, ncols):
    r0 = len(rref(vectors, ring, ncols)[1]) if vectors else 0
    r1 = len(rref(list(vectors) + [v], ring, ncols)[1])
    return r0 == r1


@dataclass(frozen=True)
class ColoringSpace:
    diagram: object
    phi: object
    j0: int
    basis: tuple

    @property
    def field(self):
        return self.phi.target

    def count(self):
        """Number of colorings (finite fields only)."""
        return self.field.order ** self.j0

    def vectors(self):
        arcs = self.diagram.arcs
        return [[f[a] for a in arcs] for f in self.basis]

    def contains(self, f):
        arcs = self.diagram.arcs
        v = [self.field.convert(f[a]) for a in arcs]
        return in_span(self.vectors(), v, self.field, len(arcs))


def coloring_space(d, phi):
    if phi.mu != d.mu:
        raise MuMismatchError(f"diagram has {d.mu} components but the specialization has {phi.mu} images")
    if not phi.target.is_field:
        raise SpecializationError(f"coloring spaces need a field target, got {phi.target.name}")
    m = specialize_matrix(build_matrix(d), phi)
    arcs = d.arcs
    if m.shape[0]:
        rank, basis = rank_nullspace(m)
    else:
        rank, basis = 0, [[phi.target.one if i == j else phi.target.zero for i in range(len(arcs))]
                          for j in range(len(arcs))]
    colorings = tuple({a: x for a, x in zip(arcs, v)} for v in basis)
    j0 = len(arcs) - rank
    assert j0 == len(colorings)
    return ColoringSpace(d, phi, j0, colorings)


def verify_coloring(d, phi, f):
    """True iff ``f(a3) = (1 - t_k(a2)) f(a1) + t_k(a1) f(a2)`` at every crossing."""
    R = phi.target
    missing = [a for a in d.arcs if a not in f]
    if missing:
        raise KeyError(f"coloring has no value for arcs {missing}")
    kappa = d.kappa
    val = {a: R.convert(x) for a, x in f.items()}
    for c in d.crossings:
        t_right = phi.images[kappa[c.under_right] - 1]
        t_over = phi.images[kappa[c.over] - 1]
        rhs = R.add(R.mul(R.sub(R.one, t_right), val[c.over]), R.mul(t_over, val[c.under_right]))
        if R.sub(val[c.under_left], rhs) != R.zero:
            return False
    return True


def enumerate_colorings(space, limit=BUDGETS.enumerate_limit):
    """All colorings over GF(p), lexicographic in the basis coefficients."""
    R = space.field
    if not hasattr(R, "order"):
        raise SpecializationError("enumeration needs a finite field")
    total = R.order ** space.j0
    if total > limit:
        raise BudgetExceeded(f"{total} colorings exceed the limit {limit}", required=total)
    arcs = space.diagram.arcs
    vecs = space.vectors()
    out = []
    for coeffs in product(range(R.order), repeat=space.j0):
        v = [R.zero] * len(arcs)
        for c, b in zip(coeffs, vecs):
            if c:
                v = [R.add(x, R.mul(c, y)) for x, y in zip(v, b)]
        out.append(dict(zip(arcs, v)))
    return out
