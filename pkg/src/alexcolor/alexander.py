"""The multivariate Alexander matrix of a diagram and its specializations."""

from dataclasses import dataclass

from .errors import MuMismatchError
from .laurent import LaurentPoly, reduce_to_single_variable
from .rings import evaluate


@dataclass(frozen=True)
class AlexanderMatrix:
    """Crossings x arcs matrix over ``Lambda_mu``; rows and columns follow file order."""

    mu: int
    row_index: tuple
    col_index: tuple
    entries: tuple

    @property
    def shape(self):
        return len(self.row_index), len(self.col_index)

    def rows(self):
        return [list(r) for r in self.entries]

    def submatrix(self, rows, cols):
        return [[self.entries[i][j] for j in cols] for i in rows]


@dataclass(frozen=True)
class SpecializedMatrix:
    ring: object
    row_index: tuple
    col_index: tuple
    entries: tuple

    @property
    def shape(self):
        return len(self.row_index), len(self.col_index)

    def rows(self):
        return [list(r) for r in self.entries]


def build_matrix(d):
    """Row ``c``: ``+(1 - t_k(a2))`` at a1, ``+t_k(a1)`` at a2, ``-1`` at a3, accumulated."""
    mu = d.mu
    kappa = d.kappa
    col = d.arc_index()
    t = [LaurentPoly.var(i, mu) for i in range(1, mu + 1)]
    zero = LaurentPoly(mu)
    one = LaurentPoly.constant(1, mu)
    rows = []
    for c in d.crossings:
        row = [zero] * len(col)
        row[col[c.over]] = row[col[c.over]] + (one - t[kappa[c.under_right] - 1])
        row[col[c.under_right]] = row[col[c.under_right]] + t[kappa[c.over] - 1]
        row[col[c.under_left]] = row[col[c.under_left]] - one
        rows.append(tuple(row))
    return AlexanderMatrix(mu, tuple(range(1, len(d.crossings) + 1)), d.arcs, tuple(rows))


def specialize_matrix(m, phi):
    if phi.mu != m.mu:
        raise MuMismatchError(f"specialization has {phi.mu} images but the matrix has mu = {m.mu}")
    cache = {}

    def ev(x):
        if x not in cache:
            cache[x] = evaluate(phi, x)
        return cache[x]

    entries = tuple(tuple(ev(x) for x in row) for row in m.entries)
    return SpecializedMatrix(phi.target, m.row_index, m.col_index, entries)


def reduce_matrix(m):
    """Entrywise ``t_i -> t``."""
    entries = tuple(tuple(reduce_to_single_variable(x) for x in row) for row in m.entries)
    return AlexanderMatrix(1, m.row_index, m.col_index, entries)
