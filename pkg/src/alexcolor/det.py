"""Determinants over integral domains given by a ring descriptor."""

from itertools import permutations


def bareiss(matrix, ring):
    """Fraction-free determinant; every division is exact in an integral domain."""
    n = len(matrix)
    if n == 0:
        return ring.one
    A = [list(r) for r in matrix]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if ring.is_zero(A[k][k]):
            swap = next((i for i in range(k + 1, n) if not ring.is_zero(A[i][k])), None)
            if swap is None:
                return ring.zero
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = ring.sub(ring.mul(A[i][j], pivot), ring.mul(A[i][k], A[k][j]))
                A[i][j] = ring.exact_div(num, prev)
        prev = pivot
    det = A[n - 1][n - 1]
    return ring.neg(det) if sign < 0 else det


def cofactor_det(matrix, ring):
    """Laplace expansion along the first row; exponential, for small sizes and cross-checks."""
    n = len(matrix)
    if n == 0:
        return ring.one
    if n == 1:
        return matrix[0][0]
    total = ring.zero
    for j, x in enumerate(matrix[0]):
        if ring.is_zero(x):
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = ring.mul(x, cofactor_det(minor, ring))
        total = ring.sub(total, term) if j % 2 else ring.add(total, term)
    return total


def leibniz_det(matrix, ring):
    """Sum over permutations; an oracle independent of any elimination."""
    n = len(matrix)
    total = ring.zero
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ring.one
        for i, j in enumerate(perm):
            term = ring.mul(term, matrix[i][j])
        total = ring.sub(total, term) if inversions % 2 else ring.add(total, term)
    return total


def det(matrix, ring):
    if len(matrix) <= 3:
        return cofactor_det(matrix, ring)
    return bareiss(matrix, ring)
