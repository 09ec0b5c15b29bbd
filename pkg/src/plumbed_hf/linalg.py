"""Exact integer and rational linear algebra on small dense matrices.

Matrices are lists of lists of Python ints, so arithmetic never overflows.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .errors import SingularForm

IntMatrix = Sequence[Sequence[int]]


def leading_minors(matrix: IntMatrix) -> list[int]:
    """Leading principal minors via Bareiss elimination without pivoting.

    The k-th pivot of fraction-free elimination is exactly the k-th leading
    principal minor.  Elimination stops at the first vanishing minor, so the
    returned list is shorter than the matrix in that case.

    >>> leading_minors([[-2, 1], [1, -2]])
    [-2, 3]
    """
    a = [list(row) for row in matrix]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def determinant(matrix: IntMatrix) -> int:
    """Determinant by Bareiss elimination with row pivoting."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def is_negative_definite(matrix: IntMatrix) -> bool:
    """Sylvester's criterion: the k-th leading minor has sign (-1)^k."""
    minors = leading_minors(matrix)
    if len(minors) < len(matrix):
        return False
    return all((m < 0) if k % 2 == 0 else (m > 0) for k, m in enumerate(minors))


def solve(matrix: IntMatrix, rhs: Sequence[int]) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly over the rationals."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularForm("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        row = [v / p for v in a[col]]
        a[col] = row
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], row)]
    return [a[i][n] for i in range(n)]


def smith_form(matrix: IntMatrix) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Return ``(diagonal, U, V)`` with ``U @ matrix @ V = diag(diagonal)``.

    ``U`` and ``V`` are unimodular; the diagonal entries are nonnegative and
    each divides the next.
    """
    m = Matrix(matrix)
    s, u, v = smith_normal_decomp(m, domain=ZZ)
    n = len(matrix)
    diag = [abs(int(s[i, i])) for i in range(n)]
    # normalise signs into U so the diagonal is nonnegative
    u_rows = [[int(u[i, j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if int(s[i, i]) < 0:
            u_rows[i] = [-x for x in u_rows[i]]
    v_rows = [[int(v[i, j]) for j in range(n)] for i in range(n)]
    return diag, u_rows, v_rows


def mat_vec(matrix: IntMatrix, vec: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) for row in matrix]
