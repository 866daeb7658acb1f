"""Exact Gaussian elimination over the rationals.

Matrices are lists of rows of Fractions.  Everything here is certified
arithmetic: no floating point, no tolerance.
"""

from __future__ import annotations

from fractions import Fraction


def rank(matrix) -> int:
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        for i in range(r + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / pv
                for c2 in range(col, ncols):
                    rows[i][c2] -= f * rows[r][c2]
        r += 1
        if r == len(rows):
            break
    return r


def kernel_dim(matrix, ncols=None) -> int:
    """dim ker of the linear map the matrix represents (columns = domain)."""
    if not matrix or not matrix[0]:
        return ncols if ncols is not None else (len(matrix[0]) if matrix else 0)
    return len(matrix[0]) - rank(matrix)


def in_column_span(matrix, vec) -> bool:
    """Whether vec lies in the span of the matrix's columns."""
    if all(x == 0 for x in vec):
        return True
    if not matrix or not matrix[0]:
        return False
    aug = [list(row) + [v] for row, v in zip(matrix, vec)]
    return rank(matrix) == rank(aug)
