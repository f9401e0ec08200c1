"""Exact Gaussian elimination over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class RankDeficientError(ArithmeticError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


def solve_exact(a: Sequence[Sequence[Fraction | int]], b: Sequence[Fraction | int]) -> list[Fraction]:
    """Unique solution of the (possibly overdetermined) system ``a x = b``.

    Raises ``RankDeficientError`` if the columns of ``a`` are dependent and
    ``InconsistentSystemError`` if no exact solution exists.
    """
    rows = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    if len(rows) != len(a) or len(a) != len(b):
        raise ValueError("row count of a and length of b differ")
    ncols = len(a[0]) if a else 0
    pivot_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            raise RankDeficientError(f"column {col} has no pivot; rank < {ncols}")
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        prow = rows[pivot_row]
        inv = 1 / prow[col]
        prow[:] = [v * inv for v in prow]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * p for v, p in zip(rows[r], prow)]
        pivot_row += 1
    for r in range(pivot_row, len(rows)):
        if rows[r][-1] != 0:
            raise InconsistentSystemError("system has no exact solution")
    return [rows[i][-1] for i in range(ncols)]
