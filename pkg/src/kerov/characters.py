"""Irreducible characters of symmetric groups.

``mn_character`` evaluates the Murnaghan-Nakayama rule on beta-sets (an
abacus): removing a border strip of length ``r`` moves one bead from ``b``
to ``b - r``, and the strip height is the number of beads jumped over.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .partitions import Partition, as_partition, hook_lengths


@lru_cache(maxsize=None)
def _dimension(rows: tuple[int, ...]) -> int:
    n = sum(rows)
    return factorial(n) // prod(hook_lengths(rows))


def dimension(lam: Partition | Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    return _dimension(as_partition(lam).rows)


def _beta_set(rows: tuple[int, ...]) -> tuple[int, ...]:
    ell = len(rows)
    return tuple(r + ell - 1 - i for i, r in enumerate(rows))


def _from_beta(beta: Sequence[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    rows = [b - (ell - 1 - i) for i, b in enumerate(beta)]
    while rows and rows[-1] == 0:
        rows.pop()
    return tuple(rows)


def border_strips(rows: tuple[int, ...], r: int) -> list[tuple[tuple[int, ...], int]]:
    """All ways to remove a border strip of ``r`` boxes: ``(remaining rows, height)``.

    Height is the number of rows the strip occupies minus one.
    """
    beta = _beta_set(rows)
    occupied = set(beta)
    out = []
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        out.append((_from_beta([target if x == b else x for x in beta]), height))
    return out


@lru_cache(maxsize=None)
def _mn(rows: tuple[int, ...], cls: tuple[int, ...]) -> int:
    if not cls:
        return 1 if not rows else 0
    first, rest = cls[0], cls[1:]
    total = 0
    for remaining, height in border_strips(rows, first):
        term = _mn(remaining, rest)
        total += -term if height % 2 else term
    return total


def mn_character(lam: Partition | Sequence[int], mu: Partition | Sequence[int]) -> int:
    """Character value of the irreducible representation ``lam`` on the class ``mu``."""
    lam = as_partition(lam)
    parts = tuple(sorted((int(p) for p in mu), reverse=True))
    if any(p < 1 for p in parts):
        raise ValueError(f"class parts must be positive: {parts}")
    if sum(parts) != lam.n:
        raise ValueError(f"size mismatch: |lambda| = {lam.n}, |mu| = {sum(parts)}")
    return _mn(lam.rows, parts)


def falling_factorial(n: int, k: int) -> int:
    return prod(range(n - k + 1, n + 1)) if k <= n else 0


def normalized_character(lam: Partition | Sequence[int], cycles: Sequence[int] | int) -> Fraction:
    """Normalized character on disjoint cycles of the given lengths.

    ``(n)_K * chi(cycles + 1^(n-K)) / dim`` with ``K = sum(cycles)``; zero
    when the diagram has fewer than ``K`` boxes.
    """
    lam = as_partition(lam)
    if isinstance(cycles, int):
        cycles = (cycles,)
    cycles = tuple(sorted((int(c) for c in cycles), reverse=True))
    if any(c < 1 for c in cycles):
        raise ValueError(f"cycle lengths must be positive: {cycles}")
    n, total = lam.n, sum(cycles)
    if n < total:
        return Fraction(0)
    chi = mn_character(lam, cycles + (1,) * (n - total))
    value = Fraction(falling_factorial(n, total) * chi, dimension(lam))
    if value.denominator != 1:
        raise ArithmeticError(f"normalized character of {lam.rows} on {cycles} is not integral: {value}")
    return value
