"""Kerov polynomials by exact interpolation.

The normalized character on a fixed cycle type is a polynomial in the free
cumulants.  Its coefficients are recovered by evaluating both sides on many
diagrams and solving the resulting rational linear system; the answer is
then checked on diagrams that were not used in the solve.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import chain
from math import factorial
from typing import Iterator, Sequence

from .characters import normalized_character
from .config import DEFAULT_BOUNDS
from .cumulants import free_cumulants
from .linalg import RankDeficientError, InconsistentSystemError, solve_exact
from .partitions import Partition, as_partition, partitions_of
from .polynomials import Monomial, RPolynomial, graded_degree, monomials_of_weight


class ConsistencyError(RuntimeError):
    """Two independent computations that must agree did not."""


def evaluate(p: RPolynomial, lam: Partition | Sequence[int]) -> Fraction:
    lam = as_partition(lam)
    return p.evaluate_at(free_cumulants(lam, max(p.max_index(), 2)))


def candidate_monomials(total: int, n_cycles: int) -> list[Monomial]:
    """Monomials of weight ``<= total + n_cycles`` with the same parity."""
    top = total + n_cycles
    return [m for w in range(top % 2, top + 1, 2) for m in monomials_of_weight(w)]


def _canonical_cycles(cycles: Sequence[int] | int) -> tuple[int, ...]:
    if isinstance(cycles, int):
        cycles = (cycles,)
    cycles = tuple(sorted((int(c) for c in cycles), reverse=True))
    if not cycles or any(c < 1 for c in cycles):
        raise ValueError(f"cycle lengths must be positive and non-empty: {cycles}")
    return cycles


def _check_bound(total: int, max_k: int | None) -> None:
    max_k = DEFAULT_BOUNDS.max_kerov_k if max_k is None else max_k
    if total > max_k:
        raise ValueError(f"total cycle length {total} exceeds the configured bound {max_k}")


def _row(lam: Partition, basis: list[Monomial], top_index: int) -> list[Fraction]:
    r = free_cumulants(lam, top_index)
    out = []
    for mono in basis:
        v = Fraction(1)
        for i in mono:
            v *= r[i - 1]
        out.append(v)
    return out


def _partitions_in(sizes: range) -> Iterator[Partition]:
    return chain.from_iterable(partitions_of(n) for n in sizes)


@lru_cache(maxsize=None)
def _solve(cycles: tuple[int, ...]) -> RPolynomial:
    total = sum(cycles)
    basis = candidate_monomials(total, len(cycles))
    top_index = max(2, total + len(cycles))
    lo, hi = total + 1, total + 4
    while True:
        sample = list(_partitions_in(range(lo, hi + 1)))
        a = [_row(lam, basis, top_index) for lam in sample]
        b = [normalized_character(lam, cycles) for lam in sample]
        try:
            coeffs = solve_exact(a, b)
            break
        except RankDeficientError:
            if lo == 0 and hi > total + 12:
                raise
            lo, hi = max(0, lo - 1), hi + 1
        except InconsistentSystemError as exc:
            raise ConsistencyError(f"no polynomial in the candidate basis matches Ch{cycles}") from exc
    poly = RPolynomial(dict(zip(basis, coeffs)))
    for lam in _partitions_in(range(hi + 1, hi + 2)):
        if evaluate(poly, lam) != normalized_character(lam, cycles):
            raise ConsistencyError(f"solved polynomial for Ch{cycles} fails on held-out diagram {lam.rows}")
    return poly


def kerov_polynomial(k: int, max_k: int | None = None) -> RPolynomial:
    """Polynomial ``P`` with ``Ch_k(lam) = P(R_2(lam), R_3(lam), ...)`` for every diagram."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    _check_bound(k, max_k)
    poly = _solve((k,))
    if any(c.denominator != 1 for c in poly.terms.values()):
        raise ConsistencyError(f"Kerov polynomial for Ch_{k} has non-integral coefficients: {poly}")
    return poly


def multi_kerov_polynomial(cycles: Sequence[int] | int, max_k: int | None = None) -> RPolynomial:
    """Kerov polynomial of the normalized character on several disjoint cycles."""
    cycles = _canonical_cycles(cycles)
    _check_bound(sum(cycles), max_k)
    return _solve(cycles)


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        yield [[first]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]


def cumulant_polynomial(cycles: Sequence[int] | int, max_k: int | None = None) -> RPolynomial:
    """Classical cumulant of ``Ch_k, Ch_l, ...`` with the disjoint-cycle character as joint moment.

    Two arguments give ``Ch_{k,l} - Ch_k Ch_l``.
    """
    if isinstance(cycles, int):
        cycles = (cycles,)
    cycles = list(cycles)
    _canonical_cycles(cycles)
    _check_bound(sum(cycles), max_k)
    out = RPolynomial()
    for blocks in set_partitions(cycles):
        b = len(blocks)
        term = RPolynomial.constant((-1) ** (b - 1) * factorial(b - 1))
        for block in blocks:
            term = term * multi_kerov_polynomial(block, max_k)
        out = out + term
    return out


@dataclass(frozen=True)
class PositivityReport:
    ok: bool
    offending: list[tuple[Monomial, Fraction]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def positivity_report(p: RPolynomial) -> PositivityReport:
    bad = [(m, c) for m, c in p.sorted_terms() if c < 0 or c.denominator != 1]
    return PositivityReport(not bad, bad)


__all__ = [
    "ConsistencyError",
    "PositivityReport",
    "candidate_monomials",
    "cumulant_polynomial",
    "evaluate",
    "graded_degree",
    "kerov_polynomial",
    "multi_kerov_polynomial",
    "positivity_report",
    "set_partitions",
]
