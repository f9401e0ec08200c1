"""Polynomials with rational coefficients in the free cumulants R2, R3, ..."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


def _canonical(monomial: Iterable[int]) -> Monomial:
    mono = tuple(sorted(int(i) for i in monomial))
    if any(i < 2 for i in mono):
        raise ValueError(f"free cumulant indices must be >= 2: {mono}")
    return mono


class RPolynomial:
    """Sparse polynomial; monomials are ascending index tuples, ``()`` is the constant."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], Fraction | int] | None = None):
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            key = _canonical(mono)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        self._terms = {m: c for m, c in acc.items() if c != 0}

    @classmethod
    def variable(cls, i: int) -> "RPolynomial":
        return cls({(i,): 1})

    @classmethod
    def constant(cls, c: Fraction | int) -> "RPolynomial":
        return cls({(): c})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, monomial: Iterable[int]) -> Fraction:
        return self._terms.get(_canonical(monomial), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RPolynomial.constant(other)
        if not isinstance(other, RPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def _coerce(self, other) -> "RPolynomial":
        if isinstance(other, RPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return RPolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "RPolynomial":
        return RPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = tuple(sorted(m1 + m2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return RPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RPolynomial":
        out = RPolynomial.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def evaluate_at(self, cumulants: Sequence[Fraction]) -> Fraction:
        """Substitute ``R_i = cumulants[i - 1]``."""
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for i in mono:
                term *= cumulants[i - 1]
            total += term
        return total

    def max_index(self) -> int:
        return max((i for m in self._terms for i in m), default=1)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Decreasing weight; ties broken by the largest index, then the next largest."""
        return sorted(
            self._terms.items(),
            key=lambda mc: (-sum(mc[0]), tuple(-i for i in reversed(mc[0]))),
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            var = "*".join(
                f"R{i}" if mono.count(i) == 1 else f"R{i}^{mono.count(i)}"
                for i in sorted(set(mono))
            )
            if not var:
                body = str(mag)
            elif mag == 1:
                body = var
            else:
                body = f"{mag}*{var}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"RPolynomial({self})"

    def to_json(self) -> list[dict]:
        return [{"monomial": list(m), "coefficient": str(c)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "RPolynomial":
        return cls({tuple(t["monomial"]): Fraction(t["coefficient"]) for t in data})


def R(i: int) -> RPolynomial:
    return RPolynomial.variable(i)


def graded_degree(p: RPolynomial) -> int:
    """Largest monomial weight (``R_i`` has weight ``i``); 0 for the zero polynomial."""
    return max((sum(m) for m in p.terms), default=0)


def monomials_of_weight(w: int, min_index: int = 2, max_index: int | None = None) -> list[Monomial]:
    """Multisets of indices ``>= min_index`` summing to ``w``, as ascending tuples."""
    if max_index is None:
        max_index = w
    out: list[Monomial] = []

    def rec(remaining: int, lo: int, acc: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(acc)
            return
        for i in range(lo, min(remaining, max_index) + 1):
            rec(remaining - i, i, acc + (i,))

    rec(w, min_index, ())
    return out
