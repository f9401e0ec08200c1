"""Free cumulants of Young diagrams.

The spectral distribution attached to a diagram is Kerov's transition
measure: atoms at the contents of the addable boxes, weighted by the
residues of ``prod(z - y_j) / prod(z - x_i)`` where ``x`` are the minima and
``y`` the maxima of the profile.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Sequence

from .partitions import Partition, as_partition, contents, corner_coordinates


@dataclass(frozen=True)
class TransitionMeasure:
    atoms: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        locations = [x for x, _ in self.atoms]
        if any(a >= b for a, b in zip(locations, locations[1:])):
            raise ValueError("atom locations must be strictly increasing")
        if any(w <= 0 for _, w in self.atoms):
            raise ValueError("atom weights must be positive")
        if sum((w for _, w in self.atoms), Fraction(0)) != 1:
            raise ValueError("atom weights must sum to 1")

    @classmethod
    def point_mass(cls, x: int = 0) -> "TransitionMeasure":
        return cls(((x, Fraction(1)),))


def transition_measure(lam: Partition | Sequence[int]) -> TransitionMeasure:
    minima, maxima = corner_coordinates(lam)
    atoms = []
    for i, x in enumerate(minima):
        num = prod(x - y for y in maxima)
        den = prod(x - xx for j, xx in enumerate(minima) if j != i)
        atoms.append((x, Fraction(num, den)))
    return TransitionMeasure(tuple(atoms))


def moments(measure: TransitionMeasure, k_max: int) -> tuple[Fraction, ...]:
    """``(M_1, ..., M_kmax)`` with ``M_k = sum w * x**k``."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    return tuple(sum((w * x**k for x, w in measure.atoms), Fraction(0)) for k in range(1, k_max + 1))


def _convolve(a: list[Fraction], b: list[Fraction], size: int) -> list[Fraction]:
    out = [Fraction(0)] * size
    for i, ai in enumerate(a[:size]):
        if ai:
            for j in range(min(len(b), size - i)):
                out[i + j] += ai * b[j]
    return out


def _power_table(m: list[Fraction], s_max: int, size: int) -> list[list[Fraction]]:
    # powers[s][j] = sum over i_1 + ... + i_s = j of M_{i_1} ... M_{i_s}
    powers = [[Fraction(1)] + [Fraction(0)] * (size - 1)]
    for _ in range(s_max):
        powers.append(_convolve(powers[-1], m, size))
    return powers


def moments_to_free_cumulants(m: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    """Invert ``M_k = sum_s R_s * sum_{i_1+..+i_s = k-s} M_{i_1}..M_{i_s}`` (``M_0 = 1``)."""
    k_max = len(m)
    full = [Fraction(1)] + [Fraction(x) for x in m]
    powers = _power_table(full, k_max, k_max + 1)
    r: list[Fraction] = []
    for k in range(1, k_max + 1):
        # the s = k term is R_k * M_0**k = R_k
        rest = sum((r[s - 1] * powers[s][k - s] for s in range(1, k)), Fraction(0))
        r.append(full[k] - rest)
    return tuple(r)


def free_cumulants_to_moments(r: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    k_max = len(r)
    r = [Fraction(x) for x in r]
    full = [Fraction(1)]
    for k in range(1, k_max + 1):
        powers = _power_table(full + [Fraction(0)] * (k + 1 - len(full)), k, k + 1)
        full.append(sum((r[s - 1] * powers[s][k - s] for s in range(1, k + 1)), Fraction(0)))
    return tuple(full[1:])


@lru_cache(maxsize=4096)
def _free_cumulants(rows: tuple[int, ...], k_max: int) -> tuple[Fraction, ...]:
    return moments_to_free_cumulants(moments(transition_measure(rows), k_max))


def free_cumulants(lam: Partition | Sequence[int], k_max: int) -> tuple[Fraction, ...]:
    """``(R_1, ..., R_kmax)`` of the diagram."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    return _free_cumulants(as_partition(lam).rows, k_max)


def free_cumulant(lam: Partition | Sequence[int], k: int) -> Fraction:
    return free_cumulants(lam, k)[k - 1]


def geometric_r3(lam: Partition | Sequence[int]) -> Fraction:
    """Twice the integral of the content over the diagram."""
    return Fraction(2 * sum(contents(lam)))


def geometric_r4(lam: Partition | Sequence[int], verbatim: bool = False) -> Fraction:
    """Three times the integral of the squared content, minus ``3/2 n**2``.

    A unit box centred at content ``t`` contributes ``t**2 + 1/6``.  With
    ``verbatim=True`` the correction is ``3/2 n`` instead, which does not
    agree with the transition measure once ``n >= 2``.
    """
    lam = as_partition(lam)
    n = lam.n
    integral = sum((Fraction(t * t) + Fraction(1, 6) for t in contents(lam)), Fraction(0))
    correction = Fraction(3, 2) * (n if verbatim else n * n)
    return 3 * integral - correction
