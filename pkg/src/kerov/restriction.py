"""Monte Carlo restriction process and the free cumulant scaling law.

Restricting an irreducible representation of Sym(n) to Sym(n-1) and
picking a component proportionally to its dimension removes one corner box
``c`` with probability ``dim(lam - c) / dim(lam)``.  Iterating gives the
shape of the entries ``1..m`` of a uniformly random standard tableau.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod, sqrt
from statistics import variance
from typing import Sequence

import numpy as np

from .cumulants import free_cumulant
from .partitions import Partition, as_partition

GENERATOR = "numpy.SeedSequence -> random.Random (MT19937), exact integer draws"


def _corners(rows: tuple[int, ...]) -> tuple[list[int], list[int], list[tuple[int, ...]]]:
    """Contents of addable boxes, contents of removable boxes, and the diagrams left after each removal."""
    ell = len(rows)
    minima, maxima, children = [], [], []
    for r in range(1, ell + 1):
        length = rows[r - 1]
        if r == 1 or rows[r - 2] > length:
            minima.append(length + 1 - r)
        if r == ell or rows[r] < length:
            maxima.append(length - r)
            child = list(rows)
            child[r - 1] -= 1
            if child[-1] == 0:
                child.pop()
            children.append(tuple(child))
    minima.append(-ell)
    return minima, maxima, children


@lru_cache(maxsize=1 << 16)
def _corner_weights(rows: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...], int]:
    """Children, integer weights and their total for one restriction step.

    The probability of removing the corner at content ``y_j`` is
    ``-(1/n) prod_i (y_j - x_i) / prod_{l != j} (y_j - y_l)``, the residue
    at ``y_j`` of the reciprocal of the transition-measure generating
    function.
    """
    n = sum(rows)
    if n == 0:
        raise ValueError("cannot restrict the empty diagram")
    minima, maxima, children = _corners(rows)
    nums, dens = [], []
    for j, y in enumerate(maxima):
        num = -prod(y - x for x in minima)
        den = n * prod(y - yy for l, yy in enumerate(maxima) if l != j)
        if den < 0:
            num, den = -num, -den
        nums.append(num)
        dens.append(den)
    common = lcm(*dens)
    weights = tuple(num * (common // den) for num, den in zip(nums, dens))
    if sum(weights) != common or any(w <= 0 for w in weights):
        raise ArithmeticError(f"corner probabilities of {rows} are not a distribution")
    return tuple(children), weights, common


def corner_probabilities(lam: Partition | Sequence[int]) -> list[tuple[Partition, Fraction]]:
    """``(lam - c, dim(lam - c) / dim(lam))`` for every removable corner ``c``."""
    children, weights, total = _corner_weights(as_partition(lam).rows)
    return [(Partition(c), Fraction(w, total)) for c, w in zip(children, weights)]


def _step(rows: tuple[int, ...], rng: random.Random) -> tuple[int, ...]:
    children, weights, total = _corner_weights(rows)
    u = rng.randrange(total)
    for child, w in zip(children, weights):
        if u < w:
            return child
        u -= w
    raise AssertionError("weights do not cover the draw")


def restriction_step(lam: Partition | Sequence[int], rng: random.Random) -> Partition:
    lam = as_partition(lam)
    if lam.n == 0:
        raise ValueError("cannot restrict the empty diagram")
    return Partition(_step(lam.rows, rng))


def restrict_to(lam: Partition | Sequence[int], m: int, rng: random.Random) -> Partition:
    lam = as_partition(lam)
    if not 0 <= m <= lam.n:
        raise ValueError(f"target size {m} outside 0..{lam.n}")
    rows = lam.rows
    for _ in range(lam.n - m):
        rows = _step(rows, rng)
    return Partition(rows)


def trial_rngs(seed: int, trials: int) -> list[random.Random]:
    """One independent generator per trial, derived by splitting ``seed``."""
    children = np.random.SeedSequence(seed).spawn(trials)
    return [random.Random(int.from_bytes(c.generate_state(4, np.uint64).tobytes(), "little")) for c in children]


@dataclass(frozen=True)
class ScalingReport:
    lam: tuple[int, ...]
    n: int
    m: int
    k: int
    trials: int
    seed: int
    predicted: Fraction
    estimate: float
    stderr: float
    generator: str = GENERATOR

    @property
    def relative_gap(self) -> float:
        return abs(self.estimate / float(self.predicted) - 1.0)

    @property
    def relative_stderr(self) -> float:
        return self.stderr / abs(float(self.predicted))

    def within(self, n_stderr: float) -> bool:
        return abs(self.estimate - float(self.predicted)) <= n_stderr * self.stderr

    def to_json(self) -> dict:
        d = asdict(self)
        d["lambda"] = ",".join(map(str, d.pop("lam")))
        d["predicted"] = str(self.predicted)
        return d


def _run_chunk(args: tuple[tuple[int, ...], int, int, int, list[int]]) -> list[Fraction]:
    rows, m, k, seed, indices = args
    rngs = trial_rngs(seed, max(indices) + 1)
    return [free_cumulant(restrict_to(rows, m, rngs[i]), k + 1) for i in indices]


def scaling_experiment(lam: Partition | Sequence[int], m: int, k: int, trials: int, seed: int,
                       workers: int = 1) -> ScalingReport:
    """Compare the sample mean of ``R_{k+1}(mu)`` with ``(m/n)**k R_{k+1}(lam)``."""
    lam = as_partition(lam)
    n = lam.n
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not 1 <= m <= n:
        raise ValueError(f"m must lie in 1..{n}")
    if k < 1:
        raise ValueError("k must be at least 1")
    predicted = Fraction(m, n) ** k * free_cumulant(lam, k + 1)
    if workers <= 1:
        values = _run_chunk((lam.rows, m, k, seed, list(range(trials))))
    else:
        chunks = [list(range(i, trials, workers)) for i in range(workers) if i < trials]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_run_chunk, [(lam.rows, m, k, seed, c) for c in chunks]))
        values = [None] * trials
        for chunk, part in zip(chunks, parts):
            for i, v in zip(chunk, part):
                values[i] = v
    mean = sum(values, Fraction(0)) / trials
    stderr = sqrt(variance(values) / trials) if trials > 1 else 0.0
    return ScalingReport(lam.rows, n, m, k, trials, seed, predicted, float(mean), float(stderr))
