"""Unicellular bipartite labelled maps and Stanley's character formula.

A map with ``k`` edges is a pair ``(sigma_white, sigma_black)`` with
``sigma_white o sigma_black = (1, 2, ..., k)``.  Edge ``e`` joins the white
vertex (cycle of ``sigma_white``) containing ``e`` to the black vertex
(cycle of ``sigma_black``) containing ``e``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations, product
from typing import Iterator, Sequence

from .config import DEFAULT_BOUNDS
from .partitions import Partition, Permutation, as_partition, compose


class MalformedMapError(ValueError):
    pass


@dataclass(frozen=True)
class BipartiteMap:
    sigma_white: Permutation
    sigma_black: Permutation

    def __post_init__(self) -> None:
        if compose(self.sigma_white, self.sigma_black) != Permutation.full_cycle(self.k):
            raise MalformedMapError(
                f"{self.sigma_white} * {self.sigma_black} is not the full cycle of length {self.k}"
            )

    @classmethod
    def from_white(cls, sigma_white: Permutation) -> "BipartiteMap":
        black = compose(sigma_white.inverse(), Permutation.full_cycle(sigma_white.k))
        return cls(sigma_white, black)

    @property
    def k(self) -> int:
        return self.sigma_white.k

    @property
    def white_vertices(self) -> tuple[tuple[int, ...], ...]:
        return self.sigma_white.cycles

    @property
    def black_vertices(self) -> tuple[tuple[int, ...], ...]:
        return self.sigma_black.cycles

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """``edges[e - 1] = (white vertex index, black vertex index)``."""
        white_of = {e: i for i, cyc in enumerate(self.white_vertices) for e in cyc}
        black_of = {e: j for j, cyc in enumerate(self.black_vertices) for e in cyc}
        return tuple((white_of[e], black_of[e]) for e in range(1, self.k + 1))

    @property
    def genus(self) -> int:
        return genus(self)

    def __str__(self) -> str:
        return f"white={self.sigma_white} black={self.sigma_black}"


def genus(m: BipartiteMap) -> int:
    twice = m.k + 1 - m.sigma_white.cycle_count - m.sigma_black.cycle_count
    if twice < 0 or twice % 2:
        raise MalformedMapError(f"Euler characteristic gives non-integral genus for {m}")
    return twice // 2


def _check_k(k: int, max_k: int | None) -> None:
    max_k = DEFAULT_BOUNDS.max_map_k if max_k is None else max_k
    if not 1 <= k <= max_k:
        raise ValueError(f"number of edges must lie in 1..{max_k}, got {k}")


def enumerate_maps(k: int, max_k: int | None = None) -> Iterator[BipartiteMap]:
    """All ``k!`` maps with ``k`` edges, ordered by ``sigma_white`` in one-line lexicographic order."""
    _check_k(k, max_k)
    for images in permutations(range(1, k + 1)):
        yield BipartiteMap.from_white(Permutation(images))


def embedding_count(m: BipartiteMap, lam: Partition | Sequence[int]) -> int:
    """Number of incidence-preserving embeddings of ``m`` into the diagram.

    Black vertices go to rows, white vertices to columns; a white vertex
    placed above black vertices on rows of lengths ``l_1, l_2, ...`` has
    ``min(l_i)`` admissible columns.  Rows of equal length are grouped.
    """
    lam = as_partition(lam)
    if not lam.rows:
        return 0
    lengths = Counter(lam.rows)
    values = list(lengths)
    neighbours = [sorted({b for w, b in m.edges if w == i}) for i in range(len(m.white_vertices))]
    total = 0
    for choice in product(range(len(values)), repeat=len(m.black_vertices)):
        weight = 1
        for idx in choice:
            weight *= lengths[values[idx]]
        for nbrs in neighbours:
            weight *= min(values[choice[b]] for b in nbrs)
        total += weight
    return total


def stanley_character(lam: Partition | Sequence[int], k: int, max_k: int | None = None) -> Fraction:
    """Signed sum of embedding counts over all maps with ``k`` edges."""
    lam = as_partition(lam)
    total = 0
    for m in enumerate_maps(k, max_k):
        count = embedding_count(m, lam)
        total += -count if (k - len(m.white_vertices)) % 2 else count
    return Fraction(total)
