"""Young diagrams, boxes and permutations.

Rows are listed longest first; a box in row ``r`` and column ``c`` (both
1-indexed) has content ``c - r``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Partition:
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        if any(r < 1 for r in rows):
            raise ValueError(f"partition rows must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"partition rows must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return sum(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.rows))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        try:
            rows = tuple(int(t) for t in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return cls(rows)

    def boxes(self) -> Iterator["Box"]:
        for r, length in enumerate(self.rows, start=1):
            for c in range(1, length + 1):
                yield Box(r, c)

    def __contains__(self, box: object) -> bool:
        if not isinstance(box, Box):
            return False
        return 1 <= box.row <= len(self.rows) and 1 <= box.column <= self.rows[box.row - 1]

    def removable_boxes(self) -> list["Box"]:
        rows = self.rows
        return [
            Box(r, rows[r - 1])
            for r in range(1, len(rows) + 1)
            if r == len(rows) or rows[r] < rows[r - 1]
        ]

    def addable_boxes(self) -> list["Box"]:
        rows = self.rows + (0,)
        return [
            Box(r, rows[r - 1] + 1)
            for r in range(1, len(rows) + 1)
            if r == 1 or rows[r - 2] > rows[r - 1]
        ]

    def remove(self, box: "Box") -> "Partition":
        if box not in self.removable_boxes():
            raise ValueError(f"{box} is not a removable box of {self.rows}")
        rows = list(self.rows)
        rows[box.row - 1] -= 1
        if rows[-1] == 0:
            rows.pop()
        return Partition(tuple(rows))


@dataclass(frozen=True)
class Box:
    row: int
    column: int

    @property
    def content(self) -> int:
        return self.column - self.row


def as_partition(obj: Partition | Sequence[int] | str) -> Partition:
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, str):
        return Partition.parse(obj)
    return Partition(tuple(obj))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for rows in rec(n, max_part):
        yield Partition(rows)


def partitions_up_to(n_max: int) -> Iterator[Partition]:
    for n in range(n_max + 1):
        yield from partitions_of(n)


def dilate(lam: Partition | Sequence[int], s: int) -> Partition:
    """Replace every box by an ``s`` x ``s`` block."""
    lam = as_partition(lam)
    if s < 1:
        raise ValueError(f"dilation factor must be positive, got {s}")
    return Partition(tuple(s * r for r in lam.rows for _ in range(s)))


def conjugate(lam: Partition | Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam.rows:
        return lam
    return Partition(tuple(sum(1 for r in lam.rows if r >= c) for c in range(1, lam.rows[0] + 1)))


def contents(lam: Partition | Sequence[int]) -> list[int]:
    return [b.content for b in as_partition(lam).boxes()]


def corner_coordinates(lam: Partition | Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Contents of the addable boxes (minima) and removable boxes (maxima).

    Both sequences are increasing and interlace, with one more minimum than
    maxima.
    """
    lam = as_partition(lam)
    minima = tuple(sorted(b.content for b in lam.addable_boxes()))
    maxima = tuple(sorted(b.content for b in lam.removable_boxes()))
    return minima, maxima


def hook_lengths(lam: Partition | Sequence[int]) -> list[int]:
    lam = as_partition(lam)
    cols = conjugate(lam).rows
    return [
        (lam.rows[r - 1] - c) + (cols[c - 1] - r) + 1
        for r in range(1, len(lam) + 1)
        for c in range(1, lam.rows[r - 1] + 1)
    ]


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    """Permutation of ``{1..k}`` in one-line form: ``images[i - 1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def full_cycle(cls, k: int) -> "Permutation":
        """The cycle ``(1, 2, ..., k)``."""
        return cls(tuple(range(2, k + 1)) + (1,) if k else ())

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], k: int | None = None) -> "Permutation":
        cycles = [tuple(c) for c in cycles]
        points = [x for c in cycles for x in c]
        if len(points) != len(set(points)):
            raise ValueError(f"cycles are not disjoint: {cycles}")
        if k is None:
            k = max(points, default=0)
        images = list(range(1, k + 1))
        for c in cycles:
            for i, x in enumerate(c):
                if not 1 <= x <= k:
                    raise ValueError(f"point {x} outside 1..{k}")
                images[x - 1] = c[(i + 1) % len(c)]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "Permutation":
        """Parse cycle notation such as ``"(1,6)(4,7,5)"``; omitted points are fixed."""
        text = text.strip()
        groups = _CYCLE_RE.findall(text)
        if _CYCLE_RE.sub("", text).strip() or (text and not groups):
            raise ValueError(f"cannot parse cycle notation {text!r}")
        try:
            cycles = [tuple(int(t) for t in g.replace(" ", ",").split(",") if t) for g in groups]
        except ValueError:
            raise ValueError(f"cannot parse cycle notation {text!r}") from None
        return cls.from_cycles([c for c in cycles if c], k)

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles including fixed points, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, self.k + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return tuple(out)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def inverse(self) -> "Permutation":
        inv = [0] * self.k
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles) or "()"


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """``sigma o tau``: apply ``tau`` first, then ``sigma``."""
    if sigma.k != tau.k:
        raise ValueError(f"degree mismatch: {sigma.k} vs {tau.k}")
    return Permutation(tuple(sigma(tau(x)) for x in range(1, tau.k + 1)))
