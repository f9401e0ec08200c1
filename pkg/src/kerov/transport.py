"""Strictly positive transportation on decorated maps.

White vertices supply one unit each, a black vertex decorated by ``R_i``
demands ``i - 1`` units, and every edge is a pipe from its white end to its
black end.  A decorated map counts towards a Kerov coefficient when some
flow meets all supplies and demands with every pipe strictly positive.

Strict positivity is decided per arc: an arc can carry positive flow in
some feasible solution iff it already does in a reference solution or its
black end reaches its white end in the residual graph.  The feasible set is
convex, so averaging one witness per arc gives a flow that is positive
everywhere.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .maps import BipartiteMap, enumerate_maps
from .polynomials import RPolynomial


@dataclass(frozen=True)
class DecoratedMap:
    map: BipartiteMap
    decorations: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "decorations", tuple(int(i) for i in self.decorations))
        if len(self.decorations) != len(self.map.black_vertices):
            raise ValueError(
                f"{len(self.decorations)} decorations for {len(self.map.black_vertices)} black vertices"
            )
        if any(i < 2 for i in self.decorations):
            raise ValueError(f"decorations must be >= 2: {self.decorations}")


@dataclass(frozen=True)
class FlowNetwork:
    supplies: tuple[int, ...]
    demands: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]

    @classmethod
    def from_decorated(cls, d: DecoratedMap) -> "FlowNetwork":
        return cls(
            supplies=(1,) * len(d.map.white_vertices),
            demands=tuple(i - 1 for i in d.decorations),
            arcs=d.map.edges,
        )

    @property
    def balanced(self) -> bool:
        return sum(self.supplies) == sum(self.demands)

    def is_feasible_flow(self, flow: Sequence[Fraction | int], strict: bool = False) -> bool:
        if len(flow) != len(self.arcs):
            return False
        if any(f < 0 or (strict and f == 0) for f in flow):
            return False
        out_w = [Fraction(0)] * len(self.supplies)
        in_b = [Fraction(0)] * len(self.demands)
        for (w, b), f in zip(self.arcs, flow):
            out_w[w] += f
            in_b[b] += f
        return out_w == list(map(Fraction, self.supplies)) and in_b == list(map(Fraction, self.demands))


def _max_flow(net: FlowNetwork) -> list[int]:
    """Integral max flow from the supplies to the demands; returns per-arc values."""
    nw, nb = len(net.supplies), len(net.demands)
    source, sink = nw + nb, nw + nb + 1
    big = sum(net.supplies) + 1
    # residual graph as an edge list: (to, capacity, reverse index)
    graph: list[list[list[int]]] = [[] for _ in range(nw + nb + 2)]

    def add(u: int, v: int, cap: int) -> tuple[int, int]:
        graph[u].append([v, cap, len(graph[v])])
        graph[v].append([u, 0, len(graph[u]) - 1])
        return u, len(graph[u]) - 1

    for w, s in enumerate(net.supplies):
        add(source, w, s)
    for b, dem in enumerate(net.demands):
        add(nw + b, sink, dem)
    handles = [add(w, nw + b, big) for w, b in net.arcs]

    while True:
        parent: dict[int, tuple[int, int]] = {source: (-1, -1)}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for idx, (v, cap, _) in enumerate(graph[u]):
                if cap > 0 and v not in parent:
                    parent[v] = (u, idx)
                    queue.append(v)
        if sink not in parent:
            break
        push, v = big, sink
        while v != source:
            u, idx = parent[v]
            push = min(push, graph[u][idx][1])
            v = u
        v = sink
        while v != source:
            u, idx = parent[v]
            edge = graph[u][idx]
            edge[1] -= push
            graph[edge[0]][edge[2]][1] += push
            v = u
    return [big - graph[u][idx][1] for u, idx in handles]


def _residual_path(net: FlowNetwork, flow: Sequence[Fraction | int], start_black: int,
                   target_white: int) -> list[tuple[int, int]] | None:
    """Path from a black node to a white node in the residual graph.

    Steps are ``(arc, +1)`` for a forward white-to-black move (always
    available) and ``(arc, -1)`` for a backward move along an arc with
    positive flow.
    """
    start = ("b", start_black)
    goal = ("w", target_white)
    parent: dict[tuple[str, int], tuple[tuple[str, int], int, int] | None] = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node == goal:
            break
        kind, idx = node
        for e, (w, b) in enumerate(net.arcs):
            if kind == "b" and b == idx and flow[e] > 0:
                nxt, step = ("w", w), -1
            elif kind == "w" and w == idx:
                nxt, step = ("b", b), +1
            else:
                continue
            if nxt not in parent:
                parent[nxt] = (node, e, step)
                queue.append(nxt)
    if goal not in parent:
        return None
    path = []
    node = goal
    while parent[node] is not None:
        prev, e, step = parent[node]
        path.append((e, step))
        node = prev
    return path[::-1]


def _reference_flow(net: FlowNetwork) -> list[int] | None:
    if not net.balanced:
        return None
    flow = _max_flow(net)
    if not net.is_feasible_flow(flow):
        return None
    return flow


def positive_flow_witness(d: DecoratedMap | FlowNetwork) -> list[Fraction] | None:
    """A flow meeting all constraints with every arc strictly positive, or ``None``."""
    net = d if isinstance(d, FlowNetwork) else FlowNetwork.from_decorated(d)
    base = _reference_flow(net)
    if base is None:
        return None
    witnesses = []
    for e, (w, b) in enumerate(net.arcs):
        if base[e] > 0:
            witnesses.append([Fraction(f) for f in base])
            continue
        path = _residual_path(net, base, b, w)
        if path is None:
            return None
        delta = min(base[a] for a, step in path if step < 0)
        g = [Fraction(f) for f in base]
        g[e] += delta
        for a, step in path:
            g[a] += step * delta
        witnesses.append(g)
    if not witnesses:
        return []
    m = len(witnesses)
    avg = [sum(col, Fraction(0)) / m for col in zip(*witnesses)]
    if not net.is_feasible_flow(avg, strict=True):
        raise AssertionError(f"averaged witness is not a strictly positive flow: {avg}")
    return avg


def strictly_positive_feasible(d: DecoratedMap | FlowNetwork) -> bool:
    net = d if isinstance(d, FlowNetwork) else FlowNetwork.from_decorated(d)
    base = _reference_flow(net)
    if base is None:
        return False
    return all(
        base[e] > 0 or _residual_path(net, base, b, w) is not None
        for e, (w, b) in enumerate(net.arcs)
    )


def _connected_without(m: BipartiteMap, skip: int) -> bool:
    nw = len(m.white_vertices)
    nodes = nw + len(m.black_vertices)
    adj: list[list[int]] = [[] for _ in range(nodes)]
    for e, (w, b) in enumerate(m.edges):
        if e != skip:
            adj[w].append(nw + b)
            adj[nw + b].append(w)
    seen = {0}
    stack = [0]
    while stack:
        for v in adj[stack.pop()]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == nodes


def has_disallowed_disconnecting_edge(m: BipartiteMap) -> bool:
    """Whether some bridge of the map is not the edge of a white leaf."""
    white_degree = Counter(w for w, _ in m.edges)
    return any(
        white_degree[w] != 1 and not _connected_without(m, e)
        for e, (w, _) in enumerate(m.edges)
    )


def is_connected(m: BipartiteMap) -> bool:
    return _connected_without(m, -1)


def _distinct_arrangements(multiset: Sequence[int]) -> list[tuple[int, ...]]:
    return sorted(set(permutations(multiset)))


def count_decorated_maps(k: int, decorations: Sequence[int], max_k: int | None = None) -> int:
    """Decorated ``k``-edge maps with a strictly positive flow for the given multiset of ``R`` indices.

    Black vertices are distinguishable, so every distinct arrangement of the
    multiset over them is counted separately.
    """
    multiset = tuple(sorted(int(i) for i in decorations))
    if any(i < 2 for i in multiset):
        raise ValueError(f"decorations must be >= 2: {multiset}")
    arrangements = _distinct_arrangements(multiset)
    count = 0
    for m in enumerate_maps(k, max_k):
        if len(m.black_vertices) != len(multiset):
            continue
        for arrangement in arrangements:
            if strictly_positive_feasible(DecoratedMap(m, arrangement)):
                count += 1
    return count


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways to write ``total`` as ``parts`` positive integers."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def transport_polynomial(k: int, max_k: int | None = None) -> RPolynomial:
    """Kerov polynomial assembled from decorated-map counts alone."""
    counts: Counter = Counter()
    for m in enumerate_maps(k, max_k):
        nw, nb = len(m.white_vertices), len(m.black_vertices)
        for demands in _compositions(nw, nb):
            decorations = tuple(d + 1 for d in demands)
            if strictly_positive_feasible(DecoratedMap(m, decorations)):
                counts[tuple(sorted(decorations))] += 1
    return RPolynomial(dict(counts))
