"""Crossed cubes, hypercubes and small fixture graphs."""

from __future__ import annotations

import random
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .bitaddress import (
    bit,
    check_dimension,
    pair_twist,
    prefix_equal,
    suffix_pair_related,
)

MAX_MATERIALIZED = 20

CROSSED = "crossed"
HYPERCUBE = "hypercube"
GENERIC = "generic"


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph on vertices ``0 .. order - 1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.
    """

    adjacency: tuple[tuple[int, ...], ...]
    kind: str = GENERIC
    _adjsets: tuple[frozenset[int], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_adjsets", tuple(frozenset(nbrs) for nbrs in self.adjacency)
        )

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]], kind: str = GENERIC):
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) outside vertex range {order}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs), kind)

    @property
    def order(self) -> int:
        return len(self.adjacency)

    def vertices(self) -> range:
        return range(self.order)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def adjset(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)


@dataclass(frozen=True, eq=False)
class CubeGraph(Graph):
    n: int = 0

    def __repr__(self) -> str:
        return f"CubeGraph(kind={self.kind!r}, n={self.n})"


def is_edge_cq(u: int, v: int, n: int) -> bool:
    """Crossed-cube adjacency, tested directly against the edge rule."""
    for x in range(n):
        if bit(u, x) == bit(v, x):
            continue
        if x % 2 == 1 and bit(u, x - 1) != bit(v, x - 1):
            continue
        if prefix_equal(u, v, x, n) and suffix_pair_related(u, v, x):
            return True
    return False


def neighbor_cq(u: int, k: int, n: int) -> int:
    """The ``k``-th neighbour of ``u`` in CQ_n."""
    if not 0 <= k < n:
        raise IndexError(f"dimension index {k} out of range for n={n}")
    return pair_twist(u ^ (1 << k), k // 2)


def witness_dimension(u: int, v: int) -> int:
    """Dimension along which two adjacent cube vertices are joined."""
    return (u ^ v).bit_length() - 1


def build_cq(n: int) -> CubeGraph:
    check_dimension(n, 1, MAX_MATERIALIZED)
    adjacency = tuple(
        tuple(sorted(neighbor_cq(u, k, n) for k in range(n))) for u in range(1 << n)
    )
    return CubeGraph(adjacency, CROSSED, n)


def build_hypercube(n: int) -> CubeGraph:
    check_dimension(n, 1, MAX_MATERIALIZED)
    adjacency = tuple(
        tuple(sorted(u ^ (1 << k) for k in range(n))) for u in range(1 << n)
    )
    return CubeGraph(adjacency, HYPERCUBE, n)


def neighbors(g: Graph, v: int) -> list[int]:
    return list(g.neighbors(v))


def path_graph(order: int) -> Graph:
    return Graph.from_edges(order, ((i, i + 1) for i in range(order - 1)))


def random_graph(order: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(order) for v in range(u + 1, order) if rng.random() < p
    ]
    return Graph.from_edges(order, edges)
