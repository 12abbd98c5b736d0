"""P4-graphs of vertex sets and the K4 parity classifier for crossed cubes.

A P4 is a simple path on exactly four vertices.  Its two inner vertices may
be any vertices of the host graph, including members of the set itself or
the centre of the neighbourhood being examined.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .bitaddress import flip, is_even
from .topology import CubeGraph, Graph, build_cq

EVEN = "even"
ODD = "odd"


def has_p4(g: Graph, x: int, y: int) -> bool:
    if x == y:
        raise ValueError("P4 endpoints must be distinct")
    y_nbrs = g.adjset(y)
    for a in g.neighbors(x):
        if a == y:
            continue
        for b in g.neighbors(a):
            if b != x and b != y and b in y_nbrs:
                return True
    return False


@dataclass(frozen=True)
class P4Graph:
    host: Graph
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    center: int | None = None

    def has_edge(self, x: int, y: int) -> bool:
        return (min(x, y), max(x, y)) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def degree(self, x: int) -> int:
        return sum(x in e for e in self.edges)

    def as_graph(self) -> Graph:
        """Relabel to a :class:`Graph` on ``0 .. len(vertices) - 1``."""
        index = {v: i for i, v in enumerate(self.vertices)}
        return Graph.from_edges(
            len(self.vertices), ((index[a], index[b]) for a, b in self.edges)
        )


def p4_graph(g: Graph, subset: Iterable[int], center: int | None = None) -> P4Graph:
    verts = tuple(sorted(set(subset)))
    edges = tuple(
        (x, y) for x, y in combinations(verts, 2) if has_p4(g, x, y)
    )
    return P4Graph(g, verts, edges, center)


def neighborhood_p4_graph(g: Graph, v: int) -> P4Graph:
    return p4_graph(g, g.neighbors(v), center=v)


def contains_k4(h: P4Graph) -> bool:
    edge_set = h._edge_set
    for quad in combinations(h.vertices, 4):
        if all(pair in edge_set for pair in combinations(quad, 2)):
            return True
    return False


def k4_witness_even(u: int, n: int, g: CubeGraph | None = None) -> tuple[int, int, int, int]:
    """The neighbours of an even ``u`` along dimensions 0..3, checked to form a K4.

    With bit 0 clear every low block is self-paired, so these neighbours are
    plain bit flips.
    """
    if n < 5:
        raise ValueError(f"K4 witness requires n >= 5, got {n}")
    if not is_even(u):
        raise ValueError(f"vertex {u} is odd")
    if g is None:
        g = build_cq(n)
    quad = tuple(flip(u, i) for i in range(4))
    for x, y in combinations(quad, 2):
        if not has_p4(g, x, y):
            raise AssertionError(f"no P4 between {x} and {y} in CQ_{n}")
    return quad  # type: ignore[return-value]


def parity_classifier(g: CubeGraph, v: int) -> str:
    """Classify ``v`` as even or odd from graph structure alone."""
    if getattr(g, "n", 0) < 5:
        raise ValueError("parity classifier is only valid for crossed cubes with n >= 5")
    return EVEN if contains_k4(neighborhood_p4_graph(g, v)) else ODD


def parity_coloring(g: CubeGraph) -> list[int]:
    """Vertex colouring 0 (K4 present) / 1 (no K4); invariant under automorphisms."""
    return [0 if parity_classifier(g, v) == EVEN else 1 for v in g.vertices()]
