"""Vertex-orbit partitions of crossed cubes.

Three independent routes to the same partition:

* :func:`closure_orbits` -- components under a set of explicit automorphisms
  (an upper bound on the number of orbits is attained when they agree);
* :func:`exact_orbits` -- the orbits of the full automorphism group, found by
  individualization-refinement search;
* :func:`signature_partition` -- grouping by the even-indexed address bits
  ``u_0, u_2, ...`` that every automorphism preserves.

:func:`naive_orbits` enumerates all vertex permutations and is only used as
an oracle for tiny graphs.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator

from .automorphism import GeneratorSet, VertexMap, generator_set
from .bitaddress import check_dimension
from .topology import CROSSED, Graph

DEFAULT_EXACT_CAP = 128
NAIVE_CAP = 8


class UnionFind:
    """Disjoint sets over ``0 .. size - 1``; every root is its class minimum."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return [groups[r] for r in sorted(groups)]


class OrbitPartition:
    """Disjoint blocks covering the vertex set, sorted by minimum member."""

    def __init__(self, blocks: Iterable[Sequence[int]], n: int | None = None, method: str = ""):
        self.blocks: tuple[Sequence[int], ...] = tuple(
            sorted((b if isinstance(b, _SignatureBlock) else tuple(sorted(b)) for b in blocks),
                   key=lambda b: b[0])
        )
        self.n = n
        self.method = method

    @property
    def count(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Sequence[int]]:
        return iter(self.blocks)

    @property
    def representatives(self) -> list[int]:
        return [b[0] for b in self.blocks]

    @property
    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if v in b:
                return i
        raise KeyError(v)

    def labels(self) -> list[int]:
        """Block index of every vertex."""
        out = [-1] * sum(self.sizes)
        for i, b in enumerate(self.blocks):
            for v in b:
                out[v] = i
        return out

    def is_valid(self, order: int) -> bool:
        seen = [v for b in self.blocks for v in b]
        return all(len(b) > 0 for b in self.blocks) and sorted(seen) == list(range(order))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrbitPartition):
            return NotImplemented
        return self.sizes == other.sizes and all(
            tuple(a) == tuple(b) for a, b in zip(self.blocks, other.blocks)
        )

    def __repr__(self) -> str:
        return f"OrbitPartition(n={self.n}, method={self.method!r}, sizes={self.sizes})"


# ---------------------------------------------------------------- closure


def closure_orbits(n: int, gens: GeneratorSet | Iterable[VertexMap] | None = None) -> OrbitPartition:
    if gens is None:
        gens = generator_set(n)
    uf = UnionFind(1 << n)
    for m in gens:
        if m.n != n:
            raise ValueError(f"generator {m.label!r} acts on n={m.n}, expected {n}")
        for u, x in enumerate(m.image):
            uf.union(u, x)
    return OrbitPartition(uf.classes(), n, "closure")


# ---------------------------------------------------------------- signature


def _sig_length(n: int) -> int:
    return max(0, (n + 1) // 2 - 2)


def signature(u: int, n: int) -> tuple[int, ...]:
    """Bits ``u_0, u_2, ..., u_{2(k-1)}`` with ``k = ceil(n/2) - 2``."""
    check_dimension(n, 3)
    return tuple((u >> (2 * i)) & 1 for i in range(_sig_length(n)))


def signature_string(sig: tuple[int, ...]) -> str:
    return "".join(map(str, sig)) if sig else "-"


class _SignatureBlock(Sequence):
    """All n-bit addresses whose bits ``0, 2, ..., 2(k-1)`` are fixed.

    Members are listed in increasing order without materializing them.
    """

    def __init__(self, n: int, sig: tuple[int, ...]):
        self.n = n
        self.sig = sig
        self.fixed_mask = sum(1 << (2 * i) for i in range(len(sig)))
        self.fixed_value = sum(b << (2 * i) for i, b in enumerate(sig))
        self._free = [p for p in range(n) if not (self.fixed_mask >> p) & 1]

    def __len__(self) -> int:
        return 1 << len(self._free)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(len(self)))]
        if i < 0:
            i += len(self)
        if not 0 <= i < len(self):
            raise IndexError(i)
        u = self.fixed_value
        for j, p in enumerate(self._free):
            if (i >> j) & 1:
                u |= 1 << p
        return u

    def __contains__(self, u: object) -> bool:
        return isinstance(u, int) and 0 <= u < (1 << self.n) and u & self.fixed_mask == self.fixed_value

    def __iter__(self) -> Iterator[int]:
        return (self[i] for i in range(len(self)))


def signature_partition(n: int) -> OrbitPartition:
    check_dimension(n, 3)
    k = _sig_length(n)
    sigs = [tuple((s >> i) & 1 for i in range(k)) for s in range(1 << k)]
    return OrbitPartition((_SignatureBlock(n, s) for s in sigs), n, "signature")


def orbit_count_formula(n: int) -> int:
    check_dimension(n, 3)
    return 1 << ((n + 1) // 2 - 2)


def orbit_size_formula(n: int) -> int:
    check_dimension(n, 3)
    return 1 << (n // 2 + 2)


# ---------------------------------------------------------------- naive oracle


def naive_orbits(g: Graph, cap: int = NAIVE_CAP) -> OrbitPartition:
    """Orbits by trying every permutation of the vertex set."""
    if g.order > cap:
        raise ValueError(f"naive orbit enumeration capped at {cap} vertices, got {g.order}")
    edges = list(g.edges())
    uf = UnionFind(g.order)
    for perm in permutations(range(g.order)):
        if all(g.has_edge(perm[u], perm[v]) for u, v in edges):
            for u, x in enumerate(perm):
                uf.union(u, x)
    return OrbitPartition(uf.classes(), getattr(g, "n", None), "naive")


# ---------------------------------------------------------------- exact search


def _relabel(values: Sequence) -> list[int]:
    index = {s: i for i, s in enumerate(sorted(set(values)))}
    return [index[s] for s in values]


def refine(g: Graph, colors: Sequence[int]) -> tuple[list[int], tuple]:
    """Colour refinement to the coarsest equitable partition below ``colors``.

    Colours are renumbered ``0 .. c-1`` in sorted order of their refinement
    signatures, so the result and the returned trace depend only on the
    isomorphism type of ``(g, colors)``.
    """
    adj = g.adjacency
    colors = _relabel(colors)
    ncolors = len(set(colors))
    trace = []
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        distinct = sorted(set(sigs))
        index = {s: i for i, s in enumerate(distinct)}
        counts = [0] * len(distinct)
        new = []
        for s in sigs:
            c = index[s]
            counts[c] += 1
            new.append(c)
        trace.append((tuple(distinct), tuple(counts)))
        colors = new
        if len(distinct) == ncolors:
            return colors, tuple(trace)
        ncolors = len(distinct)


def individualize(colors: Sequence[int], v: int) -> list[int]:
    """Split ``v`` off into a singleton cell placed just after its old cell."""
    out = [2 * c for c in colors]
    out[v] += 1
    return out


def _target_cell(colors: list[int]) -> int | None:
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    multi = [c for c, k in counts.items() if k > 1]
    return min(multi) if multi else None


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.edges = list(g.edges())
        self.nodes = 0

    def _leaf_map(self, left: list[int], right: list[int]) -> list[int] | None:
        where = [0] * len(right)
        for y, c in enumerate(right):
            where[c] = y
        perm = [where[c] for c in left]
        if all(self.g.has_edge(perm[u], perm[v]) for u, v in self.edges):
            return perm
        return None

    def first(self, left: Sequence[int], right: Sequence[int]) -> list[int] | None:
        """An automorphism carrying colouring ``left`` onto ``right``, or None."""
        for perm in self.all(left, right):
            return perm
        return None

    def all(self, left: Sequence[int], right: Sequence[int]) -> Iterator[list[int]]:
        self.nodes += 1
        left, tl = refine(self.g, left)
        right, tr = refine(self.g, right)
        if tl != tr:
            return
        cell = _target_cell(left)
        if cell is None:
            perm = self._leaf_map(left, right)
            if perm is not None:
                yield perm
            return
        x = left.index(cell)
        ys = [y for y, c in enumerate(right) if c == cell]
        left_x = individualize(left, x)
        for y in ys:
            yield from self.all(left_x, individualize(right, y))


@dataclass
class ExactResult:
    partition: OrbitPartition
    automorphisms: list[VertexMap] = field(default_factory=list)
    searches: int = 0
    nodes: int = 0


def _initial_colors(g: Graph, seeded: bool) -> list[int]:
    if not seeded:
        return [0] * g.order
    if getattr(g, "kind", None) != CROSSED or getattr(g, "n", 0) < 5:
        raise ValueError("seeded refinement needs a crossed cube with n >= 5")
    from .p4 import parity_coloring

    return parity_coloring(g)


def solve_orbits(g: Graph, seeded: bool = False, cap: int = DEFAULT_EXACT_CAP) -> ExactResult:
    """Exact automorphism-group orbits plus the automorphisms that witnessed them.

    Representatives are processed in increasing order.  For each, every
    candidate image not already known to share (or not share) its orbit is
    settled by one search; a found automorphism merges all of its cycles.
    """
    if g.order > cap:
        raise ValueError(f"exact orbit search capped at {cap} vertices, got {g.order}")
    n = getattr(g, "n", None)
    order = g.order
    base, _ = refine(g, _initial_colors(g, seeded))
    search = _Search(g)
    uf = UnionFind(order)
    found: list[VertexMap] = []
    searches = 0
    done = [False] * order
    for u in range(order):
        if done[u]:
            continue
        refuted: list[int] = []
        for v in range(u + 1, order):
            if done[v] or base[v] != base[u] or uf.find(v) == uf.find(u):
                continue
            root_v = uf.find(v)
            if any(uf.find(r) == root_v for r in refuted):
                continue
            searches += 1
            perm = search.first(individualize(base, u), individualize(base, v))
            if perm is None:
                refuted.append(v)
                continue
            m = VertexMap(n, tuple(perm), f"aut{len(found)}") if n is not None else perm
            found.append(m)
            for x, y in enumerate(perm):
                uf.union(x, y)
        root = uf.find(u)
        for v in range(order):
            if uf.find(v) == root:
                done[v] = True
    method = "exact-seeded" if seeded else "exact"
    return ExactResult(OrbitPartition(uf.classes(), n, method), found, searches, search.nodes)


def exact_orbits(g: Graph, seeded: bool = False, cap: int = DEFAULT_EXACT_CAP) -> OrbitPartition:
    return solve_orbits(g, seeded, cap).partition


def enumerate_automorphisms(g: Graph, seeded: bool = False, cap: int = DEFAULT_EXACT_CAP) -> Iterator[list[int]]:
    """Every automorphism of ``g``, each exactly once.

    Walks the full individualization tree; leaves of a tree rooted at a fixed
    colouring correspond one-to-one with automorphisms.
    """
    if g.order > cap:
        raise ValueError(f"automorphism enumeration capped at {cap} vertices, got {g.order}")
    base = _initial_colors(g, seeded)
    yield from _Search(g).all(base, base)
