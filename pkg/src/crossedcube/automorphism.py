"""Explicit crossed-cube automorphisms and checks on vertex maps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .bitaddress import check_dimension, flip
from .topology import Graph, build_cq, neighbor_cq


@dataclass(frozen=True)
class VertexMap:
    """A map on ``0 .. 2**n - 1`` stored as its full image table."""

    n: int
    image: tuple[int, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if len(self.image) != 1 << self.n:
            raise ValueError(
                f"image has {len(self.image)} entries, expected {1 << self.n}"
            )

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int], int], label: str = "") -> VertexMap:
        return cls(n, tuple(fn(u) for u in range(1 << n)), label)

    @classmethod
    def identity(cls, n: int) -> VertexMap:
        return cls(n, tuple(range(1 << n)), "identity")

    def __call__(self, u: int) -> int:
        return self.image[u]

    def __len__(self) -> int:
        return len(self.image)

    def is_bijection(self) -> bool:
        size = len(self.image)
        return len(set(self.image)) == size and all(0 <= x < size for x in self.image)

    def compose(self, other: VertexMap) -> VertexMap:
        """``self`` after ``other``."""
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        return VertexMap(self.n, tuple(self.image[x] for x in other.image))

    def inverse(self) -> VertexMap:
        inv = [0] * len(self.image)
        for u, x in enumerate(self.image):
            inv[x] = u
        return VertexMap(self.n, tuple(inv), f"{self.label}^-1" if self.label else "")


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    maps: tuple[VertexMap, ...]

    def __iter__(self):
        return iter(self.maps)

    def __len__(self) -> int:
        return len(self.maps)

    @property
    def labels(self) -> list[str]:
        return [m.label for m in self.maps]


def gen_flip(k: int, n: int) -> VertexMap:
    """The map ``u -> f_k(u)``.

    Only odd ``k`` and ``k`` in ``{n-1, n-2}`` give automorphisms; other even
    ``k`` are rejected (see :func:`counterexample_even_flip`).
    """
    check_dimension(n, 2)
    if not 0 <= k < n:
        raise IndexError(f"flip index {k} out of range for n={n}")
    if k % 2 == 0 and k not in (n - 1, n - 2):
        raise ValueError(f"f_{k} is not an automorphism of CQ_{n} (even k below n-2)")
    mask = 1 << k
    return VertexMap(n, tuple(u ^ mask for u in range(1 << n)), f"f{k}")


def gen_conditional_odd_n(n: int) -> VertexMap:
    """Flip bit n-3, plus bit n-2 when the top bit is set."""
    check_dimension(n, 3)
    if n % 2 == 0:
        raise ValueError(f"n={n} must be odd")
    top = 1 << (n - 1)

    def phi(u: int) -> int:
        if u & top:
            u = flip(u, n - 2)
        return flip(u, n - 3)

    return VertexMap.from_function(n, phi, "cond_odd")


# Top nibbles u_{n-1}..u_{n-4} on which bit n-3 is also flipped.  The
# commonly quoted list {0100, 1000, 0111, 1011} is not closed under the map
# (0101 and 0111 would both land on 0100); closing it under the bit n-4 flip
# gives exactly the nibbles with u_{n-1} != u_{n-2}.
_EVEN_TRIGGER = frozenset(
    {0b0100, 0b0101, 0b0110, 0b0111, 0b1000, 0b1001, 0b1010, 0b1011}
)


def gen_conditional_even_n(n: int) -> VertexMap:
    """Flip bit n-4, plus bit n-3 when the two top bits differ."""
    check_dimension(n, 4)
    if n % 2 == 1:
        raise ValueError(f"n={n} must be even")

    def phi(u: int) -> int:
        if (u >> (n - 4)) in _EVEN_TRIGGER:
            u = flip(u, n - 3)
        return flip(u, n - 4)

    return VertexMap.from_function(n, phi, "cond_even")


def generator_set(n: int) -> GeneratorSet:
    """The ``n // 2 + 2`` explicit automorphisms of CQ_n.

    Order: odd flips ascending, the even flip among ``f_{n-1}, f_{n-2}``,
    then the conditional map.
    """
    check_dimension(n, 3)
    maps = [gen_flip(k, n) for k in range(1, n, 2)]
    maps.append(gen_flip(n - 1 if n % 2 else n - 2, n))
    maps.append(gen_conditional_odd_n(n) if n % 2 else gen_conditional_even_n(n))
    return GeneratorSet(n, tuple(maps))


def _check_dims(g: Graph, m: VertexMap) -> None:
    if len(m) != g.order:
        raise ValueError(
            f"map on {len(m)} vertices does not match graph on {g.order} vertices"
        )


def is_automorphism(g: Graph, m: VertexMap) -> bool:
    """Bijective and edge-preserving.

    Only the forward direction is checked: a bijection that maps the finite
    edge set into itself maps it onto itself.
    """
    _check_dims(g, m)
    if not m.is_bijection():
        return False
    image = m.image
    return all(g.has_edge(image[u], image[v]) for u, v in g.edges())


def is_automorphism_both_ways(g: Graph, m: VertexMap) -> bool:
    """Checks ``uv in E <=> m(u)m(v) in E`` for every vertex pair."""
    _check_dims(g, m)
    if not m.is_bijection():
        return False
    image = m.image
    return all(
        g.has_edge(u, v) == g.has_edge(image[u], image[v])
        for u in g.vertices()
        for v in g.vertices()
        if u != v
    )


def check_involution(m: VertexMap | Sequence[int]) -> bool:
    image = m.image if isinstance(m, VertexMap) else m
    return all(image[image[u]] == u for u in range(len(image)))


def counterexample_even_flip(k: int, n: int, g: Graph | None = None) -> tuple[int, int]:
    """First edge ``uv`` of CQ_n (sorted order) with ``f_k(u) f_k(v)`` a non-edge."""
    check_dimension(n, 5)
    if k % 2 or not 0 <= k < n or k in (n - 2, n - 1):
        raise ValueError(f"no counterexample: need even k < n-2, got k={k}, n={n}")
    if g is None:
        g = build_cq(n)
    mask = 1 << k
    for u, v in g.edges():
        if not g.has_edge(u ^ mask, v ^ mask):
            return u, v
    raise AssertionError(f"f_{k} preserves every edge of CQ_{n}")


def preserves_low_neighbors(g: Graph, m: VertexMap) -> bool:
    """Does ``m`` send 0th and 1st neighbours to 0th and 1st neighbours?"""
    _check_dims(g, m)
    n = m.n
    image = m.image
    return all(
        image[neighbor_cq(u, k, n)] == neighbor_cq(image[u], k, n)
        for u in range(len(image))
        for k in (0, 1)
    )


def reduce(m: VertexMap) -> VertexMap:
    """Restrict an automorphism of CQ_{n+2} to CQ_n via ``v -> m(4v) // 4``."""
    n = m.n - 2
    check_dimension(n, 1)
    image = tuple(m.image[v << 2] >> 2 for v in range(1 << n))
    reduced = VertexMap(n, image, f"reduce({m.label})" if m.label else "reduced")
    if not reduced.is_bijection():
        raise ValueError("reduced map is not a bijection; input was not an automorphism")
    return reduced


def preserves_parity(m: VertexMap) -> bool:
    return all((x ^ u) & 1 == 0 for u, x in enumerate(m.image))

