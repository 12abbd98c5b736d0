"""Bit-level arithmetic on crossed-cube vertex addresses.

A vertex of an n-dimensional cube is the integer whose binary expansion is
its address ``u_{n-1} ... u_0``.  The dimension is carried by the caller.
Two-bit blocks ("pair codes") are encoded as ``2 * high + low``.
"""

from __future__ import annotations

MAX_DIMENSION = 28

# pair code -> its unique pair-related partner: 00~00, 10~10, 01~11, 11~01
_PARTNER = (0b00, 0b11, 0b10, 0b01)
# bits 0, 2, 4, ...: the low bit of every block
_EVEN_MASK = int("01" * MAX_DIMENSION, 2)


def check_dimension(n: int, lo: int = 1, hi: int = MAX_DIMENSION) -> None:
    if not isinstance(n, int) or not lo <= n <= hi:
        raise ValueError(f"dimension n={n!r} outside supported range [{lo}, {hi}]")


def _check_index(i: int, n: int | None) -> None:
    if i < 0 or (n is not None and i >= n):
        raise IndexError(f"bit index {i} out of range for dimension {n}")


def bit(u: int, i: int, n: int | None = None) -> int:
    _check_index(i, n)
    return (u >> i) & 1


def flip(u: int, i: int, n: int | None = None) -> int:
    """Return ``u`` with bit ``i`` negated."""
    _check_index(i, n)
    return u ^ (1 << i)


def is_even(u: int) -> bool:
    return not u & 1


def pair_code(u: int, i: int) -> int:
    """The 2-bit block ``u_{2i+1} u_{2i}`` as a pair code."""
    return (u >> (2 * i)) & 0b11


def pair_partner(a: int) -> int:
    if not 0 <= a <= 3:
        raise ValueError(f"pair code must be in 0..3, got {a}")
    return _PARTNER[a]


def pair_related(a: int, b: int) -> bool:
    return pair_partner(a) == b


def prefix_equal(u: int, v: int, x: int, n: int) -> bool:
    """True iff ``u`` and ``v`` agree on every bit strictly above ``x``."""
    _check_index(x, n)
    return (u >> (x + 1)) == (v >> (x + 1))


def suffix_pair_related(u: int, v: int, x: int) -> bool:
    """True iff blocks ``0 .. x//2 - 1`` of ``u`` and ``v`` are pairwise related.

    When ``x`` is odd, bit ``x - 1`` is not part of any block.
    """
    _check_index(x, None)
    return all(
        pair_related(pair_code(u, i), pair_code(v, i)) for i in range(x // 2)
    )


def pair_twist(u: int, blocks: int) -> int:
    """Replace each of the lowest ``blocks`` pair codes of ``u`` by its partner.

    A block's partner differs from it exactly when the block's low bit is
    set, and then only in the high bit.
    """
    if blocks <= 0:
        return u
    low_bits = u & _EVEN_MASK & ((1 << (2 * blocks)) - 1)
    return u ^ (low_bits << 1)


def to_bits(u: int, n: int) -> str:
    return format(u, f"0{n}b")
