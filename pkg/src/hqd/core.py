"""Hypercube model: labels, adjacency, edges and the product embedding.

A vertex of Q_n is an n-bit integer. Coordinate j of the usual binary
string (leftmost character is coordinate 1) lives at bit j-1, so the
string ``"0100"`` is the integer 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgument

Edge = tuple[int, int]

# C4 vertex order 00, 01, 11, 10 read with the leftmost character as bit 0.
_GRAY2 = (0b00, 0b10, 0b11, 0b01)


def _check_label(u: int, n: int) -> None:
    if not 0 <= u < (1 << n):
        raise InvalidArgument(f"label {u} out of range for Q_{n}")


def are_adjacent(u: int, v: int, n: int) -> bool:
    _check_label(u, n)
    _check_label(v, n)
    x = u ^ v
    return x != 0 and x & (x - 1) == 0


def edge(u: int, v: int) -> Edge:
    """Canonical form of the undirected edge uv."""
    return (u, v) if u < v else (v, u)


def hypercube_edges(n: int) -> set[Edge]:
    if n < 1:
        raise InvalidArgument("n must be >= 1")
    return {(u, u | (1 << j)) for u in range(1 << n) for j in range(n) if not u >> j & 1}


def cycle_edges(cycle: Sequence[int]) -> Iterator[Edge]:
    """Edges of a closed vertex sequence (first vertex not repeated)."""
    k = len(cycle)
    for t in range(k):
        yield edge(cycle[t], cycle[(t + 1) % k])


def gray2(j: int) -> int:
    if not 0 <= j <= 3:
        raise InvalidArgument(f"C4 index {j} not in 0..3")
    return _GRAY2[j]


def c4_cycle() -> tuple[int, ...]:
    """Q_2 = C_4 as the label sequence 00, 01, 11, 10."""
    return _GRAY2


def from_bitstring(s: str) -> int:
    """``"1110"`` -> 7: leftmost character is the lowest bit."""
    if not s or set(s) - {"0", "1"}:
        raise InvalidArgument(f"not a bit string: {s!r}")
    return sum(1 << j for j, ch in enumerate(s) if ch == "1")


def to_bitstring(u: int, n: int) -> str:
    _check_label(u, n)
    return "".join("1" if u >> j & 1 else "0" for j in range(n))


@dataclass(frozen=True)
class ProductEmbedding:
    """Q_a x Q_b -> Q_{a+b}; the left factor takes the low-order bits."""

    left_bits: int
    right_bits: int

    @property
    def n(self) -> int:
        return self.left_bits + self.right_bits

    def __call__(self, u: int, v: int) -> int:
        return embed_product(self, u, v)

    def split(self, w: int) -> tuple[int, int]:
        _check_label(w, self.n)
        return w & ((1 << self.left_bits) - 1), w >> self.left_bits


def embed_product(e: ProductEmbedding, u: int, v: int) -> int:
    _check_label(u, e.left_bits)
    _check_label(v, e.right_bits)
    return u | (v << e.left_bits)


def product_edges(e: ProductEmbedding, left: Iterable[Edge], right: Iterable[Edge]) -> set[Edge]:
    """Edge set of G x H given factor edge sets over Q_a and Q_b.

    Horizontal edges run over every vertex of Q_b, vertical ones over every
    vertex of Q_a.
    """
    a, b = e.left_bits, e.right_bits
    out = set()
    for u, u2 in left:
        for v in range(1 << b):
            out.add(edge(u | v << a, u2 | v << a))
    for v, v2 in right:
        for u in range(1 << a):
            out.add(edge(u | v << a, u | v2 << a))
    return out
