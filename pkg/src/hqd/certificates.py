"""The decomposition container and the two hard-coded base decompositions.

The Q_4 and Q_6 cycles below are kept in their original listing order
(closing vertex dropped) so they can be compared string for string.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .core import Edge, cycle_edges, from_bitstring


@dataclass(frozen=True)
class PartitionedDecomposition:
    """Cycles of Q_{host_n}, each tagged with a partition-set id.

    Nothing here is checked beyond shape; ``hqd.verify`` is the authority on
    whether the cycles really decompose the hypercube.
    """

    host_n: int
    cycle_length: int
    cycles: tuple[tuple[int, ...], ...]
    set_of: tuple[int, ...]

    def __post_init__(self):
        if len(self.cycles) != len(self.set_of):
            raise ValueError("one partition-set id per cycle required")
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))
        object.__setattr__(self, "set_of", tuple(self.set_of))

    @property
    def num_sets(self) -> int:
        return len(set(self.set_of))

    def partition_sets(self) -> dict[int, list[int]]:
        """Set id -> indices of its cycles, ids in ascending order."""
        out: dict[int, list[int]] = {}
        for idx, s in enumerate(self.set_of):
            out.setdefault(s, []).append(idx)
        return dict(sorted(out.items()))

    @cached_property
    def edges(self) -> set[Edge]:
        return {e for c in self.cycles for e in cycle_edges(c)}

    def canonical(self) -> PartitionedDecomposition:
        """Same cycles, each rotated to start at its least vertex with the
        smaller neighbour second. Cycle order and set ids are kept."""
        return PartitionedDecomposition(
            self.host_n, self.cycle_length, tuple(canonical_rotation(c) for c in self.cycles), self.set_of
        )


def canonical_rotation(cycle: Sequence[int]) -> tuple[int, ...]:
    k = len(cycle)
    if k == 0:
        return ()
    i = min(range(k), key=cycle.__getitem__)
    fwd = tuple(cycle[(i + t) % k] for t in range(k))
    back = tuple(cycle[(i - t) % k] for t in range(k))
    return min(fwd, back)


def _cycle(strings: str) -> tuple[int, ...]:
    words = strings.split()
    assert words[0] == words[-1]
    return tuple(from_bitstring(w) for w in words[:-1])


Q4_R0 = "0000 0100 0101 1101 1100 1000 1001 0001 0000"
Q4_R1 = "0011 0111 0110 1110 1111 1011 1010 0010 0011"
Q4_B0 = "0000 0010 0110 0100 1100 1110 1010 1000 0000"
Q4_B1 = "0011 0001 0101 0111 1111 1101 1001 1011 0011"

Q6_C1 = """011000 011010 011110 001110 001010 101010 101110 111110 111010 111011 111111
101111 101011 001011 001111 011111 011011 011001 011101 001101 001001 101001 101101
111101 111001 111000 111100 101100 101000 001000 001100 011100 011000"""
Q6_C2 = """010100 010110 010010 000010 000110 100110 100010 110010 110110 110111 110011
100011 100111 000111 000011 010011 010111 010101 010001 000001 000101 100101 100001
110001 110101 110100 110000 100000 100100 000100 000000 010000 010100"""
Q6_B1 = """010110 010111 011111 011101 011100 111100 111101 111111 110111 110101 010101
000101 000111 001111 001101 001100 101100 101101 101111 100111 100101 100100 110100
010100 000100 000110 001110 101110 100110 110110 111110 011110 010110"""
Q6_B2 = """010110 110110 110100 111100 111110 111111 011111 011110 011100 010100 010101
011101 111101 110101 100101 101101 001101 000101 000100 001100 001110 001111 101111
101110 101100 100100 100110 100111 110111 010111 000111 000110 010110"""
Q6_Y1 = """011010 011011 010011 010001 010000 110000 110001 110011 111011 111001 011001
001001 001011 000011 000001 000000 100000 100001 100011 101011 101001 101000 111000
011000 001000 001010 000010 100010 101010 111010 110010 010010 011010"""
Q6_Y2 = """011010 111010 111000 110000 110010 110011 010011 010010 010000 011000 011001
010001 110001 111001 101001 100001 000001 001001 001000 000000 000010 000011 100011
100010 100000 101000 101010 101011 111011 011011 001011 001010 011010"""


def q4_certificate() -> PartitionedDecomposition:
    """Q_4 as R0, R1 (set 0) and B0, B1 (set 1), four 8-cycles."""
    cycles = tuple(_cycle(s) for s in (Q4_R0, Q4_R1, Q4_B0, Q4_B1))
    return PartitionedDecomposition(4, 8, cycles, (0, 0, 1, 1))


def q6_certificate() -> PartitionedDecomposition:
    """Q_6 as C1, C2, B1, B2, Y1, Y2 with sets {C1,C2}, {B1,Y1}, {B2,Y2}."""
    cycles = tuple(_cycle(s) for s in (Q6_C1, Q6_C2, Q6_B1, Q6_B2, Q6_Y1, Q6_Y2))
    return PartitionedDecomposition(6, 32, cycles, (0, 0, 1, 2, 1, 2))
