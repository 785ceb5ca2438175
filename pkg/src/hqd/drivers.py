"""Top-level constructions: Hamiltonian decompositions of Q_n, decompositions
into 2^{n-1}-cycles, and the general decompose(n, i) entry point.

Results are cached per argument; PartitionedDecomposition is frozen, so the
cached objects are safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .certificates import PartitionedDecomposition, q4_certificate, q6_certificate
from .combinators import cart_times_c4, hh_product
from .core import ProductEmbedding, c4_cycle, gray2
from .errors import InvalidArgument
from .torus import kotzig_torus


@dataclass(frozen=True)
class DecompositionRequest:
    """Decompose Q_n into cycles of length 2^i."""

    n: int
    i: int

    def __post_init__(self):
        n, i = self.n, self.i
        if not isinstance(n, int) or not isinstance(i, int) or isinstance(n, bool) or isinstance(i, bool):
            raise InvalidArgument("n and i must be integers")
        if n < 2 or n % 2:
            raise InvalidArgument(f"n must be even and >= 2, got {n}")
        if not 2 <= i <= n:
            raise InvalidArgument(f"need 2 <= i <= n, got i={i}, n={n}")

    @property
    def cycle_length(self) -> int:
        return 1 << self.i

    @property
    def expected_cycles(self) -> int:
        return self.n * (1 << (self.n - 1)) // (1 << self.i)


def _require_even(n: int, least: int) -> None:
    if not isinstance(n, int) or n < least or n % 2:
        raise InvalidArgument(f"n must be even and >= {least}, got {n}")


@lru_cache(maxsize=None)
def ham_decompose(n: int) -> PartitionedDecomposition:
    """n/2 Hamiltonian cycles of Q_n, each its own partition set.

    For n >= 6, Q_n = Q_{2a} x Q_{2b} with a = n // 4 and b = n/2 - a, so
    a <= b <= 2a and hh_product accepts the b Hamiltonian cycles of Q_{2b}.
    """
    _require_even(n, 2)
    if n == 2:
        return PartitionedDecomposition(2, 4, (c4_cycle(),), (0,))
    if n == 4:
        e = ProductEmbedding(2, 2)
        cycles = tuple(tuple(e(gray2(x), gray2(y)) for x, y in cyc) for cyc in kotzig_torus(4, 4))
        return PartitionedDecomposition(4, 16, cycles, (0, 1))
    a = n // 4
    b = n // 2 - a
    g = ham_decompose(2 * a)
    h = ham_decompose(2 * b)
    return hh_product(g, h.cycles, ProductEmbedding(2 * a, 2 * b))


@lru_cache(maxsize=None)
def halfham_decompose(n: int) -> PartitionedDecomposition:
    """Q_n into cycles of length 2^{n-1}, n/2 partition sets of two cycles.

    Beyond the two shipped certificates, n = 4m + 2j with j in {0, 1} and
    Q_n = Q_{2m} x Q_{2m+2j}.
    """
    _require_even(n, 4)
    if n == 4:
        return q4_certificate()
    if n == 6:
        return q6_certificate()
    m, j = n // 4, (n % 4) // 2
    g = halfham_decompose(2 * m)
    h = ham_decompose(2 * m + 2 * j)
    return hh_product(g, h.cycles, ProductEmbedding(2 * m, 2 * m + 2 * j))


@lru_cache(maxsize=None)
def _decompose(n: int, i: int) -> PartitionedDecomposition:
    if i % 2 and n == i + 1:
        return halfham_decompose(n)
    if i % 2 == 0 and n == i:
        return ham_decompose(n)
    return cart_times_c4(_decompose(n - 2, i))


def decompose(req: DecompositionRequest) -> PartitionedDecomposition:
    """Partitionable decomposition of Q_n into 2^i-cycles.

    Starts from the smallest even dimension that fits a 2^i-cycle and adds
    C_4 factors one at a time.
    """
    if not isinstance(req, DecompositionRequest):
        raise InvalidArgument("decompose expects a DecompositionRequest")
    return _decompose(req.n, req.i)
