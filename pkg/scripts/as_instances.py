"""Time the three-cycle product on the instances the recursions use.

N is the order of the Hamiltonian pair, c the length of the cycle factor.
"""

import time

from hqd.combinators import HamPair, as_product
from hqd.core import ProductEmbedding
from hqd.drivers import ham_decompose


def gray(bits):
    return tuple(x ^ (x >> 1) for x in range(1 << bits))


for pair_bits, cycle_bits in [(4, 2), (6, 2), (6, 3), (6, 4), (8, 2)]:
    h = ham_decompose(pair_bits)
    pair = HamPair(h.cycles[0], h.cycles[1])
    t = time.perf_counter()
    out = as_product(pair, gray(cycle_bits), ProductEmbedding(pair_bits, cycle_bits))
    print(f"N={1 << pair_bits:>4} c={1 << cycle_bits:>3}: 3 cycles of {len(out[0])} in {time.perf_counter() - t:.2f} s")
