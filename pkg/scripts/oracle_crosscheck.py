"""Compare the exhaustive search with the constructions on Q_2 and Q_4."""

import time

from hqd.drivers import DecompositionRequest, decompose
from hqd.verify import brute_force_decompose, oracle_accepts

for n, i in [(2, 2), (4, 2), (4, 3), (4, 4)]:
    t = time.perf_counter()
    found = brute_force_decompose(n, i)
    dt = time.perf_counter() - t
    built = decompose(DecompositionRequest(n, i))
    print(
        f"Q_{n}, length {1 << i}: oracle {'found' if found else 'none'} in {dt:.3f} s "
        f"({len(found.cycles) if found else 0} cycles), construction accepted: {oracle_accepts(built)}"
    )

# Q_3 is odd-regular, so no cycle decomposition exists at all.
print("Q_3, length 4:", brute_force_decompose(3, 2))
