"""Build and verify decompose(n, i) for every even n up to --max-n.

Prints one row per case with cycle/set counts, build time and verify time.
Caches are cleared first so the timings include the shared sub-results.
"""

import argparse
import time
import tracemalloc

from hqd import drivers
from hqd.drivers import DecompositionRequest, decompose
from hqd.verify import check_counts, verify_partitionable


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--memory", action="store_true", help="track peak Python allocations (slower)")
    args = ap.parse_args()

    for f in (drivers._decompose, drivers.ham_decompose, drivers.halfham_decompose):
        f.cache_clear()
    if args.memory:
        tracemalloc.start()
    print(f"{'n':>3} {'i':>3} {'cycles':>7} {'sets':>5} {'build_s':>8} {'verify_s':>9} ok")
    start = time.perf_counter()
    failures = 0
    for n in range(2, args.max_n + 1, 2):
        for i in range(2, n + 1):
            t0 = time.perf_counter()
            d = decompose(DecompositionRequest(n, i))
            t1 = time.perf_counter()
            rep = verify_partitionable(d).extend(check_counts(d, i))
            t2 = time.perf_counter()
            failures += not rep.ok
            print(f"{n:>3} {i:>3} {len(d.cycles):>7} {d.num_sets:>5} {t1 - t0:>8.3f} {t2 - t1:>9.3f} {rep.ok}")
    print(f"total {time.perf_counter() - start:.2f} s, {failures} failure(s)")
    if args.memory:
        print(f"peak traced memory {tracemalloc.get_traced_memory()[1] / 2**20:.1f} MiB")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
