"""Certificate checks and a brute-force oracle for tiny hypercubes.

Nothing in here looks at how a decomposition was built: checks read the
cycles and the host dimension only, and every failure is collected rather
than stopping at the first one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .certificates import PartitionedDecomposition
from .errors import InvalidArgument, UnsupportedInstance

ORACLE_MAX_EDGES = 64
_SAMPLE = 8


class Failure(NamedTuple):
    check: str
    item: object


@dataclass
class VerificationReport:
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def categories(self) -> set[str]:
        return {f.check for f in self.failures}

    def add(self, check: str, item: object) -> None:
        self.failures.append(Failure(check, item))

    def extend(self, other: VerificationReport) -> VerificationReport:
        self.failures.extend(other.failures)
        return self

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{f.check}: {f.item}" for f in self.failures)


def _edge(u, v):
    return (u, v) if u < v else (v, u)


def _cube_edges(n: int) -> set:
    return {(u, u ^ (1 << j)) for u in range(1 << n) for j in range(n) if not u >> j & 1}


def _torus_edges(a: int, b: int) -> set:
    out = set()
    for x in range(a):
        for y in range(b):
            out.add(_edge((x, y), ((x + 1) % a, y)))
            out.add(_edge((x, y), (x, (y + 1) % b)))
    return out


def _one_bit(x: int) -> bool:
    return x != 0 and x & (x - 1) == 0


def check_cycle(cycle: Sequence[int], n: int, tag: object = None) -> VerificationReport:
    """Distinct vertices, even length >= 4, consecutive vertices adjacent in Q_n.

    ``tag`` is prefixed to offending items (the cycle index, usually).
    """
    rep = VerificationReport()
    where = (lambda x: x) if tag is None else (lambda x: (tag, x))
    k = len(cycle)
    bad = [v for v in cycle if not (isinstance(v, int) and 0 <= v < 1 << n)]
    if bad:
        rep.add("range", where(bad[:_SAMPLE]))
        return rep
    if k < 4 or k % 2:
        rep.add("length", where(k))
    dup = [v for v, c in Counter(cycle).items() if c > 1]
    if dup:
        rep.add("distinctness", where(sorted(dup)[:_SAMPLE]))
    for t in range(k):
        u, v = cycle[t], cycle[(t + 1) % k]
        if not _one_bit(u ^ v):
            rep.add("adjacency", where((u, v)))
    return rep


def _check_edge_cover(cycles: Iterable[Sequence], host: set) -> VerificationReport:
    rep = VerificationReport()
    count: Counter = Counter()
    for c in cycles:
        k = len(c)
        for t in range(k):
            count[_edge(c[t], c[(t + 1) % k])] += 1
    repeated = sorted(e for e, m in count.items() if m > 1)
    if repeated:
        rep.add("disjointness", {"edges": len(repeated), "sample": repeated[:_SAMPLE]})
    missing = sorted(host - count.keys())
    if missing:
        rep.add("coverage", {"missing": len(missing), "sample": missing[:_SAMPLE]})
    foreign = sorted(count.keys() - host)
    if foreign:
        rep.add("foreign-edge", {"edges": len(foreign), "sample": foreign[:_SAMPLE]})
    return rep


def check_decomposition(d: PartitionedDecomposition) -> VerificationReport:
    """Every cycle valid, one common power-of-two length, and the edge
    multiset equal to E(Q_n)."""
    rep = VerificationReport()
    n = d.host_n
    length = d.cycle_length
    if length < 4 or length & (length - 1):
        rep.add("uniform-length", f"declared length {length} is not a power of two >= 4")
    for idx, c in enumerate(d.cycles):
        rep.extend(check_cycle(c, n, tag=idx))
        if len(c) != length:
            rep.add("uniform-length", (idx, len(c)))
    if rep.categories & {"range"}:
        return rep
    return rep.extend(_check_edge_cover(d.cycles, _cube_edges(n)))


def _check_vertex_partition(cycles: Sequence[Sequence], set_of: Sequence[int], vertices: set) -> VerificationReport:
    rep = VerificationReport()
    groups: dict[int, list[int]] = {}
    for idx, s in enumerate(set_of):
        groups.setdefault(s, []).append(idx)
    for s, members in sorted(groups.items()):
        count: Counter = Counter(v for i in members for v in cycles[i])
        overlap = sorted(v for v, m in count.items() if m > 1)
        if overlap:
            rep.add("vertex-overlap", {"set": s, "vertices": len(overlap), "sample": overlap[:_SAMPLE]})
        missing = vertices - count.keys()
        if missing:
            rep.add("undercoverage", {"set": s, "vertices": len(missing), "sample": sorted(missing)[:_SAMPLE]})
    return rep


def check_partitionable(d: PartitionedDecomposition) -> VerificationReport:
    """Within each partition set, cycle vertex sets are disjoint and cover Q_n."""
    return _check_vertex_partition(d.cycles, d.set_of, set(range(1 << d.host_n)))


def verify_partitionable(d: PartitionedDecomposition) -> VerificationReport:
    """All three checks."""
    rep = VerificationReport()
    for c in d.cycles:
        if not c:
            rep.add("length", 0)
    return rep.extend(check_decomposition(d)).extend(check_partitionable(d))


def check_counts(d: PartitionedDecomposition, i: int) -> VerificationReport:
    """Counting identities for a decomposition of Q_n into 2^i-cycles:
    n 2^{n-1} / 2^i cycles, n/2 sets, 2^{n-i} cycles per set."""
    rep = VerificationReport()
    n = d.host_n
    if d.cycle_length != 1 << i:
        rep.add("counts", f"cycle length {d.cycle_length} != 2^{i}")
    want = n * (1 << (n - 1)) // (1 << i)
    if len(d.cycles) != want:
        rep.add("counts", f"{len(d.cycles)} cycles, expected {want}")
    if d.num_sets != n // 2:
        rep.add("counts", f"{d.num_sets} partition sets, expected {n // 2}")
    for s, members in d.partition_sets().items():
        if len(members) != 1 << (n - i):
            rep.add("counts", f"set {s} has {len(members)} cycles, expected {1 << (n - i)}")
    return rep


def check_part_decomposition(
    cycles: Sequence[Sequence[int]], set_of: Sequence[int], part: set, n: int
) -> VerificationReport:
    """Cycles partition the edges of a spanning subgraph ``part`` of Q_n and
    every partition set covers all of V(Q_n)."""
    rep = VerificationReport()
    for idx, c in enumerate(cycles):
        rep.extend(check_cycle(c, n, tag=idx))
    rep.extend(_check_edge_cover(cycles, part))
    return rep.extend(_check_vertex_partition(cycles, set_of, set(range(1 << n))))


def check_torus_decomposition(a: int, b: int, cycles, set_of) -> VerificationReport:
    """Same three checks for cycles of C_a x C_b given in (x, y) coordinates."""
    rep = VerificationReport()
    host = _torus_edges(a, b)
    for idx, c in enumerate(cycles):
        k = len(c)
        if k < 3:
            rep.add("length", (idx, k))
        if len(set(c)) != k:
            rep.add("distinctness", idx)
        for t in range(k):
            if _edge(c[t], c[(t + 1) % k]) not in host:
                rep.add("adjacency", (idx, (c[t], c[(t + 1) % k])))
    rep.extend(_check_edge_cover(cycles, host))
    verts = {(x, y) for x in range(a) for y in range(b)}
    return rep.extend(_check_vertex_partition(cycles, set_of, verts))


# --- brute-force oracle -------------------------------------------------


def _enumerate_cycles(n: int, length: int) -> list[tuple[int, ...]]:
    """All cycles of the given length in Q_n, once each: rooted at their
    least vertex, second vertex smaller than the last."""
    out = []
    nbrs = [[u ^ (1 << j) for j in range(n)] for u in range(1 << n)]
    for s in range(1 << n):
        path = [s]
        used = {s}

        def extend():
            cur = path[-1]
            if len(path) == length:
                if s in nbrs[cur] and path[1] < path[-1]:
                    out.append(tuple(path))
                return
            for w in nbrs[cur]:
                if w > s and w not in used:
                    path.append(w)
                    used.add(w)
                    extend()
                    used.discard(path.pop())

        extend()
    return out


def _exact_covers(universe: set, rows: dict[int, list]):
    """Algorithm X over dict-of-sets; yields lists of row ids."""
    cols: dict = {x: set() for x in universe}
    for r, items in rows.items():
        for x in items:
            cols[x].add(r)
    partial: list[int] = []

    def select(r):
        removed = []
        for x in rows[r]:
            for r2 in cols[x]:
                for y in rows[r2]:
                    if y != x:
                        cols[y].discard(r2)
            removed.append(cols.pop(x))
        return removed

    def deselect(r, removed):
        for x in reversed(rows[r]):
            cols[x] = removed.pop()
            for r2 in cols[x]:
                for y in rows[r2]:
                    if y != x:
                        cols[y].add(r2)

    def solve():
        if not cols:
            yield list(partial)
            return
        x = min(cols, key=lambda c: (len(cols[c]), c))
        for r in sorted(cols[x]):
            partial.append(r)
            removed = select(r)
            yield from solve()
            deselect(r, removed)
            partial.pop()

    yield from solve()


def _group_into_sets(cycles: list[tuple[int, ...]], n: int) -> list[int] | None:
    """Assign cycles to partition sets whose vertex sets tile V(Q_n)."""
    size = 1 << n
    per_set = size // len(cycles[0])
    k = len(cycles) // per_set
    if k * per_set != len(cycles):
        return None
    vsets = [frozenset(c) for c in cycles]
    assign = [-1] * len(cycles)
    covered = [set() for _ in range(k)]
    fill = [0] * k

    def place(idx):
        if idx == len(cycles):
            return True
        seen_empty = False
        for s in range(k):
            if fill[s] == per_set or covered[s] & vsets[idx]:
                continue
            if fill[s] == 0:
                if seen_empty:
                    continue
                seen_empty = True
            assign[idx] = s
            covered[s] |= vsets[idx]
            fill[s] += 1
            if place(idx + 1):
                return True
            covered[s] -= vsets[idx]
            fill[s] -= 1
        assign[idx] = -1
        return False

    return assign if place(0) else None


def brute_force_decompose(n: int, i: int) -> PartitionedDecomposition | None:
    """Exhaustive exact-cover search for a partitionable decomposition of Q_n
    into 2^i-cycles. Returns ``None`` when none exists."""
    if n < 1 or i < 2:
        raise InvalidArgument("need n >= 1 and i >= 2")
    if n * (1 << (n - 1)) > ORACLE_MAX_EDGES:
        raise UnsupportedInstance(f"Q_{n} has more than {ORACLE_MAX_EDGES} edges")
    length = 1 << i
    if length > 1 << n:
        return None
    candidates = _enumerate_cycles(n, length)
    rows = {r: sorted(_edge(c[t], c[(t + 1) % length]) for t in range(length)) for r, c in enumerate(candidates)}
    for cover in _exact_covers(_cube_edges(n), rows):
        chosen = [candidates[r] for r in cover]
        assign = _group_into_sets(chosen, n)
        if assign is not None:
            order = sorted(range(len(chosen)), key=lambda j: (assign[j], chosen[j]))
            return PartitionedDecomposition(
                n, length, tuple(chosen[j] for j in order), tuple(assign[j] for j in order)
            )
    return None


def _rooted(cycle: Sequence[int]) -> tuple[int, ...]:
    """The enumeration's representative: least vertex first, second vertex
    smaller than the last."""
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    fwd = tuple(cycle[(i + t) % k] for t in range(k))
    return fwd if fwd[1] < fwd[-1] else (fwd[0],) + fwd[:0:-1]


def oracle_accepts(d: PartitionedDecomposition) -> bool:
    """The predicate the exhaustive search solves, applied to a given
    certificate: every cycle is one of the enumerated 2^i-cycles, the rows
    exactly cover E(Q_n), and the set ids tile V(Q_n) set by set."""
    n, length = d.host_n, d.cycle_length
    if n * (1 << (n - 1)) > ORACLE_MAX_EDGES:
        raise UnsupportedInstance(f"Q_{n} has more than {ORACLE_MAX_EDGES} edges")
    if any(len(c) != length or len(set(c)) != length for c in d.cycles):
        return False
    known = set(_enumerate_cycles(n, length))
    if any(_rooted(c) not in known for c in d.cycles):
        return False
    rows = [_edge(c[t], c[(t + 1) % length]) for c in d.cycles for t in range(length)]
    if len(rows) != len(set(rows)) or set(rows) != _cube_edges(n):
        return False
    return _check_vertex_partition(d.cycles, d.set_of, set(range(1 << n))).ok
