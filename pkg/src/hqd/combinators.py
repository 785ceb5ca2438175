"""Decompositions of Cartesian products built from decompositions of factors.

Factor graphs are spanning subgraphs of hypercubes given as edge sets (or
cycles); products are placed in Q_{a+b} through a ``ProductEmbedding``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .certificates import PartitionedDecomposition
from .core import Edge, ProductEmbedding, c4_cycle, cycle_edges, edge, gray2, product_edges
from .errors import InvalidArgument, UnsupportedInstance
from .torus import kotzig_torus, lemma_8ell

# Square switches tried by as_product before giving up.
AS_SWITCH_MAX_STEPS = 20_000
AS_SWITCH_SEED = 0

def _vertices_of(edges) -> set[int]:
    return {v for e in edges for v in e}


def is_spanning(edges, n: int) -> bool:
    return len(_vertices_of(edges)) == 1 << n


@dataclass(frozen=True)
class HamPair:
    """Two edge-disjoint Hamiltonian cycles on one vertex set."""

    first: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(self.first))
        object.__setattr__(self, "second", tuple(self.second))
        if set(self.first) != set(self.second) or len(set(self.first)) != len(self.first):
            raise InvalidArgument("HamPair cycles must visit the same vertices once each")
        if len(self.first) < 3:
            raise InvalidArgument("HamPair needs at least 3 vertices")
        if set(cycle_edges(self.first)) & set(cycle_edges(self.second)):
            raise InvalidArgument("HamPair cycles share an edge")

    @property
    def order(self) -> int:
        return len(self.first)


def aot_product(parts_g: Sequence[set[Edge]], parts_h: Sequence[set[Edge]], e: ProductEmbedding) -> list[set[Edge]]:
    """Part i of G x H is G_i x H_i; all parts must be spanning."""
    if len(parts_g) != len(parts_h):
        raise InvalidArgument(f"{len(parts_g)} parts of G but {len(parts_h)} parts of H")
    for parts, bits, name in ((parts_g, e.left_bits, "G"), (parts_h, e.right_bits, "H")):
        for idx, part in enumerate(parts):
            if not is_spanning(part, bits):
                raise InvalidArgument(f"part {idx} of {name} is not spanning")
    return [product_edges(e, g, h) for g, h in zip(parts_g, parts_h)]


def one_set_product(family: Sequence[Sequence[int]], h_edges: set[Edge], e: ProductEmbedding) -> list[set[Edge]]:
    """E(C x H) for each cycle C of a single partition set of G.

    H is taken on all of V(Q_b). A horizontal edge goes to the cycle owning
    it, a vertical edge at u to the cycle through u.
    """
    seen: set[int] = set()
    for c in family:
        if seen & set(c):
            raise InvalidArgument("family cycles are not vertex-disjoint")
        seen |= set(c)
    if len(seen) != 1 << e.left_bits:
        raise InvalidArgument("family does not cover V(G)")
    out = []
    a, nb = e.left_bits, 1 << e.right_bits
    for c in family:
        part = {edge(u | v << a, w | v << a) for u, w in cycle_edges(c) for v in range(nb)}
        part |= {edge(u | v << a, u | w << a) for u in c for v, w in h_edges}
        out.append(part)
    return out


def compose_partitionable(outer: Sequence[set[Edge]], inner: Sequence[PartitionedDecomposition]) -> PartitionedDecomposition:
    """Concatenate decompositions of spanning parts; each inner partition set
    becomes its own set of the result."""
    if len(outer) != len(inner) or not outer:
        raise InvalidArgument("need one inner decomposition per outer part")
    n = inner[0].host_n
    length = inner[0].cycle_length
    total = 0
    union: set[Edge] = set()
    cycles: list[tuple[int, ...]] = []
    set_of: list[int] = []
    offset = 0
    for idx, (part, dec) in enumerate(zip(outer, inner)):
        if dec.host_n != n or dec.cycle_length != length:
            raise InvalidArgument(f"inner decomposition {idx} has a different host or cycle length")
        if not is_spanning(part, n):
            raise InvalidArgument(f"outer part {idx} is not spanning")
        if dec.edges != part or sum(len(c) for c in dec.cycles) != len(part):
            raise InvalidArgument(f"inner decomposition {idx} does not decompose its part")
        total += len(part)
        union |= part
        ids = {s: offset + t for t, s in enumerate(sorted(set(dec.set_of)))}
        cycles.extend(dec.cycles)
        set_of.extend(ids[s] for s in dec.set_of)
        offset += len(ids)
    if total != len(union):
        raise InvalidArgument("outer parts overlap")
    return PartitionedDecomposition(n, length, tuple(cycles), tuple(set_of))


# --- Hamiltonian decomposition of (H1 u H2) x C_c ---------------------------


def _four_cycles(nbrs: Sequence[Sequence[int]]) -> list[tuple[int, int, int, int]]:
    """Every 4-cycle of a simple graph once, as (a, b, c, d) with a least."""
    out = set()
    for a, na in enumerate(nbrs):
        for b in na:
            for d in na:
                if b < d:
                    for c in set(nbrs[b]) & set(nbrs[d]):
                        if c != a:
                            r = min(range(4), key=(a, b, c, d).__getitem__)
                            q = (a, b, c, d)[r:] + (a, b, c, d)[:r]
                            out.add(q if q[1] < q[3] else (q[0], q[3], q[2], q[1]))
    return sorted(out)


class _Switcher:
    """2-factors in several colours, changed by swapping alternating squares.

    A square a-b-c-d whose edges ab, cd have colour X and bc, da colour Y
    can trade colours. In each colour the two edges either sit on different
    cycles (they merge), or on one cycle that stays whole exactly when it
    runs a->b and d->c, or on one cycle that splits.
    """

    def __init__(self, n_vertices: int, factors: Sequence[Sequence[Edge]]):
        self.k = len(factors)
        self.colour: dict[Edge, int] = {}
        self.adj = [[[] for _ in range(n_vertices)] for _ in factors]
        for k, es in enumerate(factors):
            for u, v in es:
                self.colour[edge(u, v)] = k
                self.adj[k][u].append(v)
                self.adj[k][v].append(u)
        self.cid = [[0] * n_vertices for _ in factors]
        self.pos = [[0] * n_vertices for _ in factors]
        self.cycles: list[dict[int, list[int]]] = [{} for _ in factors]
        self._next_id = 0
        for k in range(self.k):
            for v in range(n_vertices):
                if self.cid[k][v] == 0:
                    self._walk(k, v)

    def _walk(self, k: int, start: int) -> set[int]:
        adj = self.adj[k]
        seq = [start]
        prev, cur = start, adj[start][0]
        while cur != start:
            seq.append(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        self._next_id += 1
        self.cycles[k][self._next_id] = seq
        for t, v in enumerate(seq):
            self.cid[k][v] = self._next_id
            self.pos[k][v] = t
        return set(seq)

    @property
    def total(self) -> int:
        return sum(len(c) for c in self.cycles)

    def _succ(self, k: int, v: int) -> int:
        seq = self.cycles[k][self.cid[k][v]]
        return seq[(self.pos[k][v] + 1) % len(seq)]

    def _effect(self, k, a, b, c, d) -> int:
        if self.cid[k][a] != self.cid[k][c]:
            return -1
        return 0 if (self._succ(k, a) == b) == (self._succ(k, d) == c) else 1

    def gain(self, sq) -> int | None:
        """Change in the total cycle count, or None if sq is not alternating."""
        a, b, c, d = sq
        col = self.colour
        x, y = col[edge(a, b)], col[edge(b, c)]
        if x == y or col[edge(c, d)] != x or col[edge(d, a)] != y:
            return None
        return self._effect(x, a, b, c, d) + self._effect(y, b, c, d, a)

    def apply(self, sq) -> None:
        a, b, c, d = sq
        x, y = self.colour[edge(a, b)], self.colour[edge(b, c)]
        for (p, q), old, new in (((a, b), x, y), ((c, d), x, y), ((b, c), y, x), ((d, a), y, x)):
            self.adj[old][p].remove(q)
            self.adj[old][q].remove(p)
            self.adj[new][p].append(q)
            self.adj[new][q].append(p)
            self.colour[edge(p, q)] = new
        for k in (x, y):
            ids = {self.cid[k][v] for v in sq}
            todo = [v for i in ids for v in self.cycles[k].pop(i)]
            done: set[int] = set()
            for v in todo:
                if v not in done:
                    done |= self._walk(k, v)


def _as_abstract(pair: HamPair, c: int) -> list[list[tuple[int, int]]]:
    """Three Hamiltonian cycles of (H1 u H2) x C_c on vertices (v, level).

    Start from H1 x C_c split into two Hamiltonian cycles plus the c level
    copies of H2, then switch alternating squares: any switch lowering the
    total number of cycles first, otherwise a random one that keeps it,
    until every colour is a single cycle. The random choices are seeded, so
    the output is reproducible.
    """
    h1, h2 = pair.first, pair.second
    big = pair.order
    if c < 3:
        raise InvalidArgument("cycle factor must have length >= 3")
    slot = {v: x for x, v in enumerate(h1)}
    vid = lambda x, j: x * c + j  # noqa: E731
    factors: list[list[Edge]] = []
    for cyc in kotzig_torus(big, c):
        factors.append([(vid(*p), vid(*q)) for p, q in cycle_edges(cyc)])
    factors.append([(vid(slot[u], j), vid(slot[w], j)) for u, w in cycle_edges(h2) for j in range(c)])

    nbrs: list[list[int]] = [[] for _ in range(big * c)]
    for es in factors:
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
    squares = _four_cycles(nbrs)
    state = _Switcher(big * c, factors)
    rng = random.Random(AS_SWITCH_SEED)
    last = None
    for _ in range(AS_SWITCH_MAX_STEPS):
        if state.total == 3:
            break
        order = list(range(len(squares)))
        rng.shuffle(order)
        pick = level = None
        for i in order:
            g = state.gain(squares[i])
            if g is None:
                continue
            if g < 0:
                pick = i
                break
            if g == 0 and level is None and i != last:
                level = i
        pick = level if pick is None else pick
        if pick is None:
            break
        state.apply(squares[pick])
        last = pick
    if state.total != 3:
        raise UnsupportedInstance(f"square switching did not finish for N={big}, c={c}")
    return [
        [(h1[x // c], x % c) for x in next(iter(state.cycles[k].values()))]
        for k in range(3)
    ]


def as_product(
    pair: HamPair, cycle: Sequence[int], e: ProductEmbedding, pair_side: str = "left"
) -> list[tuple[int, ...]]:
    """Three Hamiltonian cycles of (H1 u H2) x C for the cycle ``cycle``.

    ``pair_side`` says which factor of ``e`` holds the pair's labels. The
    result is checked before it is returned.
    """
    if pair_side not in ("left", "right"):
        raise InvalidArgument("pair_side must be 'left' or 'right'")
    c = len(cycle)
    if c < 3:
        raise InvalidArgument("cycle factor must have length >= 3")
    if pair_side == "left":
        place = lambda v, j: e(v, cycle[j])  # noqa: E731
    else:
        place = lambda v, j: e(cycle[j], v)  # noqa: E731
    out = [tuple(place(v, j) for v, j in cyc) for cyc in _as_abstract(pair, c)]

    pair_edges = set(cycle_edges(pair.first)) | set(cycle_edges(pair.second))
    expected = {edge(place(u, j), place(w, j)) for u, w in pair_edges for j in range(c)}
    expected |= {edge(place(v, j), place(v, (j + 1) % c)) for v in pair.first for j in range(c)}
    seen: set[Edge] = set()
    for cyc in out:
        if len(set(cyc)) != c * pair.order or len(cyc) != c * pair.order:
            raise UnsupportedInstance("as_product produced a non-Hamiltonian cycle")
        for ed in cycle_edges(cyc):
            if ed not in expected or ed in seen:
                raise UnsupportedInstance("as_product produced a stray or repeated edge")
            seen.add(ed)
    if seen != expected:
        raise UnsupportedInstance("as_product output does not cover the product")
    return out


# --- Lemma-level products -----------------------------------------------------


def hh_product(
    g_dec: PartitionedDecomposition, h_ham: Sequence[Sequence[int]], e: ProductEmbedding
) -> PartitionedDecomposition:
    """G x H into cycles of length l |V(H)|.

    ``g_dec`` has m partition sets of l-cycles; ``h_ham`` lists m + n'
    Hamiltonian cycles of H (0 <= n' <= m). H^i is paired with H^{m+i} for
    i < n'. Each cycle C of set i gives the torus C x H^i (two cycles, two
    sets) or (C x (H^i u H^{m+i})) (three cycles, three sets).
    """
    if g_dec.host_n != e.left_bits:
        raise InvalidArgument("G decomposition does not live on the left factor")
    sets = list(g_dec.partition_sets().values())
    m = len(sets)
    extra = len(h_ham) - m
    if not 0 <= extra <= m:
        raise InvalidArgument(f"H needs between {m} and {2 * m} Hamiltonian cycles, got {len(h_ham)}")
    size_h = 1 << e.right_bits
    for h in h_ham:
        if len(h) != size_h or len(set(h)) != size_h:
            raise InvalidArgument("H cycles must be Hamiltonian in Q_b")
    ell = g_dec.cycle_length
    parts_h = [
        [h_ham[i], h_ham[m + i]] if i < extra else [h_ham[i]]
        for i in range(m)
    ]
    parts_g_edges = [{ed for idx in members for ed in cycle_edges(g_dec.cycles[idx])} for members in sets]
    parts_h_edges = [{ed for h in hs for ed in cycle_edges(h)} for hs in parts_h]
    outer = aot_product(parts_g_edges, parts_h_edges, e)

    inner = []
    for members, hs in zip(sets, parts_h):
        cycles: list[tuple[int, ...]] = []
        local: list[int] = []
        for idx in members:
            c = g_dec.cycles[idx]
            if len(hs) == 1:
                h = hs[0]
                for colour, cyc in enumerate(kotzig_torus(ell, size_h)):
                    cycles.append(tuple(e(c[x], h[y]) for x, y in cyc))
                    local.append(colour)
            else:
                for colour, cyc in enumerate(as_product(HamPair(*hs), c, e, pair_side="right")):
                    cycles.append(cyc)
                    local.append(colour)
        inner.append(PartitionedDecomposition(e.n, ell * size_h, tuple(cycles), tuple(local)))
    return compose_partitionable(outer, inner)


def cart_times_c4(g_dec: PartitionedDecomposition, e: ProductEmbedding | None = None) -> PartitionedDecomposition:
    """G x C_4 into cycles of the same length 4l, one more partition set.

    Every set but the last is copied onto the four levels; the last set
    takes all vertical edges, and each of its cycles C becomes the torus
    C x C_4, split into 4l-cycles with two partition sets.
    """
    if e is None:
        e = ProductEmbedding(g_dec.host_n, 2)
    if e.left_bits != g_dec.host_n or e.right_bits != 2:
        raise InvalidArgument("embedding must append two bits for C_4")
    length = g_dec.cycle_length
    if length < 4 or length % 4:
        raise InvalidArgument(f"cycle length {length} is not a positive multiple of 4")
    ell = length // 4
    sets = list(g_dec.partition_sets().values())
    levels = [gray2(j) for j in range(4)]
    c4_edges = set(cycle_edges(c4_cycle()))
    outer, inner = [], []
    for members in sets[:-1]:
        f_edges = {ed for idx in members for ed in cycle_edges(g_dec.cycles[idx])}
        outer.append(product_edges(e, f_edges, ()))
        copies = tuple(tuple(e(v, lv) for v in g_dec.cycles[idx]) for lv in levels for idx in members)
        inner.append(PartitionedDecomposition(e.n, length, copies, (0,) * len(copies)))

    last = sets[-1]
    f_edges = {ed for idx in last for ed in cycle_edges(g_dec.cycles[idx])}
    outer.append(product_edges(e, f_edges, c4_edges))
    torus = lemma_8ell(ell, ell)
    cycles, local = [], []
    for idx in last:
        c = g_dec.cycles[idx]
        for cyc, colour in zip(torus.cycles, torus.set_of):
            cycles.append(tuple(e(c[x], levels[y]) for x, y in cyc))
            local.append(colour)
    inner.append(PartitionedDecomposition(e.n, length, tuple(cycles), tuple(local)))
    return compose_partitionable(outer, inner)
