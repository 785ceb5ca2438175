"""Two-colourings of the torus C_a x C_b and the cycle combination move.

Vertices are coordinate pairs ``(x, y)`` with ``x`` mod ``a`` and ``y`` mod
``b``. A colouring assigns every torus edge RED or BLUE so that each colour
class is a 2-factor; the cycles of each class are tracked with a union-find
over vertices, which is exact because a cycle combination only ever replaces
two cycles by one on the union of their vertex sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable

from .errors import InvalidArgument, InvalidRecolor, UnsupportedInstance

Coord = tuple[int, int]
TEdge = tuple[Coord, Coord]

# Hard cap for the exhaustive fallback in kotzig_torus.
SEARCH_MAX_VERTICES = 48
SEARCH_MAX_STEPS = 2_000_000


class Color(IntEnum):
    RED = 0
    BLUE = 1


def tedge(p: Coord, q: Coord) -> TEdge:
    return (p, q) if p < q else (q, p)


def torus_edges(a: int, b: int) -> set[TEdge]:
    if a < 3 or b < 3:
        raise InvalidArgument("torus factors must have length >= 3")
    out = set()
    for x in range(a):
        for y in range(b):
            out.add(tedge((x, y), ((x + 1) % a, y)))
            out.add(tedge((x, y), (x, (y + 1) % b)))
    return out


@dataclass(frozen=True)
class RecolorSquare:
    """The 4-cycle (x,y), (x,y+1), (x+1,y+1), (x+1,y) of C_a x C_b."""

    x: int
    y: int
    a: int
    b: int
    k: int | None = None

    @classmethod
    def s(cls, k: int, ell: int) -> RecolorSquare:
        """S_k on C_{4l} x C_4: S_1 has corner (0, 1), each next one is
        shifted by (+1, +1)."""
        if not 1 <= k <= 4 * ell:
            raise InvalidArgument(f"S_{k} undefined for l={ell}")
        return cls((k - 1) % (4 * ell), k % 4, 4 * ell, 4, k)

    @property
    def vertices(self) -> tuple[Coord, Coord, Coord, Coord]:
        x1, y1 = (self.x + 1) % self.a, (self.y + 1) % self.b
        return ((self.x, self.y), (self.x, y1), (x1, y1), (x1, self.y))

    def edge_pairs(self) -> tuple[tuple[TEdge, TEdge], tuple[TEdge, TEdge]]:
        """(horizontal pair, vertical pair) of opposite edges."""
        p, q, r, s = self.vertices
        return (tedge(p, s), tedge(q, r)), (tedge(p, q), tedge(s, r))


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        parent = self.parent
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(self, i: int, j: int) -> bool:
        i, j = self.find(i), self.find(j)
        if i == j:
            return False
        self.parent[i] = j
        return True

    def copy(self) -> _UnionFind:
        uf = _UnionFind(0)
        uf.parent = self.parent[:]
        return uf


@dataclass
class TorusColoring:
    a: int
    b: int
    color: dict[TEdge, Color]
    _comp: dict[Color, _UnionFind] = field(repr=False, default_factory=dict)
    counts: dict[Color, int] = field(default_factory=dict)

    @classmethod
    def from_colors(cls, a: int, b: int, color: dict[TEdge, Color]) -> TorusColoring:
        if set(color) != torus_edges(a, b):
            raise InvalidArgument("colouring must cover exactly the torus edges")
        state = cls(a, b, dict(color))
        for c in Color:
            uf = _UnionFind(a * b)
            parts = a * b
            for (p, q), cc in color.items():
                if cc == c and uf.union(state._index(p), state._index(q)):
                    parts -= 1
            state._comp[c] = uf
            state.counts[c] = parts
        return state

    def _index(self, p: Coord) -> int:
        return p[0] * self.b + p[1]

    def copy(self) -> TorusColoring:
        return TorusColoring(
            self.a, self.b, dict(self.color), {c: uf.copy() for c, uf in self._comp.items()}, dict(self.counts)
        )

    def same_cycle(self, c: Color, p: Coord, q: Coord) -> bool:
        uf = self._comp[c]
        return uf.find(self._index(p)) == uf.find(self._index(q))

    @property
    def red_count(self) -> int:
        return self.counts[Color.RED]

    @property
    def blue_count(self) -> int:
        return self.counts[Color.BLUE]

    def cycles(self, c: Color) -> list[tuple[Coord, ...]]:
        """Cycles of one colour class, walked from the least unvisited vertex
        towards its smaller neighbour first."""
        adj: dict[Coord, list[Coord]] = {}
        for (p, q), cc in self.color.items():
            if cc == c:
                adj.setdefault(p, []).append(q)
                adj.setdefault(q, []).append(p)
        return walk_cycles(adj)

    @property
    def red_cycles(self) -> list[tuple[Coord, ...]]:
        return self.cycles(Color.RED)

    @property
    def blue_cycles(self) -> list[tuple[Coord, ...]]:
        return self.cycles(Color.BLUE)


def walk_cycles(adj: dict) -> list[tuple]:
    """Split a 2-regular graph given as an adjacency map into cycles."""
    seen = set()
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        nbrs = adj[start]
        if len(nbrs) != 2:
            raise InvalidArgument(f"vertex {start} has degree {len(nbrs)}, expected 2")
        cyc = [start]
        seen.add(start)
        prev, cur = start, min(nbrs)
        while cur != start:
            if cur in seen or len(adj[cur]) != 2:
                raise InvalidArgument(f"colour class is not a union of cycles near {cur}")
            cyc.append(cur)
            seen.add(cur)
            x, y = adj[cur]
            prev, cur = cur, (y if x == prev else x)
        out.append(tuple(cyc))
    return out


def checkerboard_coloring(a: int, b: int) -> TorusColoring:
    """4-cycles with corners at (even, even) red and at (odd, odd) blue."""
    if a < 4 or b < 4 or a % 2 or b % 2:
        raise InvalidArgument("checkerboard seed needs even a, b >= 4")
    color = {}
    for x in range(0, a, 2):
        for y in range(0, b, 2):
            for dx, dy, c in ((0, 0, Color.RED), (1, 1, Color.BLUE)):
                sq = RecolorSquare(x + dx, (y + dy) % b, a, b)
                for pair in sq.edge_pairs():
                    for e in pair:
                        color[e] = c
    return TorusColoring.from_colors(a, b, color)


def seed_square_corners(ell: int) -> tuple[list[Coord], list[Coord]]:
    """Lower-left corners of R^0..R^{4l-1} and B^0..B^{4l-1}.

    R^0 = (0,0), R^1 = (0,2), B^0 = (4l-1,1), B^1 = (1,1); R^k and B^k are
    R^{k-2} and B^{k-2} shifted by (+2, +2).
    """
    if ell < 1:
        raise InvalidArgument("l must be >= 1")
    a = 4 * ell
    red = [(0, 0), (0, 2)]
    blue = [(a - 1, 1), (1, 1)]
    for k in range(2, a):
        for seq in (red, blue):
            x, y = seq[k - 2]
            seq.append(((x + 2) % a, (y + 2) % 4))
    return red, blue


def seed_four_cycles(ell: int) -> TorusColoring:
    red, blue = seed_square_corners(ell)
    a = 4 * ell
    color: dict[TEdge, Color] = {}
    for corners, c in ((red, Color.RED), (blue, Color.BLUE)):
        for x, y in corners:
            for pair in RecolorSquare(x, y, a, 4).edge_pairs():
                for e in pair:
                    if e in color:
                        raise AssertionError(f"seed squares overlap at {e}")
                    color[e] = c
    return TorusColoring.from_colors(a, 4, color)


def cycle_combine(state: TorusColoring, s: RecolorSquare, inplace: bool = False) -> TorusColoring:
    """Swap the colours on the four edges of ``s``.

    One pair of opposite edges must be red and lie on two different red
    cycles; the other pair must be blue on two different blue cycles. Both
    pairs of cycles are merged.
    """
    if (s.a, s.b) != (state.a, state.b):
        raise InvalidRecolor("square belongs to a different torus")
    pairs = s.edge_pairs()
    colors = [tuple(state.color[e] for e in pair) for pair in pairs]
    if colors[0][0] != colors[0][1] or colors[1][0] != colors[1][1] or colors[0][0] == colors[1][0]:
        raise InvalidRecolor(f"square at {s.vertices[0]} is not alternately coloured")
    for pair, (c, _) in zip(pairs, colors):
        if state.same_cycle(c, pair[0][0], pair[1][0]):
            raise InvalidRecolor(f"{c.name} edges of square at {s.vertices[0]} lie on one cycle")
    out = state if inplace else state.copy()
    for pair, (c, _) in zip(pairs, colors):
        other = Color(1 - c)
        for e in pair:
            out.color[e] = other
        out._comp[c].union(out._index(pair[0][0]), out._index(pair[1][0]))
        out.counts[c] -= 1
    return out


@dataclass(frozen=True)
class TorusDecomposition:
    """Cycles of C_a x C_b in coordinates; set 0 is red, set 1 blue."""

    a: int
    b: int
    cycles: tuple[tuple[Coord, ...], ...]
    set_of: tuple[int, ...]
    recolored: tuple[int, ...] = ()


def lemma_8ell(ell: int, n: int) -> TorusDecomposition:
    """Split C_{4l} x C_4 into cycles of length 4n, two partition sets.

    Starts from the 4-cycle seed and recolours every S_i with n not dividing
    i, in increasing i, so each run of n-1 consecutive squares chains n seed
    cycles of each colour together.
    """
    if ell < 1 or n < 1 or (4 * ell) % n:
        raise InvalidArgument(f"n={n} must divide 4l={4 * ell}")
    state = seed_four_cycles(ell)
    recolored = tuple(k for k in range(1, 4 * ell + 1) if k % n)
    for k in recolored:
        cycle_combine(state, RecolorSquare.s(k, ell), inplace=True)
    red, blue = state.red_cycles, state.blue_cycles
    return TorusDecomposition(
        4 * ell, 4, tuple(red) + tuple(blue), (0,) * len(red) + (1,) * len(blue), recolored
    )


def _comb_squares(a: int, b: int) -> list[RecolorSquare]:
    """Recolouring squares that turn the checkerboard seed of C_a x C_b into
    two Hamiltonian cycles; needs (b/2) | (a/2).

    With A = a/2, B = b/2, red squares form an A x B torus grid and blue
    squares the dual grid. Each chosen square joins two neighbouring red
    squares and, across it, two blue ones. The choice is a comb: column p
    joins all its red squares except the step from row p mod B, and one
    horizontal join per column gap hooks neighbouring columns at the row
    that keeps the dual edges acyclic too.
    """
    big, small = a // 2, b // 2
    k = big // small
    out = []
    for p in range(big):
        for q in range(small):
            if q != p % small:
                out.append(RecolorSquare(2 * p, 2 * q + 1, a, b))
    for j in range(k):
        for s in range(1, small):
            out.append(RecolorSquare(2 * (j * small + s) + 1, 2 * s, a, b))
    for j in range(1, k):
        out.append(RecolorSquare(2 * (j * small) + 1, 2, a, b))
    return out


def _diagonal_pair(a: int) -> TorusColoring:
    """C_a x C_a: rows red, columns blue, then recolour the squares at (k, k)
    for k < a-1, chaining rows and columns in one pass."""
    color = {}
    for x in range(a):
        for y in range(a):
            color[tedge((x, y), ((x + 1) % a, y))] = Color.RED
            color[tedge((x, y), (x, (y + 1) % a))] = Color.BLUE
    state = TorusColoring.from_colors(a, a, color)
    for k in range(a - 1):
        cycle_combine(state, RecolorSquare(k, k, a, a), inplace=True)
    return state


def _transpose(cycle: Iterable[Coord]) -> tuple[Coord, ...]:
    return tuple((y, x) for x, y in cycle)


def _search_pair(a: int, b: int) -> tuple[tuple[Coord, ...], tuple[Coord, ...]]:
    """Depth-first search for a Hamiltonian cycle whose complement is one."""
    if a * b > SEARCH_MAX_VERTICES:
        raise UnsupportedInstance(f"no explicit construction for C_{a} x C_{b} and it exceeds the search cap")
    edges = torus_edges(a, b)
    adj: dict[Coord, list[Coord]] = {}
    for p, q in sorted(edges):
        adj.setdefault(p, []).append(q)
        adj.setdefault(q, []).append(p)
    total = a * b
    start = (0, 0)
    path = [start]
    on_path = {start}
    steps = 0

    def complement_cycle() -> tuple[Coord, ...] | None:
        used = {tedge(path[t], path[(t + 1) % total]) for t in range(total)}
        rest: dict[Coord, list[Coord]] = {}
        for p, q in edges - used:
            rest.setdefault(p, []).append(q)
            rest.setdefault(q, []).append(p)
        try:
            cycles = walk_cycles(rest)
        except InvalidArgument:
            return None
        return cycles[0] if len(cycles) == 1 else None

    def dfs() -> tuple[Coord, ...] | None:
        nonlocal steps
        steps += 1
        if steps > SEARCH_MAX_STEPS:
            raise UnsupportedInstance(f"search budget exhausted for C_{a} x C_{b}")
        cur = path[-1]
        if len(path) == total:
            return complement_cycle() if start in adj[cur] else None
        for nxt in adj[cur]:
            if nxt not in on_path:
                path.append(nxt)
                on_path.add(nxt)
                found = dfs()
                if found is not None:
                    return found
                on_path.discard(path.pop())
        return None

    other = dfs()
    if other is None:
        raise UnsupportedInstance(f"exhaustive search found no Hamiltonian pair for C_{a} x C_{b}")
    return tuple(path), other


def kotzig_torus(a: int, b: int) -> tuple[tuple[Coord, ...], tuple[Coord, ...]]:
    """Two edge-disjoint Hamiltonian cycles covering C_a x C_b.

    Even a, b with one half-length dividing the other use the checkerboard
    seed and comb recolouring; a == b uses the row/column diagonal; small
    leftovers fall back to exhaustive search. The pair is checked before it
    is returned.
    """
    if a < 3 or b < 3:
        raise InvalidArgument("torus factors must have length >= 3")
    if a % 2 == 0 and b % 2 == 0 and a >= 4 and b >= 4 and ((a // 2) % (b // 2) == 0 or (b // 2) % (a // 2) == 0):
        if (a // 2) % (b // 2) == 0:
            state = checkerboard_coloring(a, b)
            for sq in _comb_squares(a, b):
                cycle_combine(state, sq, inplace=True)
            pair = (state.red_cycles, state.blue_cycles)
        else:
            state = checkerboard_coloring(b, a)
            for sq in _comb_squares(b, a):
                cycle_combine(state, sq, inplace=True)
            pair = ([_transpose(c) for c in state.red_cycles], [_transpose(c) for c in state.blue_cycles])
        if len(pair[0]) != 1 or len(pair[1]) != 1:
            raise UnsupportedInstance(f"comb recolouring left {len(pair[0])}+{len(pair[1])} cycles")
        result = (pair[0][0], pair[1][0])
    elif a == b:
        state = _diagonal_pair(a)
        result = (state.red_cycles[0], state.blue_cycles[0])
    else:
        result = _search_pair(a, b)
    _check_pair(a, b, result)
    return result


def _check_pair(a: int, b: int, pair) -> None:
    edges = torus_edges(a, b)
    seen: set[TEdge] = set()
    for cyc in pair:
        k = len(cyc)
        if k != a * b or len(set(cyc)) != k:
            raise UnsupportedInstance("construction produced a non-Hamiltonian cycle")
        for t in range(k):
            e = tedge(cyc[t], cyc[(t + 1) % k])
            if e not in edges or e in seen:
                raise UnsupportedInstance("construction produced an invalid edge")
            seen.add(e)
    if seen != edges:
        raise UnsupportedInstance("construction does not cover the torus")
