import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hqd.errors import InvalidArgument, InvalidRecolor, UnsupportedInstance
from hqd.torus import (
    Color,
    RecolorSquare,
    cycle_combine,
    kotzig_torus,
    lemma_8ell,
    seed_four_cycles,
    torus_edges,
)
from hqd.verify import check_torus_decomposition


def assert_two_factor_classes(state):
    """Each colour class is 2-regular on all vertices and the cycle walk
    agrees with the union-find count."""
    assert set(state.color) == torus_edges(state.a, state.b)
    for c in Color:
        cycles = state.cycles(c)
        assert len(cycles) == state.counts[c]
        verts = [p for cyc in cycles for p in cyc]
        assert len(verts) == len(set(verts)) == state.a * state.b


def test_square_s1():
    s = RecolorSquare.s(1, 2)
    assert s.vertices == ((0, 1), (0, 2), (1, 2), (1, 1))
    s2 = RecolorSquare.s(2, 2)
    assert s2.vertices[0] == (1, 2)
    assert RecolorSquare.s(4, 2).vertices[0] == (3, 0)
    with pytest.raises(InvalidArgument):
        RecolorSquare.s(9, 2)


@pytest.mark.parametrize("ell", [1, 2, 3, 6])
def test_seed(ell):
    st_ = seed_four_cycles(ell)
    assert len(st_.color) == 64 * ell // 2
    assert st_.red_count == st_.blue_count == 4 * ell
    assert all(len(c) == 4 for c in st_.red_cycles + st_.blue_cycles)
    assert_two_factor_classes(st_)


def test_seed_first_squares():
    st_ = seed_four_cycles(2)
    red = {frozenset(c) for c in st_.red_cycles}
    blue = {frozenset(c) for c in st_.blue_cycles}
    assert frozenset({(0, 0), (0, 1), (1, 1), (1, 0)}) in red
    assert frozenset({(7, 1), (7, 2), (0, 2), (0, 1)}) in blue


def test_combine_merges_and_rejects_repeat():
    st_ = seed_four_cycles(2)
    after = cycle_combine(st_, RecolorSquare.s(1, 2))
    assert after.red_count == st_.red_count - 1
    assert after.blue_count == st_.blue_count - 1
    assert sorted(len(c) for c in after.red_cycles)[-1] == 8
    assert sorted(after.color.items()) != sorted(st_.color.items())
    assert set(after.color) == set(st_.color)
    assert_two_factor_classes(after)
    with pytest.raises(InvalidRecolor):
        cycle_combine(after, RecolorSquare.s(1, 2))


def test_combine_needs_distinct_cycles():
    st_ = seed_four_cycles(2)
    # the interior of R^0 is one red cycle on both sides
    with pytest.raises(InvalidRecolor):
        cycle_combine(st_, RecolorSquare(0, 0, 8, 4))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_combination_sequences_keep_invariants(ell, data):
    state = seed_four_cycles(ell)
    ks = data.draw(st.lists(st.integers(1, 4 * ell), unique=True, max_size=4 * ell))
    for k in ks:
        try:
            state = cycle_combine(state, RecolorSquare.s(k, ell))
        except InvalidRecolor:
            continue
        assert_two_factor_classes(state)


@pytest.mark.parametrize(
    "ell,n,skipped",
    [(2, 2, {2, 4, 6, 8}), (2, 8, {8}), (6, 6, {6, 12, 18, 24}), (6, 24, {24}), (2, 4, {4, 8})],
)
def test_lemma_8ell_recolor_sets(ell, n, skipped):
    d = lemma_8ell(ell, n)
    assert set(d.recolored) == set(range(1, 4 * ell + 1)) - skipped
    assert list(d.recolored) == sorted(d.recolored)
    assert all(len(c) == 4 * n for c in d.cycles)
    assert d.set_of.count(0) == d.set_of.count(1) == 4 * ell // n
    assert check_torus_decomposition(d.a, d.b, d.cycles, d.set_of).ok


def test_lemma_8ell_rejects_non_divisor():
    with pytest.raises(InvalidArgument):
        lemma_8ell(2, 3)


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_lemma_8ell_full_length_is_hamiltonian(ell):
    d = lemma_8ell(ell, 4 * ell)
    assert len(d.cycles) == 2 and all(len(c) == 16 * ell for c in d.cycles)


@pytest.mark.parametrize(
    "a,b", [(4, 4), (8, 4), (4, 8), (16, 16), (8, 64), (64, 8), (12, 12), (6, 6), (3, 3), (3, 5), (6, 4)]
)
def test_kotzig(a, b):
    pair = kotzig_torus(a, b)
    assert all(len(c) == a * b for c in pair)
    assert check_torus_decomposition(a, b, list(pair), [0, 1]).ok


def test_kotzig_8_4_passes_same_checker_as_lemma():
    d = lemma_8ell(2, 8)
    assert check_torus_decomposition(8, 4, d.cycles, d.set_of).ok
    assert check_torus_decomposition(8, 4, list(kotzig_torus(8, 4)), [0, 1]).ok


def test_kotzig_frozen_4x4():
    first, second = kotzig_torus(4, 4)
    assert first[:6] == ((0, 0), (0, 1), (1, 1), (1, 0), (1, 3), (1, 2))
    assert second[:6] == ((0, 0), (1, 0), (2, 0), (2, 3), (1, 3), (0, 3))


def test_kotzig_out_of_reach():
    with pytest.raises(UnsupportedInstance):
        kotzig_torus(10, 6)
    with pytest.raises(InvalidArgument):
        kotzig_torus(2, 5)
