import pytest

from hqd.certificates import PartitionedDecomposition, q4_certificate
from hqd.combinators import (
    HamPair,
    _four_cycles,
    aot_product,
    as_product,
    cart_times_c4,
    compose_partitionable,
    hh_product,
    one_set_product,
)
from hqd.core import ProductEmbedding, c4_cycle, cycle_edges, gray2, hypercube_edges, product_edges
from hqd.drivers import ham_decompose
from hqd.errors import InvalidArgument
from hqd.torus import kotzig_torus
from hqd.verify import check_counts, check_cycle, verify_partitionable

C4 = c4_cycle()
C4_EDGES = set(cycle_edges(C4))


def q4_pair():
    e = ProductEmbedding(2, 2)
    return HamPair(*[tuple(e(gray2(x), gray2(y)) for x, y in c) for c in kotzig_torus(4, 4)])


def gray(bits):
    return tuple(x ^ (x >> 1) for x in range(1 << bits))


def check_ham_triple(out, edges_expected, order):
    seen = set()
    for c in out:
        assert len(c) == order == len(set(c))
        es = set(cycle_edges(c))
        assert not es & seen
        seen |= es
    assert seen == edges_expected


def test_aot_single_part_is_q4():
    e = ProductEmbedding(2, 2)
    assert aot_product([C4_EDGES], [C4_EDGES], e) == [hypercube_edges(4)]


def test_aot_two_parts_of_q8():
    pair = q4_pair()
    parts = [set(cycle_edges(pair.first)), set(cycle_edges(pair.second))]
    out = aot_product(parts, parts, ProductEmbedding(4, 4))
    assert [len(p) for p in out] == [512, 512]
    assert out[0] | out[1] == hypercube_edges(8) and not out[0] & out[1]


def test_aot_rejects_bad_input():
    e = ProductEmbedding(2, 2)
    with pytest.raises(InvalidArgument):
        aot_product([C4_EDGES], [C4_EDGES, C4_EDGES], e)
    with pytest.raises(InvalidArgument):
        aot_product([{(0, 1)}], [C4_EDGES], e)


def test_one_set_product_red_family():
    d = q4_certificate()
    e = ProductEmbedding(4, 2)
    parts = one_set_product(d.cycles[:2], C4_EDGES, e)
    assert [len(p) for p in parts] == [64, 64]
    horiz = {ed for c in d.cycles[:2] for ed in cycle_edges(c)}
    assert parts[0] | parts[1] == product_edges(e, horiz, C4_EDGES)


def test_one_set_product_single_cycle_is_everything():
    pair = q4_pair()
    e = ProductEmbedding(4, 2)
    (part,) = one_set_product([pair.first], C4_EDGES, e)
    assert part == product_edges(e, set(cycle_edges(pair.first)), C4_EDGES)


def test_one_set_product_needs_partition():
    with pytest.raises(InvalidArgument):
        one_set_product([q4_certificate().cycles[0]], C4_EDGES, ProductEmbedding(4, 2))


def test_compose_identity():
    d = q4_certificate()
    out = compose_partitionable([hypercube_edges(4)], [d])
    assert out == d


def test_compose_rejects_wrong_inner():
    d = q4_certificate()
    with pytest.raises(InvalidArgument):
        compose_partitionable([hypercube_edges(4) - {(0, 1)}], [d])


def test_hampair_validation():
    with pytest.raises(InvalidArgument):
        HamPair((0, 1, 3, 2), (0, 1, 3, 2))


def test_as_product_q6():
    pair = q4_pair()
    e = ProductEmbedding(4, 2)
    out = as_product(pair, C4, e)
    assert len(out) == 3
    check_ham_triple(out, hypercube_edges(6), 64)
    for c in out:
        assert check_cycle(c, 6).ok


def test_as_product_right_side_matches_driver_use():
    pair = q4_pair()
    e = ProductEmbedding(2, 4)
    out = as_product(pair, C4, e, pair_side="right")
    check_ham_triple(out, hypercube_edges(6), 64)


def test_as_product_torus_pair_c4():
    g3 = gray(3)
    e3 = ProductEmbedding(3, 3)
    pair = HamPair(*[tuple(e3(g3[x], g3[y]) for x, y in c) for c in kotzig_torus(8, 8)])
    e = ProductEmbedding(6, 2)
    out = as_product(pair, C4, e)
    pair_edges = set(cycle_edges(pair.first)) | set(cycle_edges(pair.second))
    check_ham_triple(out, product_edges(e, pair_edges, C4_EDGES), 256)
    assert sum(len(c) for c in out) == 3 * 4 * 64


def test_as_product_is_deterministic():
    pair = q4_pair()
    e = ProductEmbedding(4, 2)
    assert as_product(pair, C4, e) == as_product(pair, C4, e)


def test_as_product_rejects_short_cycle():
    with pytest.raises(InvalidArgument):
        as_product(q4_pair(), (0, 1), ProductEmbedding(4, 1))


def test_four_cycles_of_q3():
    nbrs = [[u ^ (1 << j) for j in range(3)] for u in range(8)]
    assert len(_four_cycles(nbrs)) == 6


def test_hh_product_q8_half():
    d = q4_certificate()
    h = ham_decompose(4)
    out = hh_product(d, h.cycles, ProductEmbedding(4, 4))
    assert out.cycle_length == 128 and out.num_sets == 4
    assert verify_partitionable(out).ok
    assert check_counts(out, 7).ok


def test_hh_product_q8_hamiltonian():
    h = ham_decompose(4)
    out = hh_product(h, h.cycles, ProductEmbedding(4, 4))
    assert len(out.cycles) == 4 and out.cycle_length == 256
    assert verify_partitionable(out).ok


def test_hh_product_arity():
    h = ham_decompose(4)
    with pytest.raises(InvalidArgument):
        hh_product(h, h.cycles[:1], ProductEmbedding(4, 4))


def test_cart_from_c4():
    g = PartitionedDecomposition(2, 4, (C4,), (0,))
    out = cart_times_c4(g)
    assert len(out.cycles) == 8 and out.num_sets == 2
    assert verify_partitionable(out).ok


def test_cart_from_q4_certificate():
    out = cart_times_c4(q4_certificate())
    assert len(out.cycles) == 24 and out.num_sets == 3 and out.cycle_length == 8
    assert verify_partitionable(out).ok
    # the first set is copied onto the four C_4 levels
    first = q4_certificate().cycles[0]
    assert out.cycles[0] == tuple(v | gray2(0) << 4 for v in first)
    assert out.cycles[2] == tuple(v | gray2(1) << 4 for v in first)


def test_cart_rejects_bad_length():
    bad = PartitionedDecomposition(3, 6, ((0, 1, 3, 7, 6, 4),), (0,))
    with pytest.raises(InvalidArgument):
        cart_times_c4(bad)
