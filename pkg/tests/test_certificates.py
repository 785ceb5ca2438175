from hqd.certificates import (
    PartitionedDecomposition,
    canonical_rotation,
    q4_certificate,
    q6_certificate,
)
from hqd.core import from_bitstring
from hqd.verify import check_counts, verify_partitionable

# Reference listings, decoded with the leftmost character as bit 0.
Q4_EXPECTED = (
    (0, 2, 10, 11, 3, 1, 9, 8),
    (12, 14, 6, 7, 15, 13, 5, 4),
    (0, 4, 6, 2, 3, 7, 5, 1),
    (12, 8, 10, 14, 15, 11, 9, 13),
)


def test_q4_red_cycles_verbatim():
    d = q4_certificate()
    assert d.cycles == Q4_EXPECTED
    assert d.set_of == (0, 0, 1, 1)
    assert d.cycle_length == 8 and d.host_n == 4


def test_q4_verifies():
    d = q4_certificate()
    assert verify_partitionable(d).ok
    assert check_counts(d, 3).ok
    assert len(d.edges) == 32


def test_q6_shape():
    d = q6_certificate()
    assert d.cycles[0][:3] == (6, 22, 30)
    assert [from_bitstring(s) for s in ("011000", "011010", "011110")] == [6, 22, 30]
    assert len(d.cycles) == 6 and all(len(c) == 32 for c in d.cycles)
    assert d.num_sets == 3
    assert len(d.edges) == 192
    assert verify_partitionable(d).ok


def test_q6_partition_sets():
    # C1, C2 | B1, Y1 | B2, Y2 with cycles stored as C1 C2 B1 B2 Y1 Y2
    assert q6_certificate().partition_sets() == {0: [0, 1], 1: [2, 4], 2: [3, 5]}


def test_q6_every_vertex_three_times():
    d = q6_certificate()
    seen = [0] * 64
    for c in d.cycles:
        for v in c:
            seen[v] += 1
    assert set(seen) == {3}


def test_q6_other_sets_avoid_c_edges():
    d = q6_certificate()
    from hqd.core import cycle_edges

    c_edges = {e for c in d.cycles[:2] for e in cycle_edges(c)}
    b_edges = {e for c in (d.cycles[2], d.cycles[3]) for e in cycle_edges(c)}
    y_edges = {e for c in (d.cycles[4], d.cycles[5]) for e in cycle_edges(c)}
    assert not (c_edges & b_edges) and not (c_edges & y_edges) and not (b_edges & y_edges)


def test_canonical_rotation():
    assert canonical_rotation((3, 1, 5, 7)) == (1, 3, 7, 5)
    assert canonical_rotation((1, 5, 7, 3)) == (1, 3, 7, 5)
    assert canonical_rotation(()) == ()


def test_canonical_keeps_order_and_sets():
    d = q4_certificate()
    c = d.canonical()
    assert c.set_of == d.set_of
    assert [set(x) for x in c.cycles] == [set(x) for x in d.cycles]
    assert c.edges == d.edges


def test_set_count_mismatch_rejected():
    import pytest

    with pytest.raises(ValueError):
        PartitionedDecomposition(2, 4, ((0, 1, 3, 2),), (0, 1))
