import pytest

import rectpart as rp
from rectpart.dc import ReductionStats

from conftest import node_invariants


def test_sort_descending_examples():
    assert rp.sort_descending([1, 3, 2]) == ([3, 2, 1], [1, 2, 0])
    assert rp.sort_descending([2, 2, 2]) == ([2, 2, 2], [0, 1, 2])
    assert rp.sort_descending([5, 4, 3, 2, 1]) == ([5, 4, 3, 2, 1], [0, 1, 2, 3, 4])


def test_bipartition_length_two_passthrough():
    b1, b2 = rp.bipartition_two_smallest([0.5, 0.5])
    assert (b1.members, b1.total) == ((0,), 0.5)
    assert (b2.members, b2.total) == ((1,), 0.5)


def test_bipartition_five_areas():
    # merge trace: 2+1 -> [5,4,3,3]; 3+3 -> [6,5,4]; 5+4 -> [9,6]
    b1, b2 = rp.bipartition_two_smallest([5.0, 4.0, 3.0, 2.0, 1.0])
    assert b1.members == (0, 1) and b1.total == 9.0
    assert b2.members == (2, 3, 4) and b2.total == 6.0


def test_bipartition_dominant_head():
    # merge trace: 1+1 -> [4,2,1,1]; 1+1 -> [4,2,2]; 2+2 -> [4,4]
    b1, b2 = rp.bipartition_two_smallest([4.0, 1.0, 1.0, 1.0, 1.0])
    assert b1.members == (0,) and b1.total == 4.0
    assert b2.members == (1, 2, 3, 4) and b2.total == 4.0


def test_bipartition_rejects_short_lists():
    with pytest.raises(ValueError):
        rp.bipartition_two_smallest([1.0])


def test_partition_dc_halves():
    inst = rp.make_instance(rp.Rect(0, 0, 1, 1), [0.5, 0.5])
    layout = rp.partition_dc(inst)
    assert layout.rects == (rp.Rect(0, 0.5, 1, 0.5), rp.Rect(0, 0, 1, 0.5))
    assert layout.total_half_perimeter() == 3.0


def test_partition_dc_five_areas():
    inst = rp.make_instance(rp.Rect(0, 0, 5, 3), [5, 4, 3, 2, 1])
    layout = rp.partition_dc(inst)
    assert layout.total_half_perimeter() == pytest.approx(17.5, rel=1e-12)
    dims = [(r.w, r.h) for r in layout.rects]
    expected = [(3, 5 / 3), (3, 4 / 3), (2, 1.5), (4 / 3, 1.5), (2 / 3, 1.5)]
    for (w, h), (ew, eh) in zip(dims, expected):
        assert w == pytest.approx(ew, rel=1e-12)
        assert h == pytest.approx(eh, rel=1e-12)
    assert rp.validate_layout(inst, layout).ok


def test_partition_dc_single_area_returns_container():
    container = rp.Rect(0.5, 1.0, 2.0, 3.5)
    layout = rp.partition_dc(rp.make_instance(container, [7.0]))
    assert layout.rects == (container,)
    assert isinstance(layout.tree, rp.Leaf)


def test_partition_dc_deterministic():
    inst = rp.generate(rp.GenSpec(n=40, family="uniform", seed=7, container=rp.Rect(0, 0, 2, 1)))
    assert rp.partition_dc(inst) == rp.partition_dc(inst)


def test_partition_dc_equal_areas_ties():
    inst = rp.make_instance(rp.Rect(0, 0, 2, 2), [1.0, 1.0, 1.0, 1.0])
    layout = rp.partition_dc(inst)
    assert rp.validate_layout(inst, layout).ok
    # four unit squares
    for r in layout.rects:
        assert (r.w, r.h) == (1.0, 1.0)


@pytest.mark.parametrize("family,q", [("uniform", 0.5), ("geometric", 0.5), ("geometric", 0.9)])
@pytest.mark.parametrize("n", [2, 3, 7, 30, 80])
def test_partition_dc_randomized_invariants(family, q, n):
    spec = rp.GenSpec(n=n, family=family, seed=n * 31 + 1, container=rp.Rect(0, 0, 1, 1), q=q)
    inst = rp.generate(spec)
    stats = ReductionStats()
    layout = rp.partition_dc(inst, stats)
    assert rp.validate_layout(inst, layout).ok
    balance_ok, ar_ok = node_invariants(inst, layout)
    assert balance_ok and ar_ok
    # the pairwise rule always needs length-2 merges per reduction
    assert stats.iterations >= n - 2


def test_reduction_stats_counts_top_level():
    stats = ReductionStats()
    rp.bipartition_two_smallest([5.0, 4.0, 3.0, 2.0, 1.0], stats)
    assert stats.iterations == 3
