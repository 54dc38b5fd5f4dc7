import itertools

import pytest

import rectpart as rp


def test_halves_optimum():
    inst = rp.make_instance(rp.Rect(0, 0, 1, 1), [0.5, 0.5])
    value, layout = rp.optimal_guillotine(inst)
    assert value == pytest.approx(3.0, rel=1e-12)
    assert rp.validate_layout(inst, layout).ok


def test_three_thirds_prefers_nested_cut():
    inst = rp.make_instance(rp.Rect(0, 0, 1, 1), [1 / 3, 1 / 3, 1 / 3])
    value, layout = rp.optimal_guillotine(inst)
    # one strip of width 1/3 plus the remaining 2/3 column halved: 11/3;
    # three full strips would cost 4
    assert value == pytest.approx(11 / 3, rel=1e-9)
    assert rp.validate_layout(inst, layout).ok


def test_single_area_is_container():
    container = rp.Rect(0, 0, 3, 2)
    value, layout = rp.optimal_guillotine(rp.make_instance(container, [6.0]))
    assert value == rp.half_perimeter(container)
    assert layout.rects == (container,)


def test_size_guard_refuses_large_instances():
    inst = rp.make_instance(rp.Rect(0, 0, 3, 3), [1.0] * 9)
    with pytest.raises(rp.OracleSizeError):
        rp.optimal_guillotine(inst)
    value, _ = rp.optimal_guillotine(inst, max_n=9)
    assert value == pytest.approx(18.0, rel=1e-9)  # 3x3 grid of unit squares


def test_value_matches_witness_total():
    inst = rp.generate(rp.GenSpec(n=6, family="uniform", seed=5, container=rp.Rect(0, 0, 2, 1)))
    value, layout = rp.optimal_guillotine(inst)
    assert value == pytest.approx(layout.total_half_perimeter(), rel=1e-9)


def test_permutation_invariance():
    areas = [5.0, 4.0, 3.0, 2.0, 1.0]
    values = set()
    for perm in itertools.permutations(areas):
        value, _ = rp.optimal_guillotine(rp.make_instance(rp.Rect(0, 0, 5, 3), list(perm)))
        values.add(value)
    assert len(values) == 1


@pytest.mark.parametrize("seed", range(8))
def test_oracle_sandwich_on_small_instances(seed):
    n = 2 + seed % 5
    family = "uniform" if seed % 2 == 0 else "geometric"
    spec = rp.GenSpec(n=n, family=family, seed=seed, container=rp.Rect(0, 0, 1, 1), q=0.6)
    inst = rp.generate(spec)
    value, witness = rp.optimal_guillotine(inst)
    layout = rp.partition_dc(inst)
    naive, forced = rp.lower_bound(inst, layout)
    assert value >= forced - 1e-9
    assert value >= naive - 1e-9
    assert value <= layout.total_half_perimeter() + 1e-9
    assert value <= rp.partition_mdc(inst).total_half_perimeter() + 1e-9
    assert rp.validate_layout(inst, witness).ok
