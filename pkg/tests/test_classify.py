"""Subset and interval one-removal classifications plus their selectors."""

import pytest

from quasinv import (
    DescribedNatMap,
    DomainTooSmall,
    FiniteTable,
    NotNatDomain,
    classify_intervals_1qi,
    classify_strict_intervals_1qi,
    classify_subsets_1qi,
    named_map,
)
from quasinv.oracle import brute_force_interval_w, brute_force_w_table

SUCC = named_map("succ")
IDENT = named_map("id")


def _all_subsets(n):
    for mask in range(1, 1 << n):
        yield {x for x in range(n) if mask >> x & 1}


def test_identity_is_chain_pattern():
    cls, sel = classify_subsets_1qi(FiniteTable((0, 1, 2, 3)))
    assert cls.case == 1 and cls.a == cls.b == cls.c == 0
    assert sel.choose({1, 3}) == 1


def test_three_cycle_patch_is_case_two():
    sm = FiniteTable((1, 2, 0, 3, 4))
    cls, sel = classify_subsets_1qi(sm)
    assert cls.case == 2 and (cls.a, cls.b, cls.c) == (0, 1, 2)
    for s in _all_subsets(5):
        w = sel.choose(s)
        assert w in s and all(sm(x) in s for x in s if x != w)


def test_shifted_chain_absent():
    # moves three points but is not a three-cycle
    assert classify_subsets_1qi(FiniteTable((1, 2, 3, 3))) is None


def test_two_point_chain_case_one():
    sm = FiniteTable((0, 2, 3, 3))
    cls, sel = classify_subsets_1qi(sm)
    assert cls.case == 1 and (cls.a, cls.b, cls.c) == (1, 2, 3)
    for s in _all_subsets(4):
        w = sel.choose(s)
        assert w in s and all(sm(x) in s for x in s if x != w)


def test_swap_is_case_one():
    cls, _ = classify_subsets_1qi(FiniteTable((1, 0, 2)))
    assert cls.case == 1


def test_domain_too_small():
    with pytest.raises(DomainTooSmall):
        classify_subsets_1qi(FiniteTable((1, 0)))


def test_described_map_with_moving_tail_is_absent():
    assert classify_subsets_1qi(SUCC) is None


def test_nat_patch_classifies():
    sm = DescribedNatMap((2, 1, 0), 1, (0,))  # the three-cycle 0 -> 2 -> 0? no: 0->2,1->1? check below
    # 0 -> 2, 1 -> 1, 2 -> 0: a two-cycle on {0, 2}
    cls, _ = classify_subsets_1qi(sm)
    assert cls.case == 1


def test_matches_bruteforce_on_all_four_point_maps():
    import itertools

    for table in itertools.product(range(4), repeat=4):
        sm = FiniteTable(table)
        present = classify_subsets_1qi(sm) is not None
        assert present == (brute_force_w_table(sm) is not None), table


def test_interval_cases():
    cls, _ = classify_intervals_1qi(SUCC)
    assert cls.case == 1 and cls.n_star is None
    cls, _ = classify_intervals_1qi(IDENT)
    assert cls.case == 1
    pivot = DescribedNatMap((1, 2, 3, 0), 1, (-1,))
    cls, _ = classify_intervals_1qi(pivot)
    assert cls.case == 2 and cls.n_star == 2
    case3 = DescribedNatMap((2,), 1, (-1,))
    cls, _ = classify_intervals_1qi(case3)
    assert cls.case == 3 and cls.n_star == -1
    assert classify_intervals_1qi(DescribedNatMap((), 1, (2,))) is None


def test_interval_b_sequence_access():
    pivot = DescribedNatMap((1, 2, 3, 0), 1, (-1,))
    cls, _ = classify_intervals_1qi(pivot)
    assert [cls.b(n) for n in range(5)] == [0, 1, 2, 3, 4]
    roundup = DescribedNatMap((), 2, (0, 1))
    res = classify_intervals_1qi(roundup)
    assert res is not None
    assert [res[0].b(n) for n in range(3)] == [1, 3, 5]


def test_interval_selector_sound_and_matches_oracle():
    maps = [
        SUCC,
        IDENT,
        DescribedNatMap((1, 2, 3, 0), 1, (-1,)),
        DescribedNatMap((2,), 1, (-1,)),
        DescribedNatMap((1, 2, 5), 1, (-1,)),
        DescribedNatMap((), 2, (0, 1)),
        DescribedNatMap((4,), 2, (2, -1)),
    ]
    for sm in maps:
        res = classify_intervals_1qi(sm)
        bad = brute_force_interval_w(sm, 30)
        assert (res is not None) == (bad is None), sm
        if res is None:
            continue
        _, sel = res
        for lo in range(31):
            for hi in range(lo, 31):
                w = sel.choose(lo, hi)
                assert lo <= w <= hi
                assert all(lo <= sm(x) <= hi for x in range(lo, hi + 1) if x != w)


def test_interval_requires_nat_domain():
    with pytest.raises(NotNatDomain):
        classify_intervals_1qi(FiniteTable((0, 1)))
    with pytest.raises(NotNatDomain):
        classify_strict_intervals_1qi(FiniteTable((0, 1)))


def test_strict_families():
    assert classify_strict_intervals_1qi(SUCC).kind == "succ"
    res = classify_strict_intervals_1qi(DescribedNatMap((1, 2, 5), 1, (-1,)))
    assert (res.kind, res.n_star, res.u) == ("pivot", 2, 5)
    res = classify_strict_intervals_1qi(DescribedNatMap((3,), 1, (-1,)))
    assert (res.kind, res.n_star, res.u) == ("pivot", 0, 3)
    assert classify_strict_intervals_1qi(IDENT) is None
    assert classify_strict_intervals_1qi(DescribedNatMap((), 1, (2,))) is None
    # pivot must move its pivot point
    assert classify_strict_intervals_1qi(DescribedNatMap((1, 1), 1, (-1,))) is None
