"""Invariance, quasi-invariance, and the identity characterizations."""

import pytest
from hypothesis import given, strategies as st

from quasinv import (
    DescribedNatMap,
    FiniteTable,
    NotNatDomain,
    external_quasi_invariant,
    identity_decision,
    internal_quasi_invariant,
    is_invariant,
    named_map,
)

SUCC = named_map("succ")
IDENT = named_map("id")


def test_is_invariant():
    assert is_invariant(FiniteTable((1, 2, 0)), (0, 1, 2))
    assert not is_invariant(SUCC, (0, 1))
    assert is_invariant(IDENT, (3, 8, 12))


def test_internal_examples():
    rep = internal_quasi_invariant(SUCC, (3, 4, 5, 6, 7), 1)
    assert rep.holds and rep.witness == (7,)
    rep = internal_quasi_invariant(SUCC, (0, 2), 1)
    assert not rep.holds and rep.witness is None
    rep = internal_quasi_invariant(FiniteTable((1, 2, 0)), (0, 1), 1)
    assert rep.holds and rep.witness == (1,)


def test_external_examples():
    rep = external_quasi_invariant(IDENT, (2, 9), 0)
    assert rep.holds and rep.witness == ()
    rep = external_quasi_invariant(SUCC, (0, 1, 2, 3, 4, 5), 1)
    assert rep.holds and rep.witness == (6,)
    rep = external_quasi_invariant(FiniteTable((0, 0, 0)), (1, 2), 1)
    assert rep.holds and rep.witness == (0,)


def test_nonempty_required():
    with pytest.raises(ValueError):
        internal_quasi_invariant(SUCC, (), 1)


def test_identity_decision_examples():
    assert identity_decision(IDENT, "intervals", 1) is True
    assert identity_decision(SUCC, "intervals", 3) is False
    assert identity_decision(FiniteTable((1, 0)), "subsets", 2) is True
    assert identity_decision(FiniteTable((1, 0)), "subsets", 1) is False
    assert identity_decision(IDENT, "subsets", 4) is True


def test_identity_decision_validation():
    with pytest.raises(ValueError):
        identity_decision(FiniteTable((0, 1)), "subsets", 0)
    with pytest.raises(ValueError):
        identity_decision(FiniteTable((0, 1)), "subsets", 3)
    with pytest.raises(NotNatDomain):
        identity_decision(FiniteTable((0, 1)), "intervals", 1)


finite_maps = st.integers(1, 5).flatmap(
    lambda n: st.tuples(*[st.integers(0, n - 1)] * n).map(FiniteTable)
)


@given(finite_maps, st.data(), st.integers(0, 2))
def test_monotone_in_k_and_zero_agreement(sm, data, k):
    lam = tuple(
        sorted(
            data.draw(
                st.sets(st.integers(0, sm.size - 1), min_size=1, max_size=sm.size)
            )
        )
    )
    assert not internal_quasi_invariant(sm, lam, k).holds or internal_quasi_invariant(
        sm, lam, k + 1
    ).holds
    assert not external_quasi_invariant(sm, lam, k).holds or external_quasi_invariant(
        sm, lam, k + 1
    ).holds
    inv = is_invariant(sm, lam)
    assert inv == internal_quasi_invariant(sm, lam, 0).holds
    assert inv == external_quasi_invariant(sm, lam, 0).holds


@given(finite_maps, st.data(), st.integers(0, 2))
def test_internal_verdict_matches_removal_enumeration(sm, data, k):
    from itertools import combinations

    lam = tuple(
        sorted(
            data.draw(
                st.sets(st.integers(0, sm.size - 1), min_size=1, max_size=sm.size)
            )
        )
    )
    pts = set(lam)
    direct = any(
        all(sm(x) in pts for x in lam if x not in removed)
        for size in range(k + 1)
        for removed in combinations(lam, size)
    )
    assert internal_quasi_invariant(sm, lam, k).holds == direct
