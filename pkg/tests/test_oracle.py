"""Enumeration, brute-force primitives, generation, and suite plumbing."""

import pytest

from quasinv import (
    BoundTooLarge,
    ConfigError,
    FiniteTable,
    GenParams,
    SuiteConfig,
    brute_force_w_table,
    enumerate_finite_maps,
    random_described_map,
    run_theorem_suite,
)
from quasinv.oracle import brute_force_interval_w, named_corpus


def test_enumeration_counts():
    assert len(list(enumerate_finite_maps(2))) == 4
    assert len(list(enumerate_finite_maps(3))) == 27
    assert list(enumerate_finite_maps(1)) == [FiniteTable((0,))]


def test_enumeration_bound():
    with pytest.raises(BoundTooLarge):
        next(enumerate_finite_maps(8))


def test_enumeration_lexicographic_and_distinct():
    maps = [sm.table for sm in enumerate_finite_maps(3)]
    assert maps == sorted(maps)
    assert len(set(maps)) == 27


def test_w_table_identity_present():
    table = brute_force_w_table(FiniteTable((0, 1, 2)))
    assert table is not None and len(table) == 7


def test_w_table_four_cycle_absent():
    assert brute_force_w_table(FiniteTable((1, 2, 3, 0))) is None


def test_w_table_three_cycle_present():
    assert brute_force_w_table(FiniteTable((1, 2, 0))) is not None


def test_interval_oracle():
    assert brute_force_interval_w(named_corpus()["succ"], 12) is None
    assert brute_force_interval_w(named_corpus()["shift2"], 12) is not None


def test_random_map_deterministic_and_valid():
    a = random_described_map(1)
    b = random_described_map(1)
    assert a == b
    quiet = random_described_map(2, GenParams(max_shift=0))
    assert all(c == 0 for c in quiet.shifts)
    for seed in range(50):
        sm = random_described_map(seed)
        sm(0), sm(17)  # total evaluation


def test_config_validation():
    with pytest.raises(ConfigError):
        run_theorem_suite(SuiteConfig(n_max=9))
    with pytest.raises(ConfigError):
        run_theorem_suite(SuiteConfig(theorems=("no-such-check",)))


def test_empty_selection_gives_empty_report():
    report = run_theorem_suite(SuiteConfig(theorems=()))
    assert report.checks == [] and report.passed


def test_suite_deterministic_bytes():
    cfg = SuiteConfig(theorems=("orbit-infinite-iterates-distinct", "strict-classifier-families"), samples=10)
    assert run_theorem_suite(cfg).to_json() == run_theorem_suite(cfg).to_json()


def test_small_suite_passes():
    cfg = SuiteConfig(
        theorems=(
            "enumeration-complete",
            "cofinite-implies-pairwise-intersecting",
            "identity-decision-intervals",
        ),
        n_max=3,
        samples=15,
    )
    report = run_theorem_suite(cfg)
    assert report.passed
    assert all(c.instances > 0 for c in report.checks)
