"""Orbit decomposition, certificates, hitting times, intersection, and the shared point."""

import pytest

from quasinv import (
    DescribedNatMap,
    FiniteTable,
    check_p_tilde,
    hitting_time,
    in_D_phi,
    named_map,
    orbit,
    orbits_intersect,
    xi,
)
from quasinv.orbits import (
    all_orbits_infinite,
    exists_cofinite_orbit,
    is_orbit_cofinite,
    orbit_profile,
    p_tilde_witness,
    tail_structure,
)

SUCC = named_map("succ")
BULLET = DescribedNatMap((2,), 1, (1,))
CONJ = DescribedNatMap((2,), 2, (-1, 3))
SHIFT2 = DescribedNatMap((), 1, (2,))
ZERO_FIX = DescribedNatMap((0,), 1, (1,))


def test_orbit_three_cycle():
    res = orbit(FiniteTable((1, 2, 0)), 0)
    assert res.is_finite
    assert res.tail == () and res.cycle == (0, 1, 2)


def test_orbit_succ_infinite():
    res = orbit(SUCC, 0)
    assert not res.is_finite
    res.certificate.validate(SUCC)


def test_bullet_orbit_omits_exactly_one():
    res = orbit(BULLET, 0)
    assert not res.is_finite
    covered = orbit_profile(BULLET, 0).points_upto(100)
    assert set(range(101)) - covered == {1}


def test_orbit_tail_then_cycle():
    res = orbit(FiniteTable((1, 2, 1, 0)), 3)
    assert res.tail == (3, 0) and res.cycle == (1, 2)


def test_hitting_time():
    assert hitting_time(SUCC, 2, 5) == 3
    assert hitting_time(SUCC, 5, 2) is None
    assert hitting_time(FiniteTable((1, 2, 0)), 0, 2) == 2


def test_hitting_time_infinite_progressions():
    # orbit of 0 under the conjugate map walks 0,2,1,4,3,6,5,...
    assert hitting_time(CONJ, 0, 5) == 6
    assert hitting_time(CONJ, 2, 0) is None


def test_orbits_intersect():
    assert orbits_intersect(SUCC, 0, 3) == (3, 3, 0)
    assert orbits_intersect(SHIFT2, 0, 1) is None
    assert orbits_intersect(FiniteTable((1, 0, 3, 2)), 0, 2) is None


def test_orbits_intersect_finite_and_infinite_never_meet():
    assert orbits_intersect(ZERO_FIX, 0, 1) is None


def test_xi_examples():
    z = xi(SUCC, (2, 5))
    assert z.point == 5 and z.hitting_times == {2: 3, 5: 0}
    z = xi(FiniteTable((1, 2, 0)), (0, 1))
    assert z.point == 1 and z.hitting_times == {0: 1, 1: 0}
    z = xi(SHIFT2, (7,))
    assert z.point == 7 and z.hitting_times == {7: 0}


def test_xi_absent_on_disjoint_orbits():
    assert xi(SHIFT2, (0, 1)) is None
    assert in_D_phi(SHIFT2, (0, 1)) is False
    assert in_D_phi(ZERO_FIX, (0, 1)) is False
    assert in_D_phi(SUCC, (0, 4, 9)) is True


def test_p_tilde():
    assert check_p_tilde(FiniteTable((1, 0))) is True
    assert check_p_tilde(SUCC) is True
    assert check_p_tilde(SHIFT2) is False
    assert check_p_tilde(BULLET) is True
    assert check_p_tilde(CONJ) is True


def test_p_tilde_witness_is_disjoint_infinite_pair():
    wit = p_tilde_witness(SHIFT2)
    a, b = wit
    assert not orbit_profile(SHIFT2, a).finite
    assert not orbit_profile(SHIFT2, b).finite
    assert orbits_intersect(SHIFT2, a, b) is None
    assert p_tilde_witness(SUCC) is None
    # two separate upward residue classes
    two_up = DescribedNatMap((), 2, (2, 2))
    wit = p_tilde_witness(two_up)
    assert wit is not None and orbits_intersect(two_up, *wit) is None


def test_tail_structure_drift_multiple_of_modulus():
    for sm in (SUCC, CONJ, SHIFT2, DescribedNatMap((0, 3), 3, (2, -1, 0))):
        for cyc in tail_structure(sm).cycles:
            assert cyc.drift % sm.modulus == 0


def test_cofinite_detection():
    assert exists_cofinite_orbit(SUCC)
    assert exists_cofinite_orbit(BULLET)
    assert not exists_cofinite_orbit(SHIFT2)
    assert is_orbit_cofinite(BULLET, 0)
    assert not is_orbit_cofinite(SHIFT2, 0)


def test_all_orbits_infinite():
    assert all_orbits_infinite(SUCC)
    assert all_orbits_infinite(CONJ)
    assert not all_orbits_infinite(ZERO_FIX)
    assert not all_orbits_infinite(FiniteTable((1, 0)))


def test_infinite_profile_membership_agrees_with_simulation():
    for sm in (CONJ, BULLET, SHIFT2, DescribedNatMap((5, 0), 2, (1, 3))):
        prof = orbit_profile(sm, 0)
        if prof.finite:
            continue
        seen = {}
        y = 0
        for k in range(120):
            seen.setdefault(y, k)
            y = sm(y)
        for target in range(60):
            expected = seen.get(target)
            got = prof.hitting(target)
            if expected is not None:
                assert got == expected
        for k in range(120):
            assert prof.point_at(k) == sm.iterate(0, k)


def test_profile_points_upto_matches_simulation():
    prof = orbit_profile(CONJ, 3)
    direct = set()
    y = 3
    for _ in range(200):
        if y <= 60:
            direct.add(y)
        y = CONJ(y)
    assert prof.points_upto(60) == direct
