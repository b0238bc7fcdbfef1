"""Invariance and k-quasi-invariance predicates, plus the identity characterizations.

A finite set L is invariant when its image stays inside it; internally
k-quasi-invariant when removing at most k points makes the image stay
inside; externally k-quasi-invariant when the image leaves by at most k
points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotNatDomain
from .selfmap import DescribedNatMap, FiniteTable, SelfMap


@dataclass(frozen=True)
class QuasiInvarianceReport:
    """Verdict plus witness: the removal set (internal) or the excess (external)."""

    holds: bool
    kind: str  # "internal" | "external"
    witness: tuple[int, ...] | None


def is_invariant(sm: SelfMap, lam: tuple[int, ...]) -> bool:
    """True iff the image of the set is contained in the set."""
    pts = set(lam)
    return all(sm(x) in pts for x in pts)


def internal_quasi_invariant(sm: SelfMap, lam: tuple[int, ...], k: int) -> QuasiInvarianceReport:
    """Can removing at most k points of the set make its image stay inside?

    The minimal removal set is exactly the points whose images escape, so the
    verdict is a size comparison and the witness is unique.
    """
    if not lam:
        raise ValueError("the set must be nonempty")
    if k < 0:
        raise ValueError("k must be a natural number")
    pts = set(lam)
    escapes = tuple(sorted(x for x in pts if sm(x) not in pts))
    if len(escapes) <= k:
        return QuasiInvarianceReport(True, "internal", escapes)
    return QuasiInvarianceReport(False, "internal", None)


def external_quasi_invariant(sm: SelfMap, lam: tuple[int, ...], k: int) -> QuasiInvarianceReport:
    """Does the image leave the set by at most k points?"""
    if not lam:
        raise ValueError("the set must be nonempty")
    if k < 0:
        raise ValueError("k must be a natural number")
    pts = set(lam)
    excess = tuple(sorted({sm(x) for x in pts} - pts))
    return QuasiInvarianceReport(len(excess) <= k, "external", excess)


def _is_identity(sm: SelfMap) -> bool:
    if isinstance(sm, FiniteTable):
        return all(v == i for i, v in enumerate(sm.table))
    return all(v == i for i, v in enumerate(sm.prefix)) and all(c == 0 for c in sm.shifts)


def identity_decision(sm: SelfMap, scope: str, k: int) -> bool:
    """Is every finite set of size >= k (resp. every interval of length >= k) invariant?

    A non-identity map moves some point, and a large enough set (interval)
    containing that point but not its image witnesses failure; so the answer
    is "map is the identity", except that on a finite domain with k equal to
    the domain size the only set quantified over is the whole domain, which
    every map preserves.
    """
    if scope == "subsets":
        if isinstance(sm, FiniteTable):
            if not 1 <= k <= sm.size:
                raise ValueError(f"k must lie in [1, {sm.size}]")
            if k == sm.size:
                return True
        elif k < 1:
            raise ValueError("k must be at least 1")
        return _is_identity(sm)
    if scope == "intervals":
        if not isinstance(sm, DescribedNatMap):
            raise NotNatDomain("interval scope needs a map on the naturals")
        if k < 1:
            raise ValueError("k must be at least 1")
        return _is_identity(sm)
    raise ValueError(f"unknown scope {scope!r}")
