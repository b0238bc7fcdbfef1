"""Classify maps whose finite subsets (or intervals) all stay inside after one removal.

Subset side: the only such maps deviate from the identity on at most three
points, in one of two patterns (a two-step chain, or a three-cycle).  The
interval side on the naturals splits into an all-ascending pattern and two
pivot patterns where non-fixed points ascend up to a pivot index and step
down gently afterwards.  Each classification carries a selector ``w``
choosing the removal point for a queried set or interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .errors import DomainTooSmall, NotNatDomain
from .selfmap import DescribedNatMap, FiniteTable, SelfMap


# ---------------------------------------------------------------------------
# Subsets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubsetClassification:
    case: int  # 1 = chain pattern, 2 = three-cycle pattern
    a: int
    b: int
    c: int


class SubsetWitnessSelector:
    """Removal-point selector for a classified map; total on nonempty finite sets.

    Determined branches follow the classification's case tables; on free
    branches the smallest element is returned.
    """

    def __init__(self, sm: SelfMap, cls: SubsetClassification):
        self.sm = sm
        self.cls = cls

    def choose(self, subset: Iterable[int]) -> int:
        pts = sorted(set(subset))
        if not pts:
            raise ValueError("the set must be nonempty")
        s = set(pts)
        a, b, c = self.cls.a, self.cls.b, self.cls.c
        if self.cls.case == 1:
            if a in s and b in s:
                return b
            if a in s:
                return a
            if b in s:
                return b
            return pts[0]
        ins = (a in s, b in s, c in s)
        if ins == (True, False, False):
            return a
        if ins == (False, True, False):
            return b
        if ins == (False, False, True):
            return c
        if ins == (True, True, False):
            return b
        if ins == (True, False, True):
            return a
        if ins == (False, True, True):
            return c
        return pts[0]


def _nonfixed_points(sm: SelfMap) -> Optional[list[int]]:
    """Non-fixed points in increasing order, or None when there are infinitely many."""
    if isinstance(sm, FiniteTable):
        return [i for i, v in enumerate(sm.table) if v != i]
    if any(c != 0 for c in sm.shifts):
        return None
    return [i for i, v in enumerate(sm.prefix) if v != i]


def classify_subsets_1qi(
    sm: SelfMap,
) -> Optional[tuple[SubsetClassification, SubsetWitnessSelector]]:
    """Decide whether every finite subset admits a one-point removal witness.

    Present exactly when the map matches one of the two patterns; the
    identity is reported as the chain pattern with a = b = c = 0.
    """
    if isinstance(sm, FiniteTable) and sm.size < 3:
        raise DomainTooSmall("the subset classification needs at least three points")
    nf = _nonfixed_points(sm)
    cls = None
    if nf is not None:
        if len(nf) == 0:
            anchor = 0
            cls = SubsetClassification(1, anchor, anchor, anchor)
        elif len(nf) == 1:
            p = nf[0]
            b = sm(p)
            cls = SubsetClassification(1, p, b, sm(b))
        elif len(nf) == 2:
            p, q = nf
            if sm(p) == q:
                cls = SubsetClassification(1, p, q, sm(q))
            elif sm(q) == p:
                cls = SubsetClassification(1, q, p, sm(p))
        elif len(nf) == 3:
            a = nf[0]
            b = sm(a)
            c = sm(b)
            if {a, b, c} == set(nf) and sm(c) == a and len({a, b, c}) == 3:
                cls = SubsetClassification(2, a, b, c)
    if cls is None:
        return None
    return cls, SubsetWitnessSelector(sm, cls)


# ---------------------------------------------------------------------------
# Intervals
# ---------------------------------------------------------------------------


def _nonfixed(sm: DescribedNatMap, x: int) -> bool:
    return sm(x) != x


def _next_nonfixed(sm: DescribedNatMap, x: int) -> Optional[int]:
    """Smallest non-fixed point above x, None when the map is eventually the identity."""
    if any(c != 0 for c in sm.shifts):
        y = x + 1
        while True:
            if _nonfixed(sm, y):
                return y
            y += 1
    for y in range(x + 1, sm.prefix_len):
        if _nonfixed(sm, y):
            return y
    return None


def _prev_nonfixed(sm: DescribedNatMap, x: int) -> Optional[int]:
    for y in range(x - 1, -1, -1):
        if _nonfixed(sm, y):
            return y
    return None


@dataclass(frozen=True)
class IntervalClassification:
    """Case data for the interval family; non-fixed points remain lazily enumerable.

    ``n_star`` is the pivot index into the increasing sequence of non-fixed
    points (None for the all-ascending case; -1 means the very first
    non-fixed point already descends).
    """

    sm: DescribedNatMap
    case: int  # 1, 2, or 3
    n_star: Optional[int]

    def nonfixed_in(self, lo: int, hi: int) -> list[tuple[int, int]]:
        """(index, point) pairs for the non-fixed points inside [lo, hi]."""
        out = []
        idx = sum(1 for x in range(lo) if _nonfixed(self.sm, x))
        for x in range(lo, hi + 1):
            if _nonfixed(self.sm, x):
                out.append((idx, x))
                idx += 1
        return out

    def b(self, n: int) -> int:
        """The n-th non-fixed point (0-based)."""
        x = -1
        for _ in range(n + 1):
            x = _next_nonfixed(self.sm, x)
            if x is None:
                raise IndexError(f"the map has fewer than {n + 1} non-fixed points")
        return x


class IntervalWitnessSelector:
    """Removal-point selector for classified interval families."""

    def __init__(self, cls: IntervalClassification):
        self.cls = cls

    def choose(self, lo: int, hi: int) -> int:
        if lo > hi:
            raise ValueError("empty interval")
        sm = self.cls.sm
        bs = self.cls.nonfixed_in(lo, hi)
        if self.cls.case == 1:
            up = [x for _, x in bs if sm(x) > hi]
            assert len(up) <= 1, "the ascending branch point must be unique"
            return up[0] if up else lo
        # the pivot entry ascends in the third pattern and descends in the
        # second, so it joins the matching escape branch
        up_top = self.cls.n_star + (1 if self.cls.case == 3 else 0)
        up = [x for i, x in bs if i <= up_top and sm(x) > hi]
        down = [x for i, x in bs if i > up_top and sm(x) < lo]
        assert len(up) <= 1 and len(down) <= 1, "branch points must be unique"
        assert not (up and down), "the two pivot branches cannot both fire"
        if up:
            return up[0]
        if down:
            return down[0]
        return lo


def classify_intervals_1qi(
    sm: SelfMap,
) -> Optional[tuple[IntervalClassification, IntervalWitnessSelector]]:
    """Decide whether every finite interval admits a one-point removal witness.

    All structural facts live in a finite window: beyond the prefix the
    non-fixed pattern and the step sizes repeat with the modulus, so one
    full period of representatives decides the tail.
    """
    if not isinstance(sm, DescribedNatMap):
        raise NotNatDomain("interval classification needs a map on the naturals")
    window = sm.prefix_len + 2 * sm.modulus
    explicit = [x for x in range(window + 1) if _nonfixed(sm, x)]

    def asc_ok(x: int) -> bool:
        v = sm(x)
        nx = _next_nonfixed(sm, x)
        return x < v and (nx is None or v <= nx)

    def desc_ok(x: int) -> bool:
        v = sm(x)
        pv = _prev_nonfixed(sm, x)
        return v < x and (pv is None or pv <= v)

    first_bad = next((i for i, x in enumerate(explicit) if not asc_ok(x)), None)
    if first_bad is None:
        # tail residues repeat the in-window representatives, so ascending holds globally
        cls = IntervalClassification(sm, 1, None)
        return cls, IntervalWitnessSelector(cls)

    pivot = explicit[first_bad]
    v = sm(pivot)
    nx = _next_nonfixed(sm, pivot)
    if v < pivot:
        case = 2
    elif nx is not None and v > nx:
        case = 3
    else:
        return None
    for x in explicit[first_bad + 1 :]:
        if not desc_ok(x):
            return None
    if any(c != 0 for c in sm.shifts):
        # tail beyond the window: every non-fixed residue must step down gently
        for r in range(sm.modulus):
            c = sm.shifts[r]
            if c == 0:
                continue
            gap_prev = next(j for j in range(1, sm.modulus + 1) if sm.shifts[(r - j) % sm.modulus] != 0)
            if not (c < 0 and -c <= gap_prev):
                return None
    cls = IntervalClassification(sm, case, first_bad - 1)
    return cls, IntervalWitnessSelector(cls)


# ---------------------------------------------------------------------------
# Strict interval variant
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StrictIntervalResult:
    kind: str  # "succ" | "pivot"
    n_star: Optional[int] = None
    u: Optional[int] = None


def classify_strict_intervals_1qi(sm: SelfMap) -> Optional[StrictIntervalResult]:
    """Recognize the two families of the strict (image-escapes) interval variant.

    Either the successor map, or the pivot family: up-by-one below a pivot
    point, the pivot mapping to some u != pivot, down-by-one above it.
    """
    if not isinstance(sm, DescribedNatMap):
        raise NotNatDomain("the strict classification needs a map on the naturals")
    window = sm.prefix_len + 2 * sm.modulus + 1
    if all(c == 1 for c in sm.shifts) and all(sm(x) == x + 1 for x in range(window + 1)):
        return StrictIntervalResult("succ")
    if all(c == -1 for c in sm.shifts):
        n_star = next((x for x in range(window + 1) if sm(x) != x + 1), None)
        if n_star is None:
            return None
        u = sm(n_star)
        if u == n_star:
            return None
        if all(sm(x) == x - 1 for x in range(n_star + 1, window + 2)):
            return StrictIntervalResult("pivot", n_star, u)
    return None
