"""Finite invariant supersets and the max-condition structures on the naturals.

A finite set has a finite invariant superset exactly when the orbits of its
elements are finite; the canonical superset is the union of those orbits.
The max-condition variants describe idempotent, point-dominating maps whose
images are fixed points; their supersets are unions of {a, alpha(a)} pairs,
or intervals when the superset must be one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InfiniteOrbitError, NotNatDomain, ProfileInvalid
from .orbits import orbit_profile
from .selfmap import DescribedNatMap, SelfMap


def build_G_orbit_union(
    sm: SelfMap, istar: Iterable[int], h: Iterable[int] = ()
) -> tuple[int, ...]:
    """Union of the orbits over ``istar`` and ``h``; invariant and contains ``istar``."""
    pts: set[int] = set()
    for a in list(istar) + list(h):
        prof = orbit_profile(sm, a)
        if not prof.finite:
            raise InfiniteOrbitError(a)
        pts.update(prof.seq)
    return tuple(sorted(pts))


def check_superset_closure(sm: SelfMap, istar: Iterable[int], g_value: Iterable[int]) -> bool:
    """True iff ``istar`` is contained in the set and the set's image stays inside."""
    g = set(g_value)
    return set(istar) <= g and all(sm(x) in g for x in g)


@dataclass(frozen=True)
class MaxCondProfile:
    """Fixed-point sequence plus index maps for a map with alpha(alpha(n)) = alpha(n) >= n.

    ``b(n)`` enumerates the fixed points in increasing order, ``j(a)`` is the
    index with alpha(a) = b(j(a)), and ``r(a)`` the least index with
    b(r(a)) > a.
    """

    sm: DescribedNatMap

    def is_fixed(self, x: int) -> bool:
        return self.sm(x) == x

    def fixed_upto(self, bound: int) -> list[int]:
        return [x for x in range(bound + 1) if self.is_fixed(x)]

    def b(self, n: int) -> int:
        count = -1
        x = 0
        while True:
            if self.is_fixed(x):
                count += 1
                if count == n:
                    return x
            x += 1

    def _index_of_fixed(self, y: int) -> int:
        assert self.is_fixed(y)
        return sum(1 for x in range(y) if self.is_fixed(x))

    def j(self, a: int) -> int:
        return self._index_of_fixed(self.sm(a))

    def r(self, a: int) -> int:
        """Least n with b(n) > a, i.e. the number of fixed points <= a."""
        return sum(1 for x in range(a + 1) if self.is_fixed(x))


def analyze_maxcond(sm: SelfMap) -> Optional[MaxCondProfile]:
    """Profile for maps whose every image is a dominating fixed point.

    Checks alpha(alpha(n)) = alpha(n) >= n structurally: prefix entries are
    verified pointwise, and each nonzero shift must be nonnegative and land
    on a residue whose shift is zero.
    """
    if not isinstance(sm, DescribedNatMap):
        raise NotNatDomain("max-condition analysis needs a map on the naturals")
    for i, v in enumerate(sm.prefix):
        if v < i or sm(v) != v:
            return None
    for r, c in enumerate(sm.shifts):
        if c < 0:
            return None
        if c != 0 and sm.shifts[(r + c) % sm.modulus] != 0:
            return None
    return MaxCondProfile(sm)


def interval_superset_bounds(
    profile: MaxCondProfile, istar: Iterable[int]
) -> tuple[int, int, int]:
    """Bounds (u_star, u_max, v) for interval supersets [u, v] with max in alpha(istar).

    Every u in [u_star, u_max] yields a closed interval; below u_star the
    image of u escapes past the maximum.  Requires the image indices to be
    non-increasing below the first fixed point.
    """
    pts = sorted(set(istar))
    if not pts:
        raise ValueError("the set must be nonempty")
    sm = profile.sm
    b0 = profile.b(0)
    alphas = [sm(x) for x in range(b0)]
    if any(alphas[i] < alphas[i + 1] for i in range(len(alphas) - 1)):
        raise ProfileInvalid("image values must be non-increasing below the first fixed point")
    v = max(sm(a) for a in pts)
    u_star = next(n for n in range(b0 + 1) if v >= sm(n))
    u_max = pts[0]
    return (u_star, u_max, v)
