"""Forward-orbit machinery.

Tail/cycle decomposition for finite orbits, certified infinitude for maps on
the naturals, hitting times, orbit intersection, the shared-point selector
``xi`` (a sum-of-hitting-times minimizer over the intersection of orbits),
and the pairwise-intersection predicate over infinite orbits.

The crucial fact for maps in described form: above the prefix, the residue
``r = x % m`` evolves as ``r -> (r + shifts[r]) % m``, a functional graph on
``m`` nodes.  Every trajectory that stays above the prefix long enough locks
onto one of that graph's cycles; the cycle's net height drift per period is
always a multiple of ``m`` (a full loop returns to the same residue), and its
sign decides infinitude.  All "infinite" questions below reduce to finite
arithmetic on those cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import OutOfDomain
from .selfmap import DescribedNatMap, FiniteTable, SelfMap

# simulation guard; orbit walks are proven to terminate well below this
_MAX_STEPS = 1_000_000


# ---------------------------------------------------------------------------
# Residue structure of a described map's tail
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ResidueCycle:
    """A cycle of the residue map r -> (r + shifts[r]) % m.

    ``residues`` lists the cycle in trajectory order starting from its
    smallest member; ``drift`` is the total height change over one period
    (always a multiple of the modulus).
    """

    residues: tuple[int, ...]
    drift: int

    def __len__(self) -> int:
        return len(self.residues)


@dataclass(frozen=True)
class TailStructure:
    """Cycle decomposition of the residue map, with per-residue fate."""

    cycles: tuple[ResidueCycle, ...]
    cycle_index: tuple[int, ...]  # residue -> index into cycles
    path_len: tuple[int, ...]  # residue -> steps before reaching its cycle

    def fate(self, r: int) -> ResidueCycle:
        return self.cycles[self.cycle_index[r]]

    def on_cycle(self, r: int) -> bool:
        return self.path_len[r] == 0

    def positive_cycles(self) -> list[ResidueCycle]:
        return [c for c in self.cycles if c.drift > 0]


@lru_cache(maxsize=None)
def tail_structure(sm: DescribedNatMap) -> TailStructure:
    m = sm.modulus
    step = [(r + sm.shifts[r]) % m for r in range(m)]

    order = [-1] * m  # visit order within current walk
    cycle_of = [-1] * m
    dist = [-1] * m
    cycles: list[ResidueCycle] = []

    for start in range(m):
        if cycle_of[start] >= 0:
            continue
        walk: list[int] = []
        r = start
        while cycle_of[r] < 0 and order[r] < 0:
            order[r] = len(walk)
            walk.append(r)
            r = step[r]
        if cycle_of[r] < 0:
            # closed a new cycle at r
            k = order[r]
            cyc = walk[k:]
            drift = sum(sm.shifts[q] for q in cyc)
            rot = cyc.index(min(cyc))
            cycles.append(ResidueCycle(tuple(cyc[rot:] + cyc[:rot]), drift))
            for q in cyc:
                cycle_of[q] = len(cycles) - 1
                dist[q] = 0
            tail = walk[:k]
        else:
            tail = walk
        for i in range(len(tail) - 1, -1, -1):
            q = tail[i]
            cycle_of[q] = cycle_of[step[q]]
            dist[q] = dist[step[q]] + 1
        for q in walk:
            order[q] = -1

    for cyc in cycles:
        assert cyc.drift % m == 0, "cycle drift must be a multiple of the modulus"
    return TailStructure(tuple(cycles), tuple(cycle_of), tuple(dist))


@lru_cache(maxsize=None)
def _cycle_sums(sm: DescribedNatMap, r: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For an on-cycle residue r: (residues from r, partial sums S_0..S_L).

    S_0 = 0 and S_L equals the drift; intermediate values are the height
    offsets while traversing one period starting at r.
    """
    ts = tail_structure(sm)
    assert ts.on_cycle(r)
    cyc = ts.fate(r)
    k = cyc.residues.index(r)
    ordered = cyc.residues[k:] + cyc.residues[:k]
    sums = [0]
    for q in ordered:
        sums.append(sums[-1] + sm.shifts[q])
    return ordered, tuple(sums)


def _min_dip(sm: DescribedNatMap, r: int) -> int:
    """Lowest height offset reached during one period starting at residue r."""
    _, sums = _cycle_sums(sm, r)
    return min(sums)


def shift_magnitude(sm: DescribedNatMap) -> int:
    return max((abs(c) for c in sm.shifts), default=0)


def lock_height(sm: DescribedNatMap) -> int:
    """Height above which trajectories provably never re-enter the prefix.

    Any trajectory point at or above this height whose residue sits on a
    positive-drift cycle stays above the prefix forever; a point here whose
    residue leads to a non-positive cycle descends through this band.
    """
    c = shift_magnitude(sm) + 1
    return sm.prefix_len + 2 * sm.modulus * c


# ---------------------------------------------------------------------------
# Orbit results and profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DriftCertificate:
    """Finite evidence that an orbit never repeats.

    From ``entry_height`` the trajectory follows the shift rule around
    ``residue_cycle`` forever, gaining ``drift`` per period and never
    dipping below the prefix.
    """

    entry_height: int
    residue_cycle: tuple[int, ...]
    drift: int

    def validate(self, sm: DescribedNatMap) -> None:
        assert self.drift > 0
        h = self.entry_height
        for r in self.residue_cycle:
            assert h >= sm.prefix_len and h % sm.modulus == r
            h += sm.shifts[r]
        assert h - self.entry_height == self.drift


@dataclass(frozen=True)
class OrbitResult:
    """Either an exact tail/cycle decomposition or an infinitude certificate."""

    tail: tuple[int, ...] | None = None
    cycle: tuple[int, ...] | None = None
    certificate: DriftCertificate | None = None

    @property
    def is_finite(self) -> bool:
        return self.certificate is None

    def points(self) -> tuple[int, ...]:
        if not self.is_finite:
            raise ValueError("infinite orbits have no finite point list")
        return self.tail + self.cycle


class OrbitProfile:
    """Full description of one forward orbit, exact membership included.

    Finite orbits store the whole point sequence.  Infinite orbits store the
    pre-periodic points plus the asymptotic part: from ``entry`` onward the
    orbit is ``entry + S_q + k * drift`` for each phase q of the locked
    residue cycle, so membership reduces to a congruence test.
    """

    def __init__(self, sm: SelfMap, start: int):
        self.sm = sm
        self.start = start
        self.finite: bool
        self.seq: tuple[int, ...]  # finite: whole orbit; infinite: pre-entry part
        self.mu: int | None = None  # finite: tail length
        self.entry: int | None = None
        self.phase_sums: tuple[int, ...] | None = None
        self.phase_residues: tuple[int, ...] | None = None
        self.drift: int | None = None
        self._walk(sm, start)
        self._index = {p: i for i, p in enumerate(self.seq)}
        if not self.finite:
            self._phase_of = {r: q for q, r in enumerate(self.phase_residues)}

    def _walk(self, sm: SelfMap, start: int) -> None:
        seq: list[int] = []
        index: dict[int, int] = {}
        nat = isinstance(sm, DescribedNatMap)
        if nat:
            ts = tail_structure(sm)
            n0 = sm.prefix_len
        x = start
        for _ in range(_MAX_STEPS):
            if x in index:
                self.finite = True
                self.mu = index[x]
                self.seq = tuple(seq)
                return
            if nat and x >= n0:
                r = x % sm.modulus
                if ts.on_cycle(r) and ts.fate(r).drift > 0 and x + _min_dip(sm, r) >= n0:
                    residues, sums = _cycle_sums(sm, r)
                    self.finite = False
                    self.seq = tuple(seq)
                    self.entry = x
                    self.phase_residues = residues
                    self.phase_sums = sums[:-1]
                    self.drift = sums[-1]
                    return
            index[x] = len(seq)
            seq.append(x)
            x = sm(x)
        raise RuntimeError("orbit walk did not settle; map violates representability bounds")

    # -- queries ------------------------------------------------------------

    def hitting(self, y: int) -> int | None:
        """Least k with iterate(start, k) == y, or None when unreachable."""
        i = self._index.get(y)
        if i is not None:
            return i
        if self.finite:
            return None
        q = self._phase_of.get(y % self.sm.modulus)
        if q is None:
            return None
        v0 = self.entry + self.phase_sums[q]
        if y < v0 or (y - v0) % self.drift:
            return None
        k = (y - v0) // self.drift
        return len(self.seq) + q + k * len(self.phase_residues)

    def __contains__(self, y: int) -> bool:
        return self.hitting(y) is not None

    def point_at(self, k: int) -> int:
        if k < len(self.seq):
            return self.seq[k]
        if self.finite:
            u = self.mu
            v = len(self.seq) - u
            return self.seq[u + (k - u) % v]
        j = k - len(self.seq)
        q, periods = j % len(self.phase_residues), j // len(self.phase_residues)
        return self.entry + self.phase_sums[q] + periods * self.drift

    def points_upto(self, bound: int) -> frozenset[int]:
        """All orbit points with value <= bound (exact, not step-count-bounded)."""
        pts = {p for p in self.seq if p <= bound}
        if not self.finite:
            for s in self.phase_sums:
                v = self.entry + s
                while v <= bound:
                    pts.add(v)
                    v += self.drift
        return frozenset(pts)

    def cycle_residue_set(self) -> frozenset[int]:
        assert not self.finite
        return frozenset(self.phase_residues)

    def first_value_at_residue(self, r: int) -> int | None:
        assert not self.finite
        q = self._phase_of.get(r)
        if q is None:
            return None
        return self.entry + self.phase_sums[q]

    def asymptotic_threshold(self) -> int:
        """Every class-covered point at or above this value is in the orbit."""
        assert not self.finite
        return max(self.entry + s for s in self.phase_sums)

    def covers_class_fully(self, r: int) -> bool:
        """True when the orbit eventually contains every natural == r (mod m)."""
        assert not self.finite
        return r in self._phase_of and self.drift == self.sm.modulus

    def is_cofinite(self) -> bool:
        if self.finite:
            return False
        return len(self.phase_residues) == self.sm.modulus and self.drift == self.sm.modulus


@lru_cache(maxsize=None)
def orbit_profile(sm: SelfMap, x: int) -> OrbitProfile:
    if isinstance(sm, FiniteTable) and not 0 <= x < sm.size:
        raise OutOfDomain(f"{x} is outside [0, {sm.size})")
    if isinstance(sm, DescribedNatMap) and x < 0:
        raise OutOfDomain(f"{x} is not a natural number")
    return OrbitProfile(sm, x)


def orbit(sm: SelfMap, x: int) -> OrbitResult:
    """Tail/cycle decomposition of the orbit of x, or an infinitude certificate."""
    prof = orbit_profile(sm, x)
    if prof.finite:
        tail, cycle = prof.seq[: prof.mu], prof.seq[prof.mu :]
        for i, p in enumerate(tail):
            nxt = tail[i + 1] if i + 1 < len(tail) else cycle[0]
            assert sm(p) == nxt
        for i, p in enumerate(cycle):
            assert sm(p) == cycle[(i + 1) % len(cycle)]
        return OrbitResult(tail=tail, cycle=cycle)
    cert = DriftCertificate(prof.entry, prof.phase_residues, prof.drift)
    cert.validate(sm)
    return OrbitResult(certificate=cert)


def hitting_time(sm: SelfMap, x: int, y: int) -> int | None:
    """Least n with iterate(x, n) == y, or None when y is not on the orbit."""
    return orbit_profile(sm, x).hitting(y)


def orbit_is_finite(sm: SelfMap, x: int) -> bool:
    return orbit_profile(sm, x).finite


# ---------------------------------------------------------------------------
# Orbit intersection and the shared-point selector
# ---------------------------------------------------------------------------


def orbits_intersect(sm: SelfMap, a: int, b: int) -> tuple[int, int, int] | None:
    """A common point (z, m_a, m_b) of the two orbits, or None when disjoint.

    The returned z minimizes m_a + m_b (ties broken by smallest z), matching
    the selector below on pairs.
    """
    pa, pb = orbit_profile(sm, a), orbit_profile(sm, b)
    if pa.finite != pb.finite:
        # a finite orbit consists of finite-orbit points only, an infinite
        # orbit of infinite-orbit points only; no overlap is possible
        return None
    if pa.finite:
        common = set(pa.seq) & set(pb.seq)
        if not common:
            return None
        best = min(common, key=lambda z: (pa.hitting(z) + pb.hitting(z), z))
        return (best, pa.hitting(best), pb.hitting(best))
    z = _pair_meet(pa, pb)
    if z is None:
        return None
    return (z, pa.hitting(z), pb.hitting(z))


def _pair_meet(pa: OrbitProfile, pb: OrbitProfile) -> int | None:
    """Earliest common point of two infinite orbits (None when disjoint)."""
    candidates: list[int] = []
    for p in pa.seq:
        if p in pb:
            candidates.append(p)
            break
    for p in pb.seq:
        if p in pa:
            candidates.append(p)
            break
    if pa.cycle_residue_set() == pb.cycle_residue_set():
        d = pa.drift
        for r in pa.phase_residues:
            va = pa.first_value_at_residue(r)
            vb = pb.first_value_at_residue(r)
            if (va - vb) % d == 0:
                candidates.append(max(va, vb))
    if not candidates:
        return None
    return min(candidates, key=lambda z: (pa.hitting(z) + pb.hitting(z), z))


@dataclass
class XiResult:
    """A common point of all orbits over a set, with minimal total hitting time."""

    point: int
    hitting_times: dict[int, int]


def xi(sm: SelfMap, istar: tuple[int, ...]) -> XiResult | None:
    """Sum-of-hitting-times-minimal common point of the orbits over ``istar``.

    Absent exactly when the orbits have empty intersection.  Among minimizers
    the smallest point is chosen (only relevant when all orbits are finite;
    with infinite orbits the minimizer is unique).
    """
    if not istar:
        raise ValueError("xi needs a nonempty set")
    istar = tuple(dict.fromkeys(istar))
    profs = {a: orbit_profile(sm, a) for a in istar}
    finiteness = {p.finite for p in profs.values()}
    if len(finiteness) > 1:
        return None

    if finiteness == {True}:
        common = set(profs[istar[0]].seq)
        for a in istar[1:]:
            common &= set(profs[a].seq)
        if not common:
            return None
        best = min(common, key=lambda z: (sum(p.hitting(z) for p in profs.values()), z))
        return XiResult(best, {a: profs[a].hitting(best) for a in istar})

    cur = profs[istar[0]]
    z = istar[0]
    for a in istar[1:]:
        z = _pair_meet(cur, profs[a])
        if z is None:
            return None
        cur = orbit_profile(sm, z)
    return XiResult(z, {a: profs[a].hitting(z) for a in istar})


def in_D_phi(sm: SelfMap, istar: tuple[int, ...]) -> bool:
    """True iff the orbits of the elements of ``istar`` share a common point."""
    return xi(sm, istar) is not None


# ---------------------------------------------------------------------------
# Global orbit-structure predicates for described maps
# ---------------------------------------------------------------------------


def check_p_tilde(sm: SelfMap) -> bool:
    """Do every two infinite orbits intersect?

    Vacuously true on finite domains.  On the naturals, infinite orbits exist
    exactly when the residue map has a positive-drift cycle; two of them
    intersect iff they lock onto the same cycle in the same height class
    modulo the drift.  Arbitrarily high starting points realize every height
    class, so the answer is positive exactly when there is at most one
    positive cycle and its drift is the modulus itself.
    """
    if isinstance(sm, FiniteTable):
        return True
    pos = tail_structure(sm).positive_cycles()
    if not pos:
        return True
    return len(pos) == 1 and pos[0].drift == sm.modulus


def p_tilde_witness(sm: SelfMap) -> tuple[int, int] | None:
    """Two points with disjoint infinite orbits, or None when no such pair exists.

    The witness construction mirrors the decision: with two positive cycles,
    deep points of either never meet; with one positive cycle of drift d*m
    (d >= 2), same-residue points one modulus apart fall into different
    height classes and never meet.
    """
    if isinstance(sm, FiniteTable):
        return None
    ts = tail_structure(sm)
    pos = ts.positive_cycles()
    m = sm.modulus
    base = lock_height(sm) + 1

    def deep_rep(r: int) -> int:
        x = base + (r - base) % m
        while not (x + _min_dip(sm, r) >= sm.prefix_len):
            x += m
        return x

    if len(pos) >= 2:
        a = deep_rep(pos[0].residues[0])
        b = deep_rep(pos[1].residues[0])
        return (a, b) if a < b else (b, a)
    if len(pos) == 1 and pos[0].drift != m:
        a = deep_rep(pos[0].residues[0])
        return (a, a + m)
    return None


def all_orbits_infinite(sm: SelfMap) -> bool:
    """True iff every point of the domain has an infinite orbit.

    Checking up to one residue period above the lock height suffices: any
    higher point either locks immediately onto a positive cycle (infinite)
    or descends through the checked window.
    """
    if isinstance(sm, FiniteTable):
        return False
    bound = lock_height(sm) + sm.modulus
    return all(not orbit_profile(sm, x).finite for x in range(bound + 1))


def exists_cofinite_orbit(sm: DescribedNatMap) -> bool:
    """True iff some orbit is cofinite in the naturals.

    Equivalent to the residue map being a single full-length cycle with
    drift exactly the modulus; then every infinite orbit is cofinite, and
    infinite orbits exist.
    """
    ts = tail_structure(sm)
    return (
        len(ts.cycles) == 1
        and len(ts.cycles[0]) == sm.modulus
        and ts.cycles[0].drift == sm.modulus
    )


def is_orbit_cofinite(sm: DescribedNatMap, a: int) -> bool:
    return orbit_profile(sm, a).is_cofinite()
