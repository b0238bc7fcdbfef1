"""Self-maps on [0, n) and on the naturals, plus their JSON wire format.

Two representations cover everything the rest of the package reasons about:

* ``FiniteTable`` -- a lookup table on the domain [0, n).
* ``DescribedNatMap`` -- a map on the naturals given by a finite prefix
  table together with one additive shift per residue class: points below
  the prefix length map through the table, and a point ``x`` at or above
  it maps to ``x + shifts[x % modulus]``.

The described form keeps orbit finiteness and orbit intersection decidable
while still expressing successors, finite perturbations of the identity,
pivot maps, and eventually-arithmetic fixed-point structures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .errors import InvalidMap, OutOfDomain, ParseError


def _check_natural(value: object, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise InvalidMap(f"{what} must be a natural number, got {value!r}")
    return value


@dataclass(frozen=True)
class FiniteTable:
    """A self-map on [0, n) stored as a lookup table."""

    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        n = len(self.table)
        if n == 0:
            raise InvalidMap("a finite table needs at least one entry")
        for i, v in enumerate(self.table):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise InvalidMap(f"table entry {v!r} at {i} is outside [0, {n})")

    @property
    def size(self) -> int:
        return len(self.table)

    def domain(self) -> range:
        return range(self.size)

    def __call__(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise OutOfDomain(f"{x} is outside [0, {self.size})")
        return self.table[x]

    def iterate(self, x: int, k: int) -> int:
        """Apply the map ``k`` times; ``k = 0`` returns ``x`` unchanged."""
        if not 0 <= x < self.size:
            raise OutOfDomain(f"{x} is outside [0, {self.size})")
        for _ in range(k):
            x = self.table[x]
        return x


@dataclass(frozen=True)
class DescribedNatMap:
    """A self-map on the naturals: finite prefix table + residue-class shifts."""

    prefix: tuple[int, ...] = ()
    modulus: int = 1
    shifts: tuple[int, ...] = (0,)

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "shifts", tuple(self.shifts))
        if not isinstance(self.modulus, int) or self.modulus < 1:
            raise InvalidMap(f"modulus must be a positive integer, got {self.modulus!r}")
        if len(self.shifts) != self.modulus:
            raise InvalidMap(
                f"expected {self.modulus} shifts, got {len(self.shifts)}"
            )
        for i, v in enumerate(self.prefix):
            _check_natural(v, f"prefix entry at {i}")
        n = len(self.prefix)
        for r, c in enumerate(self.shifts):
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidMap(f"shift for residue {r} must be an integer")
            # smallest point the shift ever applies to is >= prefix length
            if n + c < 0:
                raise InvalidMap(
                    f"shift {c} for residue {r} maps some natural below zero"
                )

    @property
    def prefix_len(self) -> int:
        return len(self.prefix)

    def __call__(self, x: int) -> int:
        if not isinstance(x, int) or x < 0:
            raise OutOfDomain(f"{x} is not a natural number")
        if x < len(self.prefix):
            return self.prefix[x]
        return x + self.shifts[x % self.modulus]

    def iterate(self, x: int, k: int) -> int:
        """Apply the map ``k`` times; ``k = 0`` returns ``x`` unchanged."""
        if not isinstance(x, int) or x < 0:
            raise OutOfDomain(f"{x} is not a natural number")
        for _ in range(k):
            x = self(x)
        return x


SelfMap = Union[FiniteTable, DescribedNatMap]


def is_nat_map(sm: SelfMap) -> bool:
    return isinstance(sm, DescribedNatMap)


def succ() -> DescribedNatMap:
    """n -> n + 1 on the naturals."""
    return DescribedNatMap((), 1, (1,))


def identity_nat() -> DescribedNatMap:
    """The identity on the naturals."""
    return DescribedNatMap((), 1, (0,))


NAMED_MAPS = {
    "succ": succ,
    "id": identity_nat,
}


def named_map(name: str) -> DescribedNatMap:
    try:
        return NAMED_MAPS[name]()
    except KeyError:
        raise ParseError(f"unknown named map {name!r}") from None


def parse_map(text: bytes | str) -> SelfMap:
    """Parse the JSON map format into a validated self-map.

    ``{"kind": "finite", "size": n, "table": [...]}`` or
    ``{"kind": "nat", "prefix": [...], "modulus": m, "shifts": [...]}``
    (``prefix`` may be omitted when empty).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        obj = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return map_from_obj(obj)


def map_from_obj(obj: object) -> SelfMap:
    if not isinstance(obj, dict):
        raise ParseError("map description must be a JSON object")
    kind = obj.get("kind")
    if kind == "finite":
        _require_keys(obj, {"kind", "size", "table"})
        table = obj["table"]
        if not isinstance(table, list):
            raise ParseError("'table' must be a list")
        sm = FiniteTable(tuple(table))
        if obj["size"] != sm.size:
            raise InvalidMap(f"declared size {obj['size']} != table length {sm.size}")
        return sm
    if kind == "nat":
        _require_keys(obj, {"kind", "modulus", "shifts"}, optional={"prefix"})
        prefix = obj.get("prefix", [])
        if not isinstance(prefix, list) or not isinstance(obj["shifts"], list):
            raise ParseError("'prefix' and 'shifts' must be lists")
        return DescribedNatMap(tuple(prefix), obj["modulus"], tuple(obj["shifts"]))
    raise ParseError(f"unknown map kind {kind!r}")


def _require_keys(obj: dict, required: set, optional: set = frozenset()) -> None:
    keys = set(obj)
    missing = required - keys
    extra = keys - required - optional
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")
    if extra:
        raise ParseError(f"unexpected keys: {sorted(extra)}")


def map_to_obj(sm: SelfMap) -> dict:
    if isinstance(sm, FiniteTable):
        return {"kind": "finite", "size": sm.size, "table": list(sm.table)}
    obj = {"kind": "nat", "modulus": sm.modulus, "shifts": list(sm.shifts)}
    if sm.prefix:
        obj["prefix"] = list(sm.prefix)
    return obj


def serialize_map(sm: SelfMap) -> str:
    """Canonical serialization: sorted keys, defaults omitted, no whitespace."""
    return json.dumps(map_to_obj(sm), sort_keys=True, separators=(",", ":"))


def parse_point_set(obj: object) -> tuple[int, ...]:
    """Parse ``{"set": [...]}`` (or a bare list) into a strictly increasing tuple."""
    if isinstance(obj, dict):
        if set(obj) != {"set"}:
            raise ParseError("point-set object must have exactly the key 'set'")
        obj = obj["set"]
    if not isinstance(obj, list):
        raise ParseError("point set must be a list")
    for v in obj:
        _check_natural(v, "set element")
    if any(a >= b for a, b in zip(obj, obj[1:])):
        raise ParseError("set elements must be strictly increasing")
    return tuple(obj)


def parse_interval(obj: object) -> tuple[int, int]:
    """Parse ``{"interval": [lo, hi]}`` into a (lo, hi) pair with lo <= hi."""
    if isinstance(obj, dict):
        if set(obj) != {"interval"}:
            raise ParseError("interval object must have exactly the key 'interval'")
        obj = obj["interval"]
    if not isinstance(obj, list) or len(obj) != 2:
        raise ParseError("interval must be a two-element list")
    lo, hi = obj
    _check_natural(lo, "interval endpoint")
    _check_natural(hi, "interval endpoint")
    if lo > hi:
        raise ParseError(f"interval [{lo}, {hi}] is empty")
    return (lo, hi)
