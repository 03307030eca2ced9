"""Intervals and finite unions of intervals with exact endpoints.

`DomainSet` supports a small set algebra through operators, in the same
fluent spirit as composing filters: ``a & b`` (intersection), ``a | b``
(union) and ``a - b`` (difference).

Example:
    from pseudodyn.localmaps import DomainSet, Interval

    u = DomainSet.of(Interval.open(0, 2))
    v = DomainSet.of(Interval.open(1, 3))
    (u & v).components  # (Interval.open(1, 2),)
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Any

from pseudodyn.exactnum import NEG_INF, POS_INF, ExtScalar, Infinity, Scalar


def _ext(value: Any) -> ExtScalar:
    if isinstance(value, (Scalar, Infinity)):
        return value
    return Scalar.coerce(value)


@dataclass(frozen=True, slots=True)
class Interval:
    """An interval of the extended line with open/closed flags per end.

    Either lo < hi, or lo == hi with both ends closed (a single point, used for
    transversal sections). Infinite endpoints are always open.
    """

    lo: ExtScalar
    hi: ExtScalar
    lo_open: bool = True
    hi_open: bool = True

    def __post_init__(self) -> None:
        if isinstance(self.lo, Infinity) and self.lo.direction > 0:
            raise ValueError("lower endpoint cannot be +inf")
        if isinstance(self.hi, Infinity) and self.hi.direction < 0:
            raise ValueError("upper endpoint cannot be -inf")
        if isinstance(self.lo, Infinity) and not self.lo_open:
            raise ValueError("infinite endpoints must be open")
        if isinstance(self.hi, Infinity) and not self.hi_open:
            raise ValueError("infinite endpoints must be open")
        if self.lo > self.hi:
            raise ValueError(f"empty interval: {self.lo} > {self.hi}")
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise ValueError("degenerate interval must be closed at both ends")

    # -- constructors ------------------------------------------------------

    @classmethod
    def open(cls, lo: Any, hi: Any) -> Interval:
        return cls(_ext(lo), _ext(hi), True, True)

    @classmethod
    def closed(cls, lo: Any, hi: Any) -> Interval:
        return cls(_ext(lo), _ext(hi), False, False)

    @classmethod
    def point(cls, x: Any) -> Interval:
        s = _ext(x)
        return cls(s, s, False, False)

    @classmethod
    def make(cls, lo: Any, hi: Any, lo_open: bool, hi_open: bool) -> Interval | None:
        """Build an interval, returning None when the flags describe an empty set."""
        lo_, hi_ = _ext(lo), _ext(hi)
        if isinstance(lo_, Infinity) and lo_.direction < 0:
            lo_open = True
        if isinstance(hi_, Infinity) and hi_.direction > 0:
            hi_open = True
        if lo_ > hi_:
            return None
        if lo_ == hi_ and (lo_open or hi_open or isinstance(lo_, Infinity)):
            return None
        return cls(lo_, hi_, lo_open, hi_open)

    @classmethod
    def line(cls) -> Interval:
        return cls(NEG_INF, POS_INF, True, True)

    @classmethod
    def unit(cls) -> Interval:
        """[0, 1): the circle's fundamental domain."""
        return cls(Scalar(0), Scalar(1), False, True)

    # -- predicates --------------------------------------------------------

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return isinstance(self.lo, Scalar) and isinstance(self.hi, Scalar)

    @property
    def is_open(self) -> bool:
        return self.lo_open and self.hi_open

    def contains(self, x: Any) -> bool:
        x = _ext(x)
        if self.lo_open:
            if not self.lo < x:
                return False
        elif not self.lo <= x:
            return False
        if self.hi_open:
            return bool(x < self.hi)
        return bool(x <= self.hi)

    __contains__ = contains

    def contains_interval(self, other: Interval) -> bool:
        """True iff other is a subset of self."""
        if other.lo < self.lo or (other.lo == self.lo and self.lo_open and not other.lo_open):
            return False
        return not (
            other.hi > self.hi
            or (other.hi == self.hi and self.hi_open and not other.hi_open)
        )

    def contains_closure_strictly(self, other: Interval) -> bool:
        """True iff the closure of the bounded interval other lies in self."""
        if not other.is_bounded:
            return False
        lo_ok = self.lo < other.lo or (self.lo == other.lo and not self.lo_open)
        hi_ok = other.hi < self.hi or (other.hi == self.hi and not self.hi_open)
        return lo_ok and hi_ok

    def intersect(self, other: Interval) -> Interval | None:
        if self.lo > other.lo:
            lo, lo_open = self.lo, self.lo_open
        elif other.lo > self.lo:
            lo, lo_open = other.lo, other.lo_open
        else:
            lo, lo_open = self.lo, self.lo_open or other.lo_open
        if self.hi < other.hi:
            hi, hi_open = self.hi, self.hi_open
        elif other.hi < self.hi:
            hi, hi_open = other.hi, other.hi_open
        else:
            hi, hi_open = self.hi, self.hi_open or other.hi_open
        return Interval.make(lo, hi, lo_open, hi_open)

    def touches(self, other: Interval) -> bool:
        """True iff self and other (self first) overlap or meet without a gap."""
        if self.hi > other.lo:
            return True
        if self.hi == other.lo:
            return not (self.hi_open and other.lo_open)
        return False

    def length(self) -> ExtScalar:
        if not self.is_bounded:
            return POS_INF
        return self.hi - self.lo  # type: ignore[operator]

    def sort_key(self) -> tuple[ExtScalar, bool]:
        return (self.lo, self.lo_open)

    def __repr__(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo}, {self.hi}{right}"

    def to_json(self) -> dict[str, Any]:
        def end(v: ExtScalar) -> Any:
            return repr(v) if isinstance(v, Infinity) else v.to_json()

        return {
            "lo": end(self.lo),
            "hi": end(self.hi),
            "lo_open": self.lo_open,
            "hi_open": self.hi_open,
        }


def _lo_before(a: Interval, b: Interval) -> bool:
    if a.lo < b.lo:
        return True
    if a.lo > b.lo:
        return False
    return (not a.lo_open) and b.lo_open


def _sort_intervals(items: Iterable[Interval]) -> list[Interval]:
    out: list[Interval] = []
    for item in items:
        i = len(out)
        while i > 0 and _lo_before(item, out[i - 1]):
            i -= 1
        out.insert(i, item)
    return out


def _hull(a: Interval, b: Interval) -> Interval:
    if a.lo < b.lo or (a.lo == b.lo and not a.lo_open):
        lo, lo_open = a.lo, a.lo_open
    else:
        lo, lo_open = b.lo, b.lo_open
    if a.hi > b.hi or (a.hi == b.hi and not a.hi_open):
        hi, hi_open = a.hi, a.hi_open
    else:
        hi, hi_open = b.hi, b.hi_open
    return Interval(lo, hi, lo_open, hi_open)


class DomainSet:
    """A finite union of pairwise-disjoint, non-mergeable intervals, sorted by lo."""

    __slots__ = ("_components",)

    def __init__(self, intervals: Iterable[Interval] = ()) -> None:
        merged: list[Interval] = []
        for item in _sort_intervals(intervals):
            if merged and merged[-1].touches(item):
                merged[-1] = _hull(merged[-1], item)
            else:
                merged.append(item)
        self._components: tuple[Interval, ...] = tuple(merged)

    @classmethod
    def of(cls, *intervals: Interval) -> DomainSet:
        return cls(intervals)

    @classmethod
    def empty(cls) -> DomainSet:
        return cls(())

    @classmethod
    def line(cls) -> DomainSet:
        return cls((Interval.line(),))

    @classmethod
    def circle(cls) -> DomainSet:
        return cls((Interval.unit(),))

    @property
    def components(self) -> tuple[Interval, ...]:
        return self._components

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._components)

    def __len__(self) -> int:
        return len(self._components)

    @property
    def is_empty(self) -> bool:
        return not self._components

    @property
    def is_open(self) -> bool:
        return all(c.is_open for c in self._components)

    @property
    def is_bounded(self) -> bool:
        return all(c.is_bounded for c in self._components)

    def contains(self, x: Any) -> bool:
        return any(c.contains(x) for c in self._components)

    __contains__ = contains

    def component_of(self, x: Any) -> Interval | None:
        for c in self._components:
            if c.contains(x):
                return c
        return None

    def contains_interval(self, interval: Interval) -> bool:
        return any(c.contains_interval(interval) for c in self._components)

    def contains_set(self, other: DomainSet) -> bool:
        return all(self.contains_interval(c) for c in other)

    def contains_closure_of(self, other: DomainSet) -> bool:
        """True iff other is bounded and its closure lies in self."""
        return all(
            any(mine.contains_closure_strictly(c) for mine in self._components)
            for c in other
        )

    def __and__(self, other: DomainSet) -> DomainSet:
        pieces = []
        for a in self._components:
            for b in other._components:
                c = a.intersect(b)
                if c is not None:
                    pieces.append(c)
        return DomainSet(pieces)

    def __or__(self, other: DomainSet) -> DomainSet:
        return DomainSet(self._components + other._components)

    def __sub__(self, other: DomainSet) -> DomainSet:
        current = list(self._components)
        for b in other._components:
            nxt: list[Interval] = []
            below = Interval.make(NEG_INF, b.lo, True, not b.lo_open)
            above = Interval.make(b.hi, POS_INF, not b.hi_open, True)
            for a in current:
                for side in (below, above):
                    if side is None:
                        continue
                    cut = side.intersect(a)
                    if cut is not None:
                        nxt.append(cut)
            current = nxt
        return DomainSet(current)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DomainSet):
            return NotImplemented
        return self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    def __repr__(self) -> str:
        if not self._components:
            return "DomainSet(∅)"
        return "DomainSet(" + " ∪ ".join(repr(c) for c in self._components) + ")"

    def to_json(self) -> list[dict[str, Any]]:
        return [c.to_json() for c in self._components]
