"""Piecewise-Möbius partial homeomorphisms of the line and circle.

A `PartialMap` is a finite list of pieces (interval, Möbius map), sorted and
pairwise disjoint, increasing on each piece, continuous across touching
pieces and globally injective. The family is closed under composition,
inversion, restriction and combination, which are all computed exactly.

On the circle R/Z, points are represented in [0, 1) and every piece maps
its interval into [0, 1); a rotation is therefore a two-piece translation.

Example:
    from pseudodyn.localmaps import Interval, MoebiusMap, PartialMap, compose

    t = PartialMap.line_map([(Interval.line(), MoebiusMap.translation(1))])
    compose(t, t).apply(0)  # Scalar(2)
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Any

from pseudodyn.exactnum import ExtScalar, Scalar
from pseudodyn.exceptions import (
    IntervalNotInDomainError,
    InvalidMapError,
    OutsideDomainError,
)
from pseudodyn.localmaps.intervals import DomainSet, Interval
from pseudodyn.localmaps.moebius import MoebiusMap

_ONE = Scalar(1)
_ZERO = Scalar(0)


class Space(str, Enum):
    """The phase space acted on."""

    LINE = "line"
    CIRCLE = "circle"


@dataclass(frozen=True, slots=True)
class Piece:
    """One Möbius piece of a partial map."""

    interval: Interval
    moebius: MoebiusMap

    def image(self) -> Interval:
        lo = self.moebius.limit(self.interval.lo, from_left=False)
        hi = self.moebius.limit(self.interval.hi, from_left=True)
        return Interval(lo, hi, self.interval.lo_open, self.interval.hi_open)

    def preimage(self, target: Interval) -> Interval | None:
        """Points of this piece's interval mapped into target."""
        image = self.image()
        inside = image.intersect(target)
        if inside is None:
            return None
        inverse = self.moebius.inverse()
        lo = inverse.limit(inside.lo, from_left=False)
        hi = inverse.limit(inside.hi, from_left=True)
        pulled = Interval.make(lo, hi, inside.lo_open, inside.hi_open)
        if pulled is None:
            return None
        return pulled.intersect(self.interval)


def _pole_ok(piece: Piece) -> bool:
    pole = piece.moebius.pole
    if pole is None:
        return True
    iv = piece.interval
    if iv.contains(pole):
        return False
    # a pole may sit on an open endpoint; the map then runs off to infinity
    return not (iv.lo < pole < iv.hi)


def _merge(pieces: list[Piece]) -> list[Piece]:
    out: list[Piece] = []
    for piece in pieces:
        if out:
            prev = out[-1]
            if prev.moebius == piece.moebius and prev.interval.touches(piece.interval):
                hull = Interval(
                    prev.interval.lo,
                    piece.interval.hi,
                    prev.interval.lo_open,
                    piece.interval.hi_open,
                )
                out[-1] = Piece(hull, piece.moebius)
                continue
        out.append(piece)
    return out


def _sorted_pieces(pieces: Iterable[Piece]) -> list[Piece]:
    items = list(pieces)
    items.sort(key=lambda p: (_SortKey(p.interval.lo), p.interval.lo_open))
    return items


class _SortKey:
    __slots__ = ("value",)

    def __init__(self, value: ExtScalar) -> None:
        self.value = value

    def __lt__(self, other: _SortKey) -> bool:
        return bool(self.value < other.value)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _SortKey) and self.value == other.value


class PartialMap:
    """An immutable piecewise-Möbius partial homeomorphism.

    Attributes:
        space: LINE or CIRCLE.
        pieces: Sorted, merged pieces.
    """

    __slots__ = ("space", "pieces", "_domain", "_image")

    def __init__(self, space: Space, pieces: Iterable[Piece], *, check: bool = True) -> None:
        self.space = Space(space)
        ordered = _merge(_sorted_pieces(pieces))
        self.pieces: tuple[Piece, ...] = tuple(ordered)
        self._domain: DomainSet | None = None
        self._image: DomainSet | None = None
        if check:
            self._validate()

    # -- construction ------------------------------------------------------

    @classmethod
    def line_map(cls, pieces: Sequence[tuple[Interval, MoebiusMap]]) -> PartialMap:
        return cls(Space.LINE, (Piece(i, m) for i, m in pieces))

    @classmethod
    def circle_map(cls, pieces: Sequence[tuple[Interval, MoebiusMap]]) -> PartialMap:
        return cls(Space.CIRCLE, (Piece(i, m) for i, m in pieces))

    @classmethod
    def identity(cls, space: Space, domain: DomainSet | None = None) -> PartialMap:
        if domain is None:
            domain = DomainSet.line() if Space(space) is Space.LINE else DomainSet.circle()
        return cls(space, (Piece(c, MoebiusMap.identity()) for c in domain))

    @classmethod
    def rotation(cls, alpha: Any) -> PartialMap:
        """Circle rotation x -> x + alpha mod 1 as a two-piece translation."""
        a = Scalar.coerce(alpha).frac()
        if a.sign() == 0:
            return cls.identity(Space.CIRCLE)
        cut = _ONE - a
        return cls.circle_map(
            [
                (Interval(_ZERO, cut, False, True), MoebiusMap.translation(a)),
                (Interval(cut, _ONE, False, True), MoebiusMap.translation(a - 1)),
            ]
        )

    @classmethod
    def empty(cls, space: Space) -> PartialMap:
        return cls(space, ())

    def _validate(self) -> None:
        prev: Piece | None = None
        for piece in self.pieces:
            if not _pole_ok(piece):
                raise InvalidMapError(f"pole of {piece.moebius} lies in {piece.interval}")
            if self.space is Space.CIRCLE:
                unit = Interval.unit()
                if not unit.contains_interval(piece.interval):
                    raise InvalidMapError(f"circle piece {piece.interval} leaves [0, 1)")
                if not unit.contains_interval(piece.image()):
                    raise InvalidMapError(f"circle piece image {piece.image()} leaves [0, 1)")
            if prev is not None:
                a, b = prev.interval, piece.interval
                if a.hi > b.lo or (a.hi == b.lo and not a.hi_open and not b.lo_open):
                    raise InvalidMapError(f"pieces {a} and {b} overlap")
                if a.hi == b.lo and a.touches(b):
                    left = prev.moebius.limit(a.hi, from_left=True)
                    right = piece.moebius.limit(b.lo, from_left=False)
                    wraps = self.space is Space.CIRCLE and left == _ONE and right == _ZERO
                    if left != right and not wraps:
                        raise InvalidMapError(f"discontinuity at {a.hi}: {left} != {right}")
            prev = piece
        images = sorted(
            (p.image() for p in self.pieces),
            key=lambda iv: (_SortKey(iv.lo), iv.lo_open),
        )
        for a, b in zip(images, images[1:], strict=False):
            if a.hi > b.lo or (a.hi == b.lo and not a.hi_open and not b.lo_open):
                raise InvalidMapError(f"map is not injective: images {a} and {b} overlap")

    # -- basic queries -----------------------------------------------------

    @property
    def domain(self) -> DomainSet:
        if self._domain is None:
            self._domain = DomainSet(p.interval for p in self.pieces)
        return self._domain

    @property
    def image(self) -> DomainSet:
        if self._image is None:
            self._image = DomainSet(p.image() for p in self.pieces)
        return self._image

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    def normalize_point(self, x: Any) -> Scalar:
        s = Scalar.coerce(x)
        if self.space is Space.CIRCLE and (s.sign() < 0 or s >= _ONE):
            return s.frac()
        return s

    def _locate(self, x: Scalar) -> int | None:
        lo, hi = 0, len(self.pieces)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.pieces[mid].interval.lo <= x:
                lo = mid + 1
            else:
                hi = mid
        for idx in (lo - 1, lo - 2):
            if 0 <= idx < len(self.pieces) and self.pieces[idx].interval.contains(x):
                return idx
        return None

    def defined_at(self, x: Any) -> bool:
        return self._locate(self.normalize_point(x)) is not None

    def apply(self, x: Any) -> Scalar:
        """Evaluate the map at x.

        Raises:
            OutsideDomainError: If x is not in the domain.
        """
        s = self.normalize_point(x)
        idx = self._locate(s)
        if idx is None:
            raise OutsideDomainError(s)
        return self.pieces[idx].moebius(s)

    __call__ = apply

    def try_apply(self, x: Scalar) -> Scalar | None:
        """Evaluate at x, returning None outside the domain."""
        if self.space is Space.CIRCLE and (x.sign() < 0 or x >= _ONE):
            x = x.frac()
        idx = self._locate(x)
        if idx is None:
            return None
        return self.pieces[idx].moebius(x)

    # -- one-sided pieces (germs) -----------------------------------------

    def right_piece(self, x: Scalar) -> Piece:
        """The piece governing [x, x + eta) for small eta."""
        idx = self._locate(x)
        if idx is not None:
            piece = self.pieces[idx]
            if piece.interval.hi != x:
                return piece
            nxt = idx + 1
            if nxt < len(self.pieces) and self.pieces[nxt].interval.lo == x:
                return self.pieces[nxt]
        raise OutsideDomainError(x)

    def left_piece(self, x: Scalar) -> Piece:
        """The piece governing (x - eta, x]; on the circle, 0 is approached from 1."""
        if self.space is Space.CIRCLE and (x.sign() == 0 or x == _ONE):
            for piece in self.pieces:
                if piece.interval.hi == _ONE:
                    return piece
            raise OutsideDomainError(x)
        idx = self._locate(x)
        if idx is not None:
            piece = self.pieces[idx]
            if piece.interval.lo != x:
                return piece
            prv = idx - 1
            if prv >= 0 and self.pieces[prv].interval.hi == x:
                return self.pieces[prv]
        raise OutsideDomainError(x)

    # -- equality ----------------------------------------------------------

    def agrees_with(self, other: PartialMap) -> bool:
        """True iff self and other are the same function (same domain, same values)."""
        if self.space is not other.space or self.domain != other.domain:
            return False
        for p in self.pieces:
            for q in other.pieces:
                common = p.interval.intersect(q.interval)
                if common is None:
                    continue
                if common.is_point:
                    if p.moebius(common.lo) != q.moebius(common.lo):  # type: ignore[arg-type]
                        return False
                elif p.moebius != q.moebius:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialMap):
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = "; ".join(f"{p.interval}: {p.moebius}" for p in self.pieces)
        return f"PartialMap[{self.space.value}]({body or '∅'})"

    def to_json(self) -> dict[str, Any]:
        return {
            "space": self.space.value,
            "pieces": [
                {**p.interval.to_json(), "moebius": p.moebius.to_json()}
                for p in self.pieces
            ],
        }


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def apply(f: PartialMap, x: Any) -> Scalar:
    """Evaluate f at x (raises OutsideDomainError outside dom f)."""
    return f.apply(x)


def compose(f: PartialMap, g: PartialMap) -> PartialMap:
    """f ∘ g on its maximal domain g^-1(dom f ∩ im g); may be empty."""
    if f.space is not g.space:
        raise InvalidMapError("cannot compose maps of different spaces")
    pieces: list[Piece] = []
    for gp in g.pieces:
        for fp in f.pieces:
            pulled = gp.preimage(fp.interval)
            if pulled is None:
                continue
            pieces.append(Piece(pulled, fp.moebius.compose(gp.moebius)))
    return PartialMap(f.space, pieces, check=False)


def invert(f: PartialMap) -> PartialMap:
    """Inverse map with domain im f."""
    return PartialMap(
        f.space,
        (Piece(p.image(), p.moebius.inverse()) for p in f.pieces),
        check=False,
    )


def restrict(f: PartialMap, domain: DomainSet | Interval) -> PartialMap:
    """f restricted to dom f ∩ domain."""
    target = DomainSet.of(domain) if isinstance(domain, Interval) else domain
    pieces: list[Piece] = []
    for p in f.pieces:
        for c in target:
            common = p.interval.intersect(c)
            if common is not None:
                pieces.append(Piece(common, p.moebius))
    return PartialMap(f.space, pieces, check=False)


def combine(f: PartialMap, g: PartialMap) -> PartialMap:
    """The union of f and g, which must agree wherever both are defined.

    Raises:
        InvalidMapError: If f and g disagree on the overlap or the union is
            not injective.
    """
    if f.space is not g.space:
        raise InvalidMapError("cannot combine maps of different spaces")
    overlap = f.domain & g.domain
    if not overlap.is_empty and not restrict(f, overlap).agrees_with(restrict(g, overlap)):
        raise InvalidMapError("maps disagree on the overlap of their domains")
    rest = restrict(g, g.domain - f.domain)
    return PartialMap(f.space, list(f.pieces) + list(rest.pieces))


@dataclass(frozen=True, slots=True)
class Germ:
    """The germ of a map at a point: its left and right Möbius pieces.

    ``left_value``/``right_value`` are the one-sided image values; on the
    circle a left value may be 1 (approached from below) and a right value
    lies in [0, 1).
    """

    space: Space
    point: Scalar
    left: MoebiusMap
    right: MoebiusMap
    left_value: Scalar
    right_value: Scalar

    @classmethod
    def identity(cls, space: Space, x: Scalar) -> Germ:
        ident = MoebiusMap.identity()
        left_anchor = _ONE if space is Space.CIRCLE and x.sign() == 0 else x
        return cls(space, x, ident, ident, left_anchor, x)

    @property
    def is_identity(self) -> bool:
        return self.left.is_identity and self.right.is_identity

    @property
    def value(self) -> Scalar:
        return self.right_value

    def then(self, f: PartialMap) -> Germ:
        """Germ of f ∘ (this germ's map)."""
        rp = f.right_piece(self.right_value)
        lp = f.left_piece(self.left_value)
        left_value = lp.moebius.limit(self.left_value, from_left=True)
        right_value = rp.moebius(self.right_value)
        assert isinstance(left_value, Scalar)
        return Germ(
            self.space,
            self.point,
            lp.moebius.compose(self.left),
            rp.moebius.compose(self.right),
            left_value,
            right_value,
        )

    def same_as(self, other: Germ) -> bool:
        return self.left == other.left and self.right == other.right


def germ_at(f: PartialMap, x: Any) -> Germ:
    """Germ of f at x.

    Raises:
        OutsideDomainError: If f is not defined on a neighbourhood of x.
    """
    s = f.normalize_point(x)
    return Germ.identity(f.space, s).then(f)


def germ_equal(f: PartialMap, g: PartialMap, x: Any) -> bool:
    """True iff f and g agree on a neighbourhood of x."""
    return germ_at(f, x).same_as(germ_at(g, x))


def is_identity_on(f: PartialMap, interval: Interval) -> bool:
    """True iff f is the identity on the interval.

    Raises:
        IntervalNotInDomainError: If the interval is not inside dom f.
    """
    if not f.domain.contains_interval(interval):
        raise IntervalNotInDomainError(interval)
    for p in f.pieces:
        common = p.interval.intersect(interval)
        if common is None:
            continue
        if common.is_point:
            point = common.lo
            assert isinstance(point, Scalar)
            if p.moebius(point) != point:
                return False
        elif not p.moebius.is_identity:
            return False
    return True

