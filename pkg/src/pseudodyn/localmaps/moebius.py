"""Orientation-preserving Möbius maps x -> (a*x + b) / (c*x + d) with exact coefficients."""

from __future__ import annotations

from typing import Any

from pseudodyn.exactnum import NEG_INF, POS_INF, ExtScalar, Infinity, Scalar
from pseudodyn.exceptions import InvalidMapError


class MoebiusMap:
    """An increasing fractional-linear map, stored projectively normalized.

    The coefficient vector is scaled so that d == 1 when d != 0, otherwise
    c == 1. Two maps are equal as functions iff their normalized
    coefficients are equal.
    """

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a: Any, b: Any, c: Any, d: Any) -> None:
        a_, b_, c_, d_ = (Scalar.coerce(v) for v in (a, b, c, d))
        if (a_ * d_ - b_ * c_).sign() <= 0:
            raise InvalidMapError(
                f"Möbius map ({a_}, {b_}, {c_}, {d_}) is not orientation-preserving"
            )
        pivot = d_ if d_.sign() != 0 else c_
        if pivot != 1:
            a_, b_, c_, d_ = a_ / pivot, b_ / pivot, c_ / pivot, d_ / pivot
        self.a, self.b, self.c, self.d = a_, b_, c_, d_
        self._hash: int | None = None

    @classmethod
    def identity(cls) -> MoebiusMap:
        return _IDENTITY

    @classmethod
    def translation(cls, t: Any) -> MoebiusMap:
        return cls(1, t, 0, 1)

    @classmethod
    def affine(cls, slope: Any, intercept: Any) -> MoebiusMap:
        return cls(slope, intercept, 0, 1)

    @property
    def is_identity(self) -> bool:
        return self == _IDENTITY

    @property
    def is_affine(self) -> bool:
        return self.c.sign() == 0

    @property
    def pole(self) -> Scalar | None:
        """The finite point sent to infinity, if any."""
        if self.c.sign() == 0:
            return None
        return -self.d / self.c

    def __call__(self, x: Scalar) -> Scalar:
        den = self.c * x + self.d
        if den.sign() == 0:
            raise ZeroDivisionError(f"{x} is the pole of {self}")
        return (self.a * x + self.b) / den

    def limit(self, x: ExtScalar, from_left: bool) -> ExtScalar:
        """Value at x, or one-sided limit at the pole and at ±infinity."""
        if isinstance(x, Infinity):
            if self.c.sign() == 0:
                # increasing affine map
                return POS_INF if x.direction > 0 else NEG_INF
            return self.a / self.c
        pole = self.pole
        if pole is not None and pole == x:
            return POS_INF if from_left else NEG_INF
        return self(x)

    def compose(self, other: MoebiusMap) -> MoebiusMap:
        """self ∘ other."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> MoebiusMap:
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.a, self.b, self.c, self.d))
        return self._hash

    def __repr__(self) -> str:
        if self.is_affine:
            if self.a == 1:
                return f"x + ({self.b})"
            return f"({self.a})x + ({self.b})"
        return f"(({self.a})x + ({self.b})) / (({self.c})x + ({self.d}))"

    def to_json(self) -> dict[str, Any]:
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
            "d": self.d.to_json(),
        }


_IDENTITY = MoebiusMap(1, 0, 0, 1)
