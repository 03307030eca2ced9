"""Exact arithmetic in a real quadratic field Q(sqrt(d)), extended by ±infinity.

A `Scalar` is the exact number p + q*sqrt(d) with rational p, q and a
square-free discriminant d. All comparisons are decided exactly by the sign
test on p + q*sqrt(d); floating point never enters a decision. `approx` turns a
scalar into a decimal string for reports and plots only.

Rationals (q = 0) are field-agnostic and mix freely with any field. Combining
two irrational scalars from different fields raises `FieldMismatchError`.

Example:
    from pseudodyn.exactnum import QuadraticField, compare, approx

    K = QuadraticField(2)
    alpha = K.make(-1, 1)          # sqrt(2) - 1
    compare(alpha, K.make("1/2"))  # Ordering.LESS
    approx(alpha, 20)              # '0.414213...'
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Any, TypeAlias

from pseudodyn.exceptions import FieldMismatchError

Rational: TypeAlias = Fraction | int
RationalLike: TypeAlias = Fraction | int | str


class Ordering(Enum):
    """Result of an exact three-way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def _to_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def _square_free_part(d: int) -> tuple[int, int]:
    """Split d = k**2 * r with r square-free; returns (k, r)."""
    if d < 0:
        raise ValueError("discriminant must be non-negative")
    if d in (0, 1):
        return (1, d)
    k, r = 1, d
    f = 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            k *= f
        f += 1
    return (k, r)


def _sign_pq(p: Fraction, q: Fraction, d: int) -> int:
    """Exact sign of p + q*sqrt(d)."""
    if q == 0 or d == 0:
        return (p > 0) - (p < 0)
    if p >= 0 and q > 0:
        return 1
    if p <= 0 and q < 0:
        return -1
    # opposite signs: compare p**2 with q**2 * d
    lhs = p * p
    rhs = q * q * d
    if p > 0:
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


class Scalar:
    """Immutable exact element p + q*sqrt(d) of a real quadratic field.

    Instances are in canonical form: p and q are reduced fractions, d is
    square-free, and q == 0 forces d == 0. Equality is componentwise.
    """

    __slots__ = ("_p", "_q", "_d", "_hash")

    def __init__(self, p: RationalLike = 0, q: RationalLike = 0, d: int = 0) -> None:
        fp = _to_fraction(p)
        fq = _to_fraction(q)
        k, r = _square_free_part(d)
        fq *= k
        if r == 1:
            fp, fq, r = fp + fq, Fraction(0), 0
        if fq == 0 or r == 0:
            fq, r = Fraction(0), 0
        self._p = fp
        self._q = fq
        self._d = r
        self._hash: int | None = None

    @staticmethod
    def _make(p: Fraction, q: Fraction, d: int) -> Scalar:
        """Construct from parts already known to be canonical except for q == 0."""
        obj = object.__new__(Scalar)
        if q == 0:
            d = 0
        obj._p = p
        obj._q = q if d else Fraction(0)
        obj._d = d
        obj._hash = None
        return obj

    # -- accessors ---------------------------------------------------------

    @property
    def p(self) -> Fraction:
        """Rational part."""
        return self._p

    @property
    def q(self) -> Fraction:
        """Coefficient of sqrt(d)."""
        return self._q

    @property
    def d(self) -> int:
        """Square-free discriminant (0 for rationals)."""
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._q == 0

    @property
    def is_integer(self) -> bool:
        return self._q == 0 and self._p.denominator == 1

    def sign(self) -> int:
        """Exact sign: -1, 0 or 1."""
        return _sign_pq(self._p, self._q, self._d)

    # -- coercion ----------------------------------------------------------

    @staticmethod
    def coerce(value: Any) -> Scalar:
        """Convert ints, Fractions and rational strings to a Scalar."""
        if isinstance(value, Scalar):
            return value
        return Scalar(_to_fraction(value))

    def _field_with(self, other: Scalar) -> int:
        if self._d == 0:
            return other._d
        if other._d == 0 or other._d == self._d:
            return self._d
        raise FieldMismatchError(self._d, other._d)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Any) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        d = self._field_with(o)
        return Scalar._make(self._p + o._p, self._q + o._q, d)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._make(-self._p, -self._q, self._d)

    def __sub__(self, other: Any) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other: Any) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return Scalar.coerce(other) - self

    def __mul__(self, other: Any) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        d = self._field_with(o)
        p = self._p * o._p + self._q * o._q * d
        q = self._p * o._q + self._q * o._p
        return Scalar._make(p, q, d)

    __rmul__ = __mul__

    def conjugate(self) -> Scalar:
        """Galois conjugate p - q*sqrt(d)."""
        return Scalar(self._p, -self._q, self._d)

    def norm(self) -> Fraction:
        """Field norm p**2 - q**2 * d (rational)."""
        return self._p * self._p - self._q * self._q * self._d

    def inverse(self) -> Scalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar._make(self._p / n, -self._q / n, self._d)

    def __truediv__(self, other: Any) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        o = Scalar.coerce(other)
        self._field_with(o)
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> Scalar:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return Scalar.coerce(other) / self

    def __abs__(self) -> Scalar:
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        """Exact floor."""
        if self._q == 0:
            return math.floor(self._p)
        guess = math.floor(_approx_fraction(self, 16))
        while compare(Scalar(guess), self) is Ordering.GREATER:
            guess -= 1
        while compare(Scalar(guess + 1), self) is not Ordering.GREATER:
            guess += 1
        return guess

    def frac(self) -> Scalar:
        """Fractional part in [0, 1); the circle representative."""
        return self - self.floor()

    # -- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._p == other._p and self._q == other._q and self._d == other._d
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._q == 0 and self._p == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._p) if self._q == 0 else hash((self._p, self._q, self._d))
        return self._hash

    def _cmp(self, other: Any) -> int | None:
        if isinstance(other, Infinity):
            return -other.direction
        if not isinstance(other, (Scalar, int, Fraction)):
            return None
        return compare(self, Scalar.coerce(other)).value

    def __lt__(self, other: Any) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0  # type: ignore[return-value]

    def __le__(self, other: Any) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0  # type: ignore[return-value]

    def __gt__(self, other: Any) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0  # type: ignore[return-value]

    def __ge__(self, other: Any) -> bool:
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0  # type: ignore[return-value]

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        if self._q == 0:
            return f"Scalar({self._p})"
        return f"Scalar({self._p}, {self._q}, d={self._d})"

    def __str__(self) -> str:
        if self._q == 0:
            return str(self._p)
        q = self._q
        root = f"sqrt({self._d})"
        q_text = root if q == 1 else f"-{root}" if q == -1 else f"{q}*{root}"
        if self._p == 0:
            return q_text
        sign = "-" if q < 0 else "+"
        q_abs = abs(q)
        tail = root if q_abs == 1 else f"{q_abs}*{root}"
        return f"{self._p} {sign} {tail}"

    def to_json(self) -> dict[str, str]:
        """Scenario-file representation {"p": "num/den", "q": "num/den"}."""
        return {"p": str(self._p), "q": str(self._q)}


class Infinity:
    """One of the two ideal endpoints of the extended line."""

    __slots__ = ("direction",)

    def __init__(self, direction: int) -> None:
        self.direction = 1 if direction > 0 else -1

    def __neg__(self) -> Infinity:
        return NEG_INF if self.direction > 0 else POS_INF

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Infinity) and other.direction == self.direction

    def __hash__(self) -> int:
        return hash(("inf", self.direction))

    def _cmp(self, other: Any) -> int:
        if isinstance(other, Infinity):
            return (self.direction > other.direction) - (self.direction < other.direction)
        return self.direction

    def __lt__(self, other: Any) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: Any) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: Any) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: Any) -> bool:
        return self._cmp(other) >= 0

    def __repr__(self) -> str:
        return "+inf" if self.direction > 0 else "-inf"

    __str__ = __repr__


POS_INF = Infinity(1)
NEG_INF = Infinity(-1)

ExtScalar: TypeAlias = Scalar | Infinity
ZERO = Scalar(0)
ONE = Scalar(1)


class QuadraticField:
    """The scenario-wide field Q(sqrt(d)).

    Attributes:
        d: Square-free discriminant; 0 means plain rationals.
    """

    def __init__(self, d: int = 0) -> None:
        k, r = _square_free_part(d)
        if k != 1 or r == 1:
            raise ValueError(f"discriminant {d} is not square-free")
        self.d = r

    def make(self, p: RationalLike = 0, q: RationalLike = 0) -> Scalar:
        """Return the canonical scalar p + q*sqrt(d) of this field."""
        return Scalar(p, q, self.d)

    @property
    def generator(self) -> Scalar:
        """sqrt(d)."""
        return Scalar(0, 1, self.d)

    def parse(self, raw: Any) -> ExtScalar:
        """Parse a scenario value: {"p", "q"}, a rational string/int, or ±inf."""
        if isinstance(raw, Scalar):
            return raw
        if isinstance(raw, str) and raw.strip().lower() in ("inf", "+inf", "-inf"):
            return NEG_INF if raw.strip().startswith("-") else POS_INF
        if isinstance(raw, dict):
            return self.make(raw.get("p", 0), raw.get("q", 0))
        return self.make(raw)

    def __repr__(self) -> str:
        return f"QuadraticField({self.d})"


def make_scalar(p: RationalLike, q: RationalLike = 0, *, d: int = 0) -> Scalar:
    """Build the canonical scalar p + q*sqrt(d).

    Example:
        make_scalar("2/4", "2/6", d=2)  # (1/2) + (1/3)*sqrt(2)
    """
    return Scalar(p, q, d)


def compare(a: Scalar, b: Scalar) -> Ordering:
    """Exact three-way comparison of two scalars of the same field."""
    a_, b_ = Scalar.coerce(a), Scalar.coerce(b)
    d = a_._field_with(b_)
    s = _sign_pq(a_.p - b_.p, a_.q - b_.q, d)
    return Ordering(s)


def ext_min(*values: ExtScalar) -> ExtScalar:
    return min(values)  # type: ignore[type-var]


def ext_max(*values: ExtScalar) -> ExtScalar:
    return max(values)  # type: ignore[type-var]


def _approx_fraction(a: Scalar, bits: int) -> Fraction:
    """Rational within 2**-bits of a (truncated toward the rational part)."""
    if a.q == 0:
        return a.p
    scale = 1 << bits
    radicand = a.q * a.q * a.d * scale * scale
    root = math.isqrt(radicand.numerator // radicand.denominator)
    term = Fraction(root, scale)
    return a.p + term if a.q > 0 else a.p - term


def approx(a: Scalar | Infinity, bits: int = 40) -> str:
    """Decimal string within 2**-bits of a; for output emission only.

    Example:
        approx(Scalar("1/2"), 10)  # '0.5000'
    """
    if bits < 1:
        raise ValueError("bits must be >= 1")
    if isinstance(a, Infinity):
        return "inf" if a.direction > 0 else "-inf"
    if a.sign() == 0:
        return "0"
    digits = max(1, math.ceil(bits * math.log10(2)))
    value = _approx_fraction(a, bits + 4)
    scaled = round(value * 10**digits)
    negative = scaled < 0
    whole, part = divmod(abs(scaled), 10**digits)
    text = f"{whole}.{part:0{digits}d}"
    return f"-{text}" if negative else text


def to_float(a: Scalar) -> float:
    """Float value for plotting; never used in decisions."""
    return float(_approx_fraction(a, 60))
