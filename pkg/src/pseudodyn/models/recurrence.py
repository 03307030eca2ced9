"""Models for recurrence audits and the non-recurrent line example."""

from __future__ import annotations

from fractions import Fraction

from pydantic import Field, model_validator

from pseudodyn.exactnum import Scalar
from pseudodyn.exceptions import InvalidParametersError
from pseudodyn.models.base import ExactRational, ExactScalar, PseudodynModel


class HittingEntry(PseudodynModel):
    """Hitting distance of one seed to the window.

    Attributes:
        seed: The starting point.
        hit_distance: d_E(seed, U ∩ orbit), or None when no hit within rmax.
        hit_point: The first window point found by BFS.
        nu: Optional oracle value reported next to the BFS distance.
    """

    seed: ExactScalar
    hit_distance: int | None = None
    hit_point: ExactScalar | None = None
    nu: int | None = None


class RecurrenceProfile(PseudodynModel):
    """Per-seed hitting distances into a window.

    Attributes:
        window: Text form of the window U.
        rmax: Radius budget.
        entries: One entry per seed, in input order.
    """

    window: str
    rmax: int = Field(ge=0)
    entries: tuple[HittingEntry, ...] = ()

    @property
    def distances(self) -> list[int | None]:
        return [e.hit_distance for e in self.entries]

    @property
    def max_distance(self) -> int | None:
        """Largest hitting distance, or None if some seed never hit."""
        values = self.distances
        if any(v is None for v in values):
            return None
        return max((v for v in values if v is not None), default=0)


class Section6Params(PseudodynModel):
    """Parameters of the non-recurrent example on the line.

    The points satisfy a < a1 < a2 < b2 < b1 < b, where a1, a2 stand for
    a', a'' and b1, b2 for b', b''. ``lam`` is the multiplier of the
    hyperbolic map fixing a and b; ``left_shape``/``right_shape`` shape the
    Möbius tails of the conjugating map (default a1 - a and b - b1).

    Example:
        params = Section6Params.default()
    """

    a: ExactScalar
    a1: ExactScalar
    a2: ExactScalar
    b2: ExactScalar
    b1: ExactScalar
    b: ExactScalar
    lam: ExactRational = Fraction(3, 2)
    left_shape: ExactScalar | None = None
    right_shape: ExactScalar | None = None

    @model_validator(mode="after")
    def _check_order(self) -> Section6Params:
        chain = [self.a, self.a1, self.a2, self.b2, self.b1, self.b]
        if any(not x < y for x, y in zip(chain, chain[1:], strict=False)):
            raise InvalidParametersError("a < a' < a'' < b'' < b' < b")
        if self.lam <= 1:
            raise InvalidParametersError("lambda > 1")
        for shape in (self.left_shape, self.right_shape):
            if shape is not None and shape.sign() <= 0:
                raise InvalidParametersError("tail shape parameters > 0")
        return self

    @classmethod
    def default(cls) -> Section6Params:
        """a..b = 0, 1, 2, 3, 4, 5 and lambda = 3/2."""
        return cls(
            a=Scalar(0),
            a1=Scalar(1),
            a2=Scalar(2),
            b2=Scalar(3),
            b1=Scalar(4),
            b=Scalar(5),
        )


class BiLipschitzWitness(PseudodynModel):
    """A pair realizing a distance ratio."""

    x: ExactScalar
    z: ExactScalar
    d_first: int
    d_second: int

    @property
    def ratio(self) -> Fraction:
        if self.d_first == 0:
            return Fraction(1)
        hi, lo = max(self.d_first, self.d_second), min(self.d_first, self.d_second)
        return Fraction(hi, lo)


class BiLipschitzReport(PseudodynModel):
    """Empirical comparison constant between two word metrics.

    Attributes:
        constant: max over sampled pairs of max(d_E/d_E', d_E'/d_E).
        witness: A pair realizing the constant (None if no pair sampled).
        per_seed: The constant restricted to pairs based at each seed.
        pairs_checked: Number of sampled pairs.
    """

    constant: ExactRational = Fraction(1)
    witness: BiLipschitzWitness | None = None
    per_seed: tuple[ExactRational, ...] = ()
    pairs_checked: int = 0
