"""Models for equicontinuity, propagation and density audits."""

from __future__ import annotations

from pydantic import Field

from pseudodyn.models.base import ExactScalar, PseudodynModel


class ModulusRow(PseudodynModel):
    """Candidate δ(ε) for one ε.

    Attributes:
        eps: The ε value.
        delta: δ(ε) at the full length budget; None when no instance
            constrains it.
        by_length: δ(ε) computed with words of length <= 1, 2, ..., L.
        shrinking: δ(ε) strictly decreased at some length step.
    """

    eps: ExactScalar
    delta: ExactScalar | None = None
    by_length: tuple[ExactScalar | None, ...] = ()
    shrinking: bool = False


class ModulusTable(PseudodynModel):
    """Empirical equicontinuity modulus over composites of length <= L."""

    max_length: int = Field(ge=1)
    rows: tuple[ModulusRow, ...] = ()
    instances: int = 0

    @property
    def isometric(self) -> bool:
        """δ(ε) == ε for every row."""
        return all(row.delta == row.eps for row in self.rows)

    @property
    def monotone(self) -> bool:
        deltas = [row.delta for row in sorted(self.rows, key=lambda r: r.eps)]
        known = [d for d in deltas if d is not None]
        return all(a <= b for a, b in zip(known, known[1:], strict=False))


class ABViolation(PseudodynModel):
    """A word f with f(x) in A but f(y) outside B."""

    x: ExactScalar
    y: ExactScalar
    word: tuple[str, ...]
    fx: ExactScalar
    fy: ExactScalar


class ABReport(PseudodynModel):
    """Outcome of the A/B propagation check.

    Attributes:
        pairs_checked: Number of point pairs.
        words_checked: Number of (pair, word) instances.
        violations: Every violating instance.
        safe_separation: Largest separation of a violation-free pair below
            the smallest violating separation.
    """

    pairs_checked: int = 0
    words_checked: int = 0
    violations: tuple[ABViolation, ...] = ()
    safe_separation: ExactScalar | None = None

    @property
    def holds(self) -> bool:
        return not self.violations


class DensityResult(PseudodynModel):
    """Smallest radius at which the orbit ball is ε-dense in the region."""

    radius: int = Field(ge=0)
    largest_gap: ExactScalar
    points_in_region: int


class MinimalityWitness(PseudodynModel):
    """A word bringing x within ε of y, and how its inverse treats y.

    Attributes:
        word: Labels of w in application order.
        forward_distance: d(w(x), y) < ε.
        reverse_distance: d(w⁻¹(y), x), None if w⁻¹ is undefined at y.
    """

    word: tuple[str, ...]
    image: ExactScalar
    forward_distance: ExactScalar
    reverse_distance: ExactScalar | None = None


class QuasiEffectiveViolation(PseudodynModel):
    """A composite that is the identity on an open set but not on its whole domain."""

    word: tuple[str, ...]
    domain: str


class QuasiEffectiveReport(PseudodynModel):
    words_checked: int = 0
    violations: tuple[QuasiEffectiveViolation, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations
