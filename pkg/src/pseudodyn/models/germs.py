"""Models for germ-group sampling."""

from __future__ import annotations

from pydantic import Field

from pseudodyn.models.base import ExactScalar, PseudodynModel


class StabilizerWitness(PseudodynModel):
    """A word fixing the sampled point.

    Attributes:
        word: The word, in application order.
        trivial: Whether its germ at the point is the identity germ.
    """

    word: tuple[str, ...] = Field(description="Labels in application order")
    trivial: bool = Field(description="True iff the germ is the identity germ")


class GermSample(PseudodynModel):
    """Result of enumerating stabilizing words at a point.

    Attributes:
        point: The sampled point.
        max_length: Word-length budget L.
        words_checked: Number of freely reduced words defined at the point.
        stabilizers: Every non-empty word fixing the point, with its verdict.
    """

    point: ExactScalar
    max_length: int = Field(ge=0)
    words_checked: int = Field(ge=0)
    stabilizers: tuple[StabilizerWitness, ...] = ()

    @property
    def nontrivial(self) -> tuple[StabilizerWitness, ...]:
        return tuple(w for w in self.stabilizers if not w.trivial)

    @property
    def trivial_up_to_length(self) -> bool:
        """True iff no sampled stabilizer has a non-trivial germ."""
        return not self.nontrivial
