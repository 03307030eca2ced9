"""Models for Følner ratios, averaging measures and boundary audits."""

from __future__ import annotations

from fractions import Fraction

from pydantic import Field

from pseudodyn.models.base import ExactScalar, PseudodynModel


class FolnerRow(PseudodynModel):
    """Boundary sizes of one set S_n at one radius r.

    Attributes:
        n: Index of the set in the sequence.
        r: Boundary radius.
        set_size: #S_n.
        boundary_size: #∂_r S_n.
        inner_size: #(S_n ∩ ∂_r S_n).
        graph_boundary_size: #∂S_n (points of S_n with an edge leaving it).
    """

    n: int
    r: int = Field(ge=1)
    set_size: int = Field(ge=1)
    boundary_size: int = Field(ge=0)
    inner_size: int = Field(ge=0)
    graph_boundary_size: int = Field(ge=0)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.boundary_size, self.set_size)

    @property
    def inner_ratio(self) -> Fraction:
        return Fraction(self.inner_size, self.set_size)

    @property
    def graph_ratio(self) -> Fraction:
        return Fraction(self.graph_boundary_size, self.set_size)


class FolnerReport(PseudodynModel):
    """Exact boundary ratios over a sequence of sets and radii."""

    rows: tuple[FolnerRow, ...] = ()

    def for_set(self, n: int) -> list[FolnerRow]:
        return [row for row in self.rows if row.n == n]


class InvarianceDefect(PseudodynModel):
    """|μ_n(f∘g) − μ_n(f)| against 2·sup|f|·#∂S_n/#S_n.

    Attributes:
        defect: The exact defect.
        bound: The exact bound.
        passed: defect <= bound.
    """

    defect: ExactScalar
    bound: ExactScalar
    passed: bool


class ACapSCheck(PseudodynModel):
    """The counting inequality #S <= #(S ∩ ∂_C S) + K·#(A ∩ S).

    Attributes:
        set_size: #S.
        boundary_part: #(S ∩ ∂_C S).
        net_part: #(A ∩ S).
        k: Largest number of points in an open C-ball.
        is_net: Whether A is a C-net in the graph (d(x, A) < C everywhere).
    """

    set_size: int
    boundary_part: int
    net_part: int
    k: int
    is_net: bool

    @property
    def holds(self) -> bool:
        return self.set_size <= self.boundary_part + self.k * self.net_part


class MeasureSample(PseudodynModel):
    """μ_n(f) for one set of the sequence."""

    n: int
    value: ExactScalar
    approx: str = ""


class MeasureSeries(PseudodynModel):
    """Averaging-measure values along a sequence of sets."""

    samples: tuple[MeasureSample, ...] = ()
    sup_norm: ExactScalar | None = None
