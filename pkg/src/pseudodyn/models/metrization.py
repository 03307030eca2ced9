"""Models for metric patch atlases and the glued metric."""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import cached_property
from typing import Any, Literal

from pydantic import ConfigDict, Field, model_validator

from pseudodyn.models.base import ExactRational, PseudodynModel

logger = logging.getLogger(__name__)

ATLAS_SCHEMA = "pseudodyn.atlas/1"

GlueMode = Literal["local", "quasilocal"]


class MetricPatch(PseudodynModel):
    """One patch (Uₐ, Dₐ) with its shrinking U′ₐ.

    Attributes:
        name: Patch name.
        members: Points of Uₐ, in table order.
        shrink: Points of U′ₐ (a subset of members).
        table: Square distance table Dₐ aligned with members.
    """

    name: str = Field(description="Patch name")
    members: tuple[str, ...] = Field(description="Points of the patch")
    shrink: tuple[str, ...] = Field(description="Points of the shrinking")
    table: tuple[tuple[ExactRational, ...], ...] = Field(
        description="Symmetric distance table aligned with members"
    )

    @model_validator(mode="after")
    def _check_metric(self) -> MetricPatch:
        n = len(self.members)
        if len(set(self.members)) != n:
            raise ValueError(f"patch {self.name!r} lists a point twice")
        if not set(self.shrink) <= set(self.members):
            raise ValueError(f"shrinking of patch {self.name!r} is not inside the patch")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError(f"table of patch {self.name!r} is not {n}x{n}")
        t = self.table
        for i in range(n):
            if t[i][i] != 0:
                raise ValueError(f"patch {self.name!r}: non-zero diagonal")
            for j in range(i + 1, n):
                if t[i][j] != t[j][i]:
                    raise ValueError(f"patch {self.name!r}: table is not symmetric")
                if t[i][j] <= 0:
                    raise ValueError(f"patch {self.name!r}: non-positive distance")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if t[i][k] > t[i][j] + t[j][k]:
                        raise ValueError(
                            f"patch {self.name!r}: triangle inequality fails at "
                            f"({self.members[i]}, {self.members[j]}, {self.members[k]})"
                        )
        return self

    @cached_property
    def index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.members)}

    def __contains__(self, point: object) -> bool:
        return point in self.index

    def in_shrink(self, point: str) -> bool:
        return point in self.shrink

    def distance(self, x: str, y: str) -> Fraction:
        return self.table[self.index[x]][self.index[y]]

    @property
    def diameter(self) -> Fraction:
        return max((v for row in self.table for v in row), default=Fraction(0))

    def escape_distance(self, x: str) -> Fraction | None:
        """Dₐ(x, Uₐ \\ U′ₐ), or None when the shrinking is the whole patch."""
        outside = [p for p in self.members if p not in self.shrink]
        if not outside:
            return None
        return min(self.distance(x, p) for p in outside)

    def scaled(self, factor: Fraction) -> MetricPatch:
        return self.model_copy(
            update={"table": tuple(tuple(v * factor for v in row) for row in self.table)}
        )


class MetricPatchAtlas(PseudodynModel):
    """A finite sampled atlas of metric patches over a point universe.

    Example:
        atlas = MetricPatchAtlas.from_json_dict(json.loads(text))
        glued = glue_metric(atlas, "local")
    """

    schema_id: str = Field(default=ATLAS_SCHEMA, alias="schema")
    points: tuple[str, ...] = Field(description="The point universe")
    patches: tuple[MetricPatch, ...] = Field(description="Metric patches")

    model_config = ConfigDict(populate_by_name=True)

    @model_validator(mode="after")
    def _check_cover(self) -> MetricPatchAtlas:
        universe = set(self.points)
        if len(universe) != len(self.points):
            raise ValueError("the point universe lists a point twice")
        names = [p.name for p in self.patches]
        if len(set(names)) != len(names):
            raise ValueError("duplicate patch name")
        for patch in self.patches:
            stray = set(patch.members) - universe
            if stray:
                raise ValueError(f"patch {patch.name!r} uses unknown points {sorted(stray)}")
        covered = {p for patch in self.patches for p in patch.shrink}
        missing = [p for p in self.points if p not in covered]
        if missing:
            raise ValueError(f"points {missing} lie in no shrinking")
        return self

    @classmethod
    def from_json_dict(cls, data: dict[str, Any]) -> MetricPatchAtlas:
        """Validate an atlas read from JSON."""
        return cls.model_validate(data)

    def patch(self, name: str) -> MetricPatch:
        for p in self.patches:
            if p.name == name:
                return p
        raise KeyError(name)

    @property
    def max_diameter(self) -> Fraction:
        return max((p.diameter for p in self.patches), default=Fraction(0))

    def scaled(self, factor: Fraction) -> MetricPatchAtlas:
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return self.model_copy(update={"patches": tuple(p.scaled(factor) for p in self.patches)})

    def normalization_factor(self) -> Fraction:
        """1 when every diameter is < 1, else the factor bringing the largest to 1/2."""
        top = self.max_diameter
        return Fraction(1) if top < 1 else Fraction(1, 2) / top

    def normalized(self) -> MetricPatchAtlas:
        """The atlas scaled so that every patch diameter is < 1."""
        factor = self.normalization_factor()
        if factor == 1:
            return self
        logger.info("Normalizing atlas tables by %s", factor)
        return self.scaled(factor)


class AdmissiblePair(PseudodynModel):
    """A pair in some U′ₐ contained in every Uᵦ whose shrinking it meets."""

    z1: str
    z2: str
    witness: str


class GluedMetric(PseudodynModel):
    """The glued distance table.

    Attributes:
        mode: "local" or "quasilocal".
        points: Row and column order.
        table: D, capped at 1.
        scale: Factor applied to the atlas tables before gluing.
        chainless: Pairs with no admissible chain (D = 1).
    """

    mode: GlueMode
    points: tuple[str, ...]
    table: tuple[tuple[ExactRational, ...], ...]
    scale: ExactRational = Fraction(1)
    chainless: tuple[tuple[str, str], ...] = ()

    @cached_property
    def index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.points)}

    def d(self, x: str, y: str) -> Fraction:
        return self.table[self.index[x]][self.index[y]]

    def as_dict(self) -> dict[tuple[str, str], Fraction]:
        return {(x, y): self.d(x, y) for x in self.points for y in self.points}


class LowerBoundViolation(PseudodynModel):
    patch: str
    x: str
    y: str
    glued: ExactRational
    bound: ExactRational


class LowerBoundReport(PseudodynModel):
    checked: int = 0
    violations: tuple[LowerBoundViolation, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations


class AgreementEntry(PseudodynModel):
    """Largest sampled radius around a point on which D equals one patch table.

    Attributes:
        point: The centre z.
        patch: The witnessing patch a₀ (z in its shrinking).
        radius: D agrees with Dₐ₀ on the open D-ball of this radius; None
            when it agrees on every sampled ball.
        escape: Dₐ₀(z, Uₐ₀ \\ U′ₐ₀), None when that set is empty.
    """

    point: str
    patch: str
    radius: ExactRational | None = None
    escape: ExactRational | None = None

    @property
    def meets_half_escape(self) -> bool:
        if self.radius is None or self.escape is None:
            return True
        return self.radius >= self.escape / 2


class AgreementReport(PseudodynModel):
    entries: tuple[AgreementEntry, ...] = ()

    def for_point(self, point: str) -> AgreementEntry:
        for e in self.entries:
            if e.point == point:
                return e
        raise KeyError(point)


class MetricAxiomReport(PseudodynModel):
    """Exact metric-axiom audit; ``witness`` names the first failure."""

    zero_diagonal: bool = True
    symmetric: bool = True
    positive: bool = True
    triangle: bool = True
    witness: tuple[str, ...] = ()

    @property
    def is_metric(self) -> bool:
        return self.zero_diagonal and self.symmetric and self.positive and self.triangle


class ModulusViolation(PseudodynModel):
    patch: str
    x: str
    y: str
    eps: ExactRational
    delta: ExactRational
    patch_distance: ExactRational
    sup_distance: ExactRational


class ModulusCheck(PseudodynModel):
    checked: int = 0
    violations: tuple[ModulusViolation, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations
