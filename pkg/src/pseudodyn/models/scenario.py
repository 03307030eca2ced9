"""Schema models for scenario files.

Values are kept raw (strings, integers or {"p", "q"} objects) until the
scenario's field Q(sqrt(d)) is known; `pseudodyn.scenario` parses them.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

SCENARIO_SCHEMA = "pseudodyn.scenario/1"

RawValue = str | int | dict[str, Any]


class _SchemaModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)


class IntervalSpec(_SchemaModel):
    """An interval; ``[lo, hi]`` is shorthand for the open interval."""

    lo: RawValue
    hi: RawValue
    lo_open: bool = True
    hi_open: bool = True

    @model_validator(mode="before")
    @classmethod
    def _from_pair(cls, data: Any) -> Any:
        if isinstance(data, list | tuple):
            if len(data) != 2:
                raise ValueError("an interval pair needs exactly two endpoints")
            return {"lo": data[0], "hi": data[1]}
        return data


class PieceSpec(_SchemaModel):
    """One Möbius piece x -> (a x + b) / (c x + d) on an interval."""

    interval: IntervalSpec
    moebius: tuple[RawValue, RawValue, RawValue, RawValue]


class MapSpec(_SchemaModel):
    """A partial map given by exactly one of pieces, rotation or translation.

    Attributes:
        pieces: Explicit Möbius pieces.
        rotation: Circle rotation angle.
        translation: Line translation amount (whole line).
        restrict: Optional intervals the map is restricted to.
    """

    pieces: tuple[PieceSpec, ...] | None = None
    rotation: RawValue | None = None
    translation: RawValue | None = None
    restrict: tuple[IntervalSpec, ...] | None = None

    @model_validator(mode="after")
    def _one_form(self) -> MapSpec:
        given = [f for f in (self.pieces, self.rotation, self.translation) if f is not None]
        if len(given) != 1:
            raise ValueError("give exactly one of pieces, rotation, translation")
        return self


class GeneratorSpec(MapSpec):
    name: str = Field(min_length=1)
    inverse: str | None = Field(
        default=None, description="Name of the generator that is this one's inverse"
    )


class Section6Spec(_SchemaModel):
    """Parameters of the built-in non-recurrent example (defaults 0..5, 3/2)."""

    a: RawValue = 0
    a1: RawValue = 1
    a2: RawValue = 2
    b2: RawValue = 3
    b1: RawValue = 4
    b: RawValue = 5
    lam: RawValue = "3/2"
    left_shape: RawValue | None = None
    right_shape: RawValue | None = None


class ScenarioFile(_SchemaModel):
    """Top-level scenario document."""

    schema_id: str = Field(alias="schema")
    name: str
    description: str = ""
    d: int = 0
    space: Literal["line", "circle"] = "line"
    generators: tuple[GeneratorSpec, ...] = ()
    section6: Section6Spec | None = None
    bars: dict[str, MapSpec] = Field(default_factory=dict)
    window: tuple[IntervalSpec, ...] | None = None
    regions: dict[str, tuple[IntervalSpec, ...]] = Field(default_factory=dict)
    seeds: tuple[RawValue, ...] = ()

    @model_validator(mode="after")
    def _has_generators(self) -> ScenarioFile:
        if not self.generators and self.section6 is None:
            raise ValueError("a scenario needs generators or a section6 block")
        if self.generators and self.section6 is not None:
            raise ValueError("generators and section6 are exclusive")
        return self
