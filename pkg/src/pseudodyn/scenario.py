"""Scenario and atlas ingestion.

A scenario file names a field Q(sqrt(d)), a space, and either explicit
generators or the built-in non-recurrent example. Parsing happens in two
stages: the JSON document is validated against `ScenarioFile` (failures are
`ScenarioParseError` with a field path or line), then the generator system
is built (failures are `ScenarioValidationError` naming the invariant).

Example:
    scenario = parse_scenario("rotation.json")
    ball = orbit_ball(scenario.system, scenario.seeds[0], 10)
"""

from __future__ import annotations

import json
import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from pseudodyn.exactnum import ExtScalar, QuadraticField, Scalar
from pseudodyn.exceptions import (
    InvalidMapError,
    InvalidParametersError,
    ScenarioParseError,
    ScenarioValidationError,
)
from pseudodyn.localmaps import (
    DomainSet,
    GeneratorSystem,
    Interval,
    MoebiusMap,
    PartialMap,
    Space,
    restrict,
)
from pseudodyn.models.metrization import ATLAS_SCHEMA, MetricPatchAtlas
from pseudodyn.models.recurrence import Section6Params
from pseudodyn.models.scenario import (
    SCENARIO_SCHEMA,
    IntervalSpec,
    MapSpec,
    ScenarioFile,
    Section6Spec,
)
from pseudodyn.recurrence import Section6Example, build_section6_example

logger = logging.getLogger(__name__)

BUNDLED_PACKAGE = "pseudodyn.scenarios"


@dataclass(frozen=True)
class Scenario:
    """A validated scenario.

    Attributes:
        name: Scenario name.
        number_field: The scalar field Q(sqrt(d)).
        space: LINE or CIRCLE.
        system: The symmetric generator system.
        regions: Named domain sets (the window is also available as "window").
        seeds: Seed points.
        section6: The assembled example when the scenario is built from one.
        source: Where the scenario was read from.
    """

    name: str
    number_field: QuadraticField
    space: Space
    system: GeneratorSystem
    regions: Mapping[str, DomainSet] = field(default_factory=dict)
    seeds: tuple[Scalar, ...] = ()
    section6: Section6Example | None = None
    source: str = "<memory>"

    @property
    def window(self) -> DomainSet:
        return self.system.window

    def region(self, name: str) -> DomainSet:
        if name == "window":
            return self.window
        try:
            return self.regions[name]
        except KeyError:
            raise ScenarioValidationError(
                "names-resolve", f"unknown region {name!r}"
            ) from None


# ---------------------------------------------------------------------------
# value and map builders
# ---------------------------------------------------------------------------


def _value(qf: QuadraticField, raw: Any, where: str) -> ExtScalar:
    try:
        return qf.parse(raw)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ScenarioValidationError("values-parse", f"{where}: {exc}") from exc


def _finite(qf: QuadraticField, raw: Any, where: str) -> Scalar:
    value = _value(qf, raw, where)
    if not isinstance(value, Scalar):
        raise ScenarioValidationError("values-parse", f"{where}: expected a finite value")
    return value


def _interval(qf: QuadraticField, spec: IntervalSpec, where: str) -> Interval:
    try:
        return Interval(
            _value(qf, spec.lo, where),
            _value(qf, spec.hi, where),
            spec.lo_open,
            spec.hi_open,
        )
    except ValueError as exc:
        raise ScenarioValidationError("intervals-valid", f"{where}: {exc}") from exc


def _domain(qf: QuadraticField, specs: Sequence[IntervalSpec], where: str) -> DomainSet:
    return DomainSet(_interval(qf, s, f"{where}[{i}]") for i, s in enumerate(specs))


def _build_map(qf: QuadraticField, space: Space, spec: MapSpec, where: str) -> PartialMap:
    try:
        if spec.rotation is not None:
            if space is not Space.CIRCLE:
                raise InvalidMapError("rotations act on the circle")
            f = PartialMap.rotation(_finite(qf, spec.rotation, where))
        elif spec.translation is not None:
            if space is not Space.LINE:
                raise InvalidMapError("translations act on the line")
            shift = MoebiusMap.translation(_finite(qf, spec.translation, where))
            f = PartialMap.line_map([(Interval.line(), shift)])
        else:
            pieces = []
            for i, piece in enumerate(spec.pieces or ()):
                coeffs = [_finite(qf, c, f"{where}.pieces[{i}]") for c in piece.moebius]
                interval = _interval(qf, piece.interval, f"{where}.pieces[{i}]")
                pieces.append((interval, MoebiusMap(*coeffs)))
            if not pieces:
                raise InvalidMapError("a map needs at least one piece")
            if space is Space.LINE:
                f = PartialMap.line_map(pieces)
            else:
                f = PartialMap.circle_map(pieces)
        if spec.restrict is not None:
            f = restrict(f, _domain(qf, spec.restrict, f"{where}.restrict"))
    except (InvalidMapError, ValueError) as exc:
        raise ScenarioValidationError("generator-valid", f"{where}: {exc}") from exc
    return f


def _section6_params(qf: QuadraticField, spec: Section6Spec) -> Section6Params:
    lam = spec.lam
    try:
        lam_value = Fraction(lam) if isinstance(lam, int | str) else None
    except ValueError:
        lam_value = None
    if lam_value is None:
        raise ScenarioValidationError("values-parse", "section6.lam must be rational")

    def opt(raw: Any, name: str) -> Scalar | None:
        return None if raw is None else _finite(qf, raw, f"section6.{name}")

    try:
        return Section6Params(
            a=_finite(qf, spec.a, "section6.a"),
            a1=_finite(qf, spec.a1, "section6.a1"),
            a2=_finite(qf, spec.a2, "section6.a2"),
            b2=_finite(qf, spec.b2, "section6.b2"),
            b1=_finite(qf, spec.b1, "section6.b1"),
            b=_finite(qf, spec.b, "section6.b"),
            lam=lam_value,
            left_shape=opt(spec.left_shape, "left_shape"),
            right_shape=opt(spec.right_shape, "right_shape"),
        )
    except InvalidParametersError as exc:
        raise ScenarioValidationError("section6-parameters", str(exc)) from exc
    except ValidationError as exc:
        raise ScenarioValidationError(
            "section6-parameters", _first_message(exc), exc.errors()
        ) from exc


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _first_message(exc: ValidationError) -> str:
    errors = exc.errors()
    return errors[0]["msg"] if errors else str(exc)


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(exc.msg, line=exc.lineno) from exc


def _validated(data: Any) -> ScenarioFile:
    if not isinstance(data, dict):
        raise ScenarioParseError("a scenario must be a JSON object")
    try:
        doc = ScenarioFile.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        path = ".".join(str(p) for p in first["loc"]) or None
        raise ScenarioParseError(first["msg"], field=path) from exc
    if doc.schema_id != SCENARIO_SCHEMA:
        raise ScenarioValidationError(
            "schema-version", f"expected {SCENARIO_SCHEMA!r}, got {doc.schema_id!r}"
        )
    return doc


def build_scenario(doc: ScenarioFile, *, source: str = "<memory>") -> Scenario:
    """Turn a validated document into a generator system with regions and seeds."""
    try:
        qf = QuadraticField(doc.d)
    except ValueError as exc:
        raise ScenarioValidationError("field-valid", str(exc)) from exc
    space = Space(doc.space)

    example: Section6Example | None = None
    if doc.section6 is not None:
        if space is not Space.LINE:
            raise ScenarioValidationError("section6-parameters", "section6 lives on the line")
        try:
            example = build_section6_example(_section6_params(qf, doc.section6))
        except InvalidParametersError as exc:
            raise ScenarioValidationError("section6-parameters", str(exc)) from exc
        system = example.system
    else:
        names = [g.name for g in doc.generators]
        maps = [
            (g.name, _build_map(qf, space, g, f"generators.{g.name}"))
            for g in doc.generators
        ]
        inverses = {}
        for g in doc.generators:
            if g.inverse is None:
                continue
            if g.inverse not in names:
                raise ScenarioValidationError(
                    "names-resolve", f"generators.{g.name}.inverse names {g.inverse!r}"
                )
            inverses[g.name] = g.inverse
        for name in doc.bars:
            if name not in names:
                raise ScenarioValidationError("names-resolve", f"bars.{name} names no generator")
        bars = {
            name: _build_map(qf, space, spec, f"bars.{name}")
            for name, spec in doc.bars.items()
        }
        window = _domain(qf, doc.window, "window") if doc.window is not None else None
        try:
            system = GeneratorSystem(space, maps, inverses=inverses, window=window)
        except InvalidMapError as exc:
            raise ScenarioValidationError("generator-valid", str(exc)) from exc
        if bars:
            try:
                system = GeneratorSystem(
                    space, maps, inverses=inverses, bars=bars, window=window
                )
            except InvalidMapError as exc:
                raise ScenarioValidationError("bars-valid", str(exc)) from exc
        if system.auto_completed:
            logger.info(
                "Scenario %r: added missing inverses %s",
                doc.name,
                ", ".join(system.auto_completed),
            )

    regions = {
        name: _domain(qf, specs, f"regions.{name}") for name, specs in doc.regions.items()
    }
    seeds = tuple(
        system.normalize(_finite(qf, raw, f"seeds[{i}]")) for i, raw in enumerate(doc.seeds)
    )
    return Scenario(
        name=doc.name,
        number_field=qf,
        space=space,
        system=system,
        regions=regions,
        seeds=seeds,
        section6=example,
        source=source,
    )


def loads_scenario(text: str, *, source: str = "<memory>") -> Scenario:
    """Parse a scenario from JSON text."""
    return build_scenario(_validated(_load_json(text)), source=source)


def parse_scenario(path: str | Path) -> Scenario:
    """Read, validate and build a scenario file.

    Raises:
        ScenarioParseError: If the file is not valid JSON or misses a field.
        ScenarioValidationError: Naming the first violated invariant.
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioParseError(f"cannot read {p}: {exc.strerror}") from exc
    return loads_scenario(text, source=str(p))


def bundled_names() -> list[str]:
    """Names of the bundled scenario and atlas files (without .json)."""
    root = resources.files(BUNDLED_PACKAGE)
    return sorted(
        entry.name.removesuffix(".json")
        for entry in root.iterdir()
        if entry.name.endswith(".json")
    )


def _bundled_text(name: str) -> str:
    entry = resources.files(BUNDLED_PACKAGE).joinpath(f"{name}.json")
    if not entry.is_file():
        raise ScenarioParseError(f"no bundled scenario named {name!r}")
    return entry.read_text(encoding="utf-8")


def load_bundled(name: str) -> Scenario:
    """Load a scenario shipped with the package, e.g. ``"rotation_sqrt2"``."""
    return loads_scenario(_bundled_text(name), source=f"bundled:{name}")


def resolve_scenario(name_or_path: str) -> Scenario:
    """A path if it exists on disk, otherwise a bundled scenario name."""
    if Path(name_or_path).is_file():
        return parse_scenario(name_or_path)
    return load_bundled(name_or_path)


# ---------------------------------------------------------------------------
# atlases
# ---------------------------------------------------------------------------


def loads_atlas(text: str) -> MetricPatchAtlas:
    """Parse a metric patch atlas from JSON text.

    Raises:
        ScenarioParseError: If the text is not valid JSON.
        ScenarioValidationError: If the atlas violates its invariants.
    """
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ScenarioParseError("an atlas must be a JSON object")
    try:
        atlas = MetricPatchAtlas.from_json_dict(data)
    except ValidationError as exc:
        raise ScenarioValidationError("atlas-valid", _first_message(exc), exc.errors()) from exc
    if atlas.schema_id != ATLAS_SCHEMA:
        raise ScenarioValidationError(
            "schema-version", f"expected {ATLAS_SCHEMA!r}, got {atlas.schema_id!r}"
        )
    return atlas


def load_atlas(name_or_path: str | Path) -> MetricPatchAtlas:
    """Read an atlas from a path, or from the bundled files by name."""
    p = Path(name_or_path)
    if p.is_file():
        return loads_atlas(p.read_text(encoding="utf-8"))
    return loads_atlas(_bundled_text(str(name_or_path)))
