"""Unit tests for scenario and atlas ingestion."""

import json
from fractions import Fraction

import pytest

from pseudodyn.exactnum import Scalar
from pseudodyn.exceptions import ScenarioParseError, ScenarioValidationError
from pseudodyn.localmaps import Space
from pseudodyn.scenario import (
    bundled_names,
    load_atlas,
    load_bundled,
    loads_atlas,
    loads_scenario,
    parse_scenario,
    resolve_scenario,
)
from tests.conftest import make_atlas_data, make_scenario_data, make_scenario_text

SHIFT_PIECE = {"interval": ["1", "2"], "moebius": ["1", "1", "0", "1"]}


def _invariant(**overrides) -> str:
    with pytest.raises(ScenarioValidationError) as exc_info:
        loads_scenario(make_scenario_text(**overrides))
    return exc_info.value.invariant


class TestBundledScenarios:
    """Tests for the files shipped with the package."""

    def test_bundled_names(self):
        """Every bundled file is listed."""
        names = bundled_names()
        for name in ("rotation_sqrt2", "rotation_third", "section6", "translation"):
            assert name in names
        assert "atlas_two_patch" in names

    def test_rotation_sqrt2(self, rotation_scenario):
        """The irrational rotation lives in Q(sqrt 2) with its bar."""
        assert rotation_scenario.number_field.d == 2
        assert rotation_scenario.space is Space.CIRCLE
        assert rotation_scenario.system.labels == ("r", "r^-1")
        assert rotation_scenario.system.has_bars
        assert rotation_scenario.seeds[0] == 0
        assert rotation_scenario.source == "bundled:rotation_sqrt2"

    def test_section6(self):
        """The section6 block builds the non-recurrent example."""
        scenario = load_bundled("section6")
        assert scenario.section6 is not None
        assert scenario.system is scenario.section6.system
        assert scenario.seeds[0] == Scalar(Fraction(3, 2))
        assert scenario.region("V").contains(2)

    def test_regions(self, rotation_scenario):
        """Regions resolve by name; "window" is always available."""
        assert rotation_scenario.region("arc").contains(Fraction(1, 4))
        assert rotation_scenario.region("window") == rotation_scenario.window
        with pytest.raises(ScenarioValidationError) as exc_info:
            rotation_scenario.region("nowhere")
        assert exc_info.value.invariant == "names-resolve"

    def test_unknown_bundled_name(self):
        """Unknown names are a parse error."""
        with pytest.raises(ScenarioParseError):
            load_bundled("no_such_scenario")


class TestParsing:
    """Tests for JSON and schema errors."""

    def test_valid_document(self, caplog):
        """Missing inverses are completed and logged."""
        with caplog.at_level("INFO", logger="pseudodyn.scenario"):
            scenario = loads_scenario(make_scenario_text())
        assert scenario.system.labels == ("r", "r^-1")
        assert scenario.seeds == (Scalar(0), Scalar(Fraction(1, 3)))
        assert "added missing inverses r^-1" in caplog.text

    def test_json_error_has_line(self):
        """Syntax errors report their line."""
        with pytest.raises(ScenarioParseError) as exc_info:
            loads_scenario('{\n  "schema": ,\n}')
        assert exc_info.value.line == 2
        assert exc_info.value.module == "scenario"

    def test_bad_field_has_path(self):
        """Schema errors report the offending field."""
        with pytest.raises(ScenarioParseError) as exc_info:
            loads_scenario(make_scenario_text(space="torus"))
        assert exc_info.value.field == "space"

    def test_missing_field(self):
        """A document without a name is rejected."""
        data = make_scenario_data()
        del data["name"]
        with pytest.raises(ScenarioParseError) as exc_info:
            loads_scenario(json.dumps(data))
        assert exc_info.value.field == "name"

    def test_not_an_object(self):
        """The top level must be an object."""
        with pytest.raises(ScenarioParseError):
            loads_scenario("[1, 2]")

    def test_generators_and_section6_are_exclusive(self):
        """Only one way of giving the system is allowed."""
        with pytest.raises(ScenarioParseError):
            loads_scenario(make_scenario_text(section6={}))


class TestValidation:
    """Tests for named invariants."""

    def test_schema_version(self):
        """Only version 1 documents are read."""
        assert _invariant(schema="pseudodyn.scenario/2") == "schema-version"

    def test_field(self):
        """d must be square-free."""
        assert _invariant(d=8) == "field-valid"

    def test_rotation_on_line(self):
        """Rotations need the circle."""
        assert _invariant(space="line") == "generator-valid"

    def test_unknown_inverse(self):
        """Declared inverses must name a generator."""
        generators = [{"name": "r", "rotation": "2/5", "inverse": "s"}]
        assert _invariant(generators=generators) == "names-resolve"

    def test_bar_for_unknown_generator(self):
        """Bars must name a generator."""
        assert _invariant(bars={"s": {"rotation": "1/5"}}) == "names-resolve"

    def test_invalid_bar(self):
        """A bar equal to its generator does not cover the closure."""
        invariant = _invariant(
            space="line",
            regions={},
            generators=[{"name": "f", "pieces": [SHIFT_PIECE]}],
            bars={"f": {"pieces": [SHIFT_PIECE]}},
        )
        assert invariant == "bars-valid"

    def test_unparseable_seed(self):
        """Seeds must be numbers of the field."""
        assert _invariant(seeds=["abc"]) == "values-parse"

    def test_reversed_interval(self):
        """lo > hi is rejected."""
        assert _invariant(regions={"bad": [["1", "0"]]}) == "intervals-valid"

    def test_section6_parameters(self):
        """Out-of-order points are rejected with the violated condition."""
        invariant = _invariant(space="line", generators=[], section6={"a1": 3})
        assert invariant == "section6-parameters"

    def test_section6_on_circle(self):
        """The example lives on the line."""
        assert _invariant(generators=[], section6={}) == "section6-parameters"


class TestFiles:
    """Tests for reading from disk."""

    def test_parse_scenario(self, tmp_path):
        """A scenario file records its path."""
        path = tmp_path / "rot.json"
        path.write_text(make_scenario_text(), encoding="utf-8")
        scenario = parse_scenario(path)
        assert scenario.source == str(path)
        assert resolve_scenario(str(path)).name == "test-rotation"

    def test_missing_file(self, tmp_path):
        """Unreadable files are a parse error."""
        with pytest.raises(ScenarioParseError):
            parse_scenario(tmp_path / "absent.json")

    def test_resolve_bundled(self):
        """Names that are not paths fall back to bundled files."""
        assert resolve_scenario("translation").system.labels == ("t", "t^-1")


class TestAtlases:
    """Tests for atlas ingestion."""

    def test_bundled_atlas(self):
        """The bundled two-patch atlas loads."""
        atlas = load_atlas("atlas_two_patch")
        assert [p.name for p in atlas.patches] == ["A", "B"]

    def test_atlas_from_path(self, tmp_path):
        """Atlases load from disk too."""
        path = tmp_path / "atlas.json"
        path.write_text(json.dumps(make_atlas_data()), encoding="utf-8")
        assert load_atlas(path).points == ("p0", "p1", "p2", "p3", "p4")

    def test_atlas_schema_version(self):
        """Wrong atlas schema ids are rejected."""
        with pytest.raises(ScenarioValidationError) as exc_info:
            loads_atlas(json.dumps(make_atlas_data(schema="pseudodyn.atlas/9")))
        assert exc_info.value.invariant == "schema-version"

    def test_invalid_atlas(self):
        """Table errors carry pydantic details."""
        data = make_atlas_data(points=["p0", "p1", "p2", "p3", "p4", "p5"])
        with pytest.raises(ScenarioValidationError) as exc_info:
            loads_atlas(json.dumps(data))
        assert exc_info.value.invariant == "atlas-valid"
        assert exc_info.value.errors

    def test_atlas_not_an_object(self):
        """The top level must be an object."""
        with pytest.raises(ScenarioParseError):
            loads_atlas('"atlas"')
