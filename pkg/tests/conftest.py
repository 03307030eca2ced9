"""Shared pytest fixtures for pseudodyn tests."""

from __future__ import annotations

import json
import random
from fractions import Fraction
from typing import Any

import pytest

from pseudodyn.exactnum import Scalar
from pseudodyn.localmaps import GeneratorSystem, Interval, MoebiusMap, PartialMap, Space
from pseudodyn.models.metrization import MetricPatch, MetricPatchAtlas
from pseudodyn.recurrence import Section6Example, build_section6_example
from pseudodyn.scenario import Scenario, load_bundled

SQRT2_MINUS_ONE = Scalar(-1, 1, 2)


def make_rotation_system(alpha: Any = SQRT2_MINUS_ONE, *, with_bar: bool = False) -> GeneratorSystem:
    """Create a one-generator rotation system on the circle.

    Args:
        alpha: Rotation angle.
        with_bar: Declare the rotation as its own bar extension.

    Returns:
        A system with labels ("r", "r^-1") (just ("r",) for an involution).
    """
    r = PartialMap.rotation(alpha)
    bars = {"r": r} if with_bar else None
    return GeneratorSystem(Space.CIRCLE, [("r", r)], bars=bars)


def make_translation_system(shift: Any = 1) -> GeneratorSystem:
    """Create the whole-line translation x -> x + shift as a system."""
    t = PartialMap.line_map([(Interval.line(), MoebiusMap.translation(shift))])
    return GeneratorSystem(Space.LINE, [("t", t)])


def make_affine_map(lo: Any, hi: Any, slope: Any, intercept: Any) -> PartialMap:
    """Create x -> slope*x + intercept on the open interval (lo, hi)."""
    return PartialMap.line_map([(Interval.open(lo, hi), MoebiusMap.affine(slope, intercept))])


def make_random_fraction(rng: random.Random, bound: int = 20, denominator: int = 9) -> Fraction:
    """A fraction with numerator in [-bound, bound] and denominator in [1, denominator]."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, denominator))


def make_random_scalar(rng: random.Random, d: int = 2) -> Scalar:
    """A random element p + q·sqrt(d) with small rational coordinates."""
    return Scalar(make_random_fraction(rng), make_random_fraction(rng), d)


def make_scenario_data(**overrides: Any) -> dict[str, Any]:
    """Create a valid scenario document for tests.

    Args:
        **overrides: Top-level fields to replace.

    Returns:
        Dictionary with a valid rotation scenario.
    """
    base_data: dict[str, Any] = {
        "schema": "pseudodyn.scenario/1",
        "name": "test-rotation",
        "description": "Rotation by 2/5.",
        "space": "circle",
        "generators": [{"name": "r", "rotation": "2/5"}],
        "regions": {"arc": [["1/10", "3/10"]]},
        "seeds": ["0", "1/3"],
    }
    base_data.update(overrides)
    return base_data


def make_scenario_text(**overrides: Any) -> str:
    """Serialized form of `make_scenario_data`."""
    return json.dumps(make_scenario_data(**overrides), indent=2)


def make_patch(
    name: str,
    positions: dict[str, Fraction],
    shrink: tuple[str, ...] | None = None,
    *,
    factor: Fraction = Fraction(1),
) -> MetricPatch:
    """Create a patch whose table is factor * |x - y| between line positions.

    Args:
        name: Patch name.
        positions: Member name -> position, in table order.
        shrink: Shrinking; defaults to all members.
        factor: Scale applied to every distance.
    """
    members = tuple(positions)
    return MetricPatch(
        name=name,
        members=members,
        shrink=members if shrink is None else shrink,
        table=tuple(
            tuple(abs(positions[a] - positions[b]) * factor for b in members)
            for a in members
        ),
    )


def make_atlas_data(**overrides: Any) -> dict[str, Any]:
    """Create a valid two-patch atlas document (points 0, 1/8, ..., 1/2)."""
    step = Fraction(1, 8)

    def table(idx: range) -> list[list[str]]:
        return [[str(abs(i - j) * step) for j in idx] for i in idx]

    base_data: dict[str, Any] = {
        "schema": "pseudodyn.atlas/1",
        "points": ["p0", "p1", "p2", "p3", "p4"],
        "patches": [
            {
                "name": "A",
                "members": ["p0", "p1", "p2", "p3"],
                "shrink": ["p0", "p1", "p2"],
                "table": table(range(0, 4)),
            },
            {
                "name": "B",
                "members": ["p1", "p2", "p3", "p4"],
                "shrink": ["p2", "p3", "p4"],
                "table": table(range(1, 5)),
            },
        ],
    }
    base_data.update(overrides)
    return base_data


@pytest.fixture
def rotation_system() -> GeneratorSystem:
    """Rotation by sqrt(2) - 1 with its bar extension."""
    return make_rotation_system(with_bar=True)


@pytest.fixture
def translation_system() -> GeneratorSystem:
    """Unit translation of the line."""
    return make_translation_system()


@pytest.fixture(scope="session")
def section6() -> Section6Example:
    """The non-recurrent example with default parameters."""
    return build_section6_example()


@pytest.fixture(scope="session")
def rotation_scenario() -> Scenario:
    """The bundled sqrt(2) - 1 rotation scenario."""
    return load_bundled("rotation_sqrt2")


@pytest.fixture
def two_patch_atlas() -> MetricPatchAtlas:
    """An agreeing two-patch atlas of five points on the line."""
    return MetricPatchAtlas.from_json_dict(make_atlas_data())
