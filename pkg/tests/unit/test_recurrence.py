"""Unit tests for recurrence audits and the non-recurrent example."""

from fractions import Fraction
from typing import Any

import pytest

from pseudodyn.exactnum import Scalar
from pseudodyn.exceptions import InvalidParametersError, OrbitMismatchError
from pseudodyn.localmaps import PartialMap, Space, compose, germ_equal
from pseudodyn.models.recurrence import Section6Params
from pseudodyn.recurrence import (
    bilipschitz_audit,
    build_section6_example,
    recurrence_profile,
    recurrent_companion,
    window_hitting_bound,
)
from tests.conftest import make_rotation_system


def _points(*values: Any) -> dict[str, Scalar]:
    return dict(zip(("a", "a1", "a2", "b2", "b1", "b"), map(Scalar, values), strict=True))


class TestSection6Params:
    """Tests for the parameter model."""

    def test_default(self):
        """Defaults are 0..5 and 3/2."""
        params = Section6Params.default()
        assert (params.a, params.b) == (Scalar(0), Scalar(5))
        assert params.lam == Fraction(3, 2)

    def test_rejects_disordered_points(self):
        """The six points must increase."""
        with pytest.raises(InvalidParametersError):
            Section6Params(**_points(0, 2, 1, 3, 4, 5))

    def test_rejects_small_lambda(self):
        """lambda must exceed 1."""
        with pytest.raises(InvalidParametersError):
            Section6Params(**_points(0, 1, 2, 3, 4, 5), lam=1)


class TestSection6Example:
    """Tests for the assembled example."""

    def test_generators(self, section6):
        """g1, g2 and their inverses, with bar extensions."""
        assert section6.system.labels == ("g1", "g2", "g1^-1", "g2^-1")
        assert section6.system.has_bars

    def test_g1_is_hyperbolic(self, section6):
        """g1(x) = 15x / (x + 10) for the default parameters."""
        assert section6.system["g1"].apply(1) == Scalar(Fraction(15, 11))
        assert section6.g1_tilde.apply(7) == 7

    def test_g2_is_identity_near_a(self, section6):
        """φ maps (-inf, 0] onto (0, 1], where g~1 is the identity."""
        g2 = section6.system["g2"]
        for x in (Fraction(1, 2), Fraction(1, 10), Fraction(1)):
            assert g2.apply(x) == Scalar(x)

    def test_phi_fixes_core(self, section6):
        """φ is the identity on [a'', b'']."""
        assert section6.phi.apply(Fraction(5, 2)) == Scalar(Fraction(5, 2))

    def test_nu(self, section6):
        """ν counts forward g1 steps into V = (1, 5)."""
        assert section6.nu(Fraction(5, 4)) == 0
        assert section6.nu(Fraction(10, 11)) == 1
        with pytest.raises(InvalidParametersError):
            section6.nu(-1)

    def test_backward_orbit(self, section6):
        """g1^-1(x) = 10x / (15 - x)."""
        orbit = section6.backward_orbit(Fraction(5, 4), 2)
        assert orbit == [Scalar(Fraction(n, d)) for n, d in ((5, 4), (10, 11), (20, 31))]

    def test_unpacks_as_system_and_nu(self, section6):
        """The example unpacks to (system, ν)."""
        system, nu = section6
        assert system is section6.system
        assert nu(Fraction(5, 4)) == 0

    def test_rejects_tight_parameters(self):
        """A weak hyperbolic map violates g~1(a'') < b''."""
        params = Section6Params(**_points(0, 1, 2, Fraction(201, 100), 4, 5))
        with pytest.raises(InvalidParametersError):
            build_section6_example(params)


class TestPhiInThePseudogroup:
    """φ agrees with g2^n ∘ g1^-n on U_n = g1^n(a'', b'')."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_word_germ_equals_phi(self, section6, n):
        """Germs agree at g1^n(9/4), a point of U_n off every breakpoint of φ."""
        system = section6.system
        x = Scalar(Fraction(9, 4))
        for _ in range(n):
            x = system["g1"].apply(x)
        h = PartialMap.identity(Space.LINE)
        for label in ["g1^-1"] * n + ["g2"] * n:
            h = compose(system[label], h)
        assert germ_equal(h, section6.phi, x)
        assert h.apply(x) == section6.phi.apply(x)

    def test_differs_from_phi_off_u_n(self, section6):
        """Near 1/2, outside U_1, g2 ∘ g1^-1 is g1^-1 and not φ."""
        system = section6.system
        h = compose(system["g2"], system["g1^-1"])
        assert not germ_equal(h, section6.phi, Fraction(1, 2))


class TestRecurrenceProfile:
    """Tests for hitting distances."""

    def test_hitting_equals_nu(self, section6):
        """The BFS distance to V equals ν along the backward orbit."""
        seeds = section6.backward_orbit(Fraction(5, 4), 5)[1:]
        profile = recurrence_profile(
            section6.system, section6.target, seeds, 8, nu=section6.nu
        )
        assert profile.distances == [1, 2, 3, 4, 5]
        assert [e.nu for e in profile.entries] == [1, 2, 3, 4, 5]
        assert profile.max_distance == 5

    def test_budget_exhausted(self, section6):
        """Seeds that do not reach V within rmax report None."""
        seed = section6.backward_orbit(Fraction(5, 4), 4)[-1]
        profile = recurrence_profile(section6.system, section6.target, [seed], 2)
        assert profile.entries[0].hit_distance is None
        assert profile.max_distance is None

    def test_companion_is_recurrent(self, section6):
        """Adding φ|U brings every seed into V in one step."""
        companion = recurrent_companion(section6)
        seeds = section6.backward_orbit(Fraction(5, 4), 8)
        profile = recurrence_profile(companion, section6.target, seeds, 1)
        assert profile.max_distance is not None
        assert profile.max_distance <= 1


class TestWindowHittingBound:
    """Tests for the bar-extension hitting audit."""

    def test_seeds_inside_window(self, section6):
        """Seeds already in U hit at distance 0."""
        assert window_hitting_bound(section6.system, [1, 2], rmax=1) == 0

    def test_seed_outside_never_enters(self, section6):
        """The bars fix points left of a, so -1 never reaches U."""
        assert window_hitting_bound(section6.system, [-1], rmax=3) is None


class TestBiLipschitzAudit:
    """Tests for comparing two word metrics."""

    def test_adding_a_square_halves_distances(self):
        """{r} against {r, r∘r} gives constant 2."""
        first = make_rotation_system()
        r = first["r"]
        second = first.extended([("rr", compose(r, r))])
        report = bilipschitz_audit(first, second, [0], 5)
        assert report.constant == 2
        assert report.witness is not None
        assert report.per_seed == (Fraction(2),)

    def test_different_orbits(self):
        """Different orbit structures are reported."""
        first = make_rotation_system()
        second = make_rotation_system(Fraction(1, 3))
        with pytest.raises(OrbitMismatchError):
            bilipschitz_audit(first, second, [0], 2)
