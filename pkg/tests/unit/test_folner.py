"""Unit tests for boundaries, Følner ratios and averaging measures."""

from fractions import Fraction

import pytest

from pseudodyn.exactnum import Scalar
from pseudodyn.exceptions import InsufficientMarginError, SupportViolationError
from pseudodyn.folner import (
    ConstantFunction,
    PiecewiseLinearFunction,
    TabulatedFunction,
    a_cap_s_check,
    averaging_measure,
    boundary_growth_holds,
    folner_ratios,
    graph_boundary,
    invariance_defect,
    measure_series,
    quasi_lattice_K,
    r_boundary,
    shell_bound_holds,
)
from pseudodyn.pseudogroup import orbit_ball, set_neighborhood
from tests.conftest import make_affine_map, make_translation_system


def _ints(*values: int) -> set[Scalar]:
    return {Scalar(v) for v in values}


@pytest.fixture
def path_ball():
    """The integers -10..10 as a path graph."""
    return orbit_ball(make_translation_system(), 0, 10)


@pytest.fixture
def block():
    """S = {0, 1, 2, 3, 4}."""
    return _ints(*range(5))


class TestBoundaries:
    """Tests for ∂_r S and ∂S on a path."""

    def test_graph_boundary(self, path_ball, block):
        """The endpoints of a block have edges leaving it."""
        assert graph_boundary(path_ball, block) == _ints(0, 4)

    def test_r_boundary_one_is_empty(self, path_ball, block):
        """No point is within distance < 1 of both S and its complement."""
        assert r_boundary(path_ball, block, 1) == set()

    def test_r_boundary_two(self, path_ball, block):
        """∂_2 S is the two edges crossing out of S."""
        assert r_boundary(path_ball, block, 2) == _ints(-1, 0, 4, 5)

    def test_r_boundary_three(self, path_ball, block):
        """∂_3 S reaches two steps either side of each end."""
        assert r_boundary(path_ball, block, 3) == _ints(-2, -1, 0, 1, 3, 4, 5, 6)

    def test_graph_boundary_is_inner_two_boundary(self, path_ball, block):
        """∂S = S ∩ ∂_2 S."""
        assert graph_boundary(path_ball, block) == block & r_boundary(path_ball, block, 2)

    def test_insufficient_margin(self, path_ball):
        """A set near the edge of the ball cannot be measured."""
        with pytest.raises(InsufficientMarginError) as exc_info:
            r_boundary(path_ball, _ints(8, 9), 2)
        assert exc_info.value.module == "folner"

    def test_rejects_zero_radius(self, path_ball, block):
        """r must be at least 1."""
        with pytest.raises(ValueError):
            r_boundary(path_ball, block, 0)

    def test_empty_set(self, path_ball):
        """The empty set has no boundary."""
        assert r_boundary(path_ball, [], 3) == set()
        assert graph_boundary(path_ball, []) == set()


class TestFolnerRatios:
    """Tests for the ratio report."""

    def test_row_values(self, path_ball, block):
        """One row per (set, radius) with exact ratios."""
        report = folner_ratios(path_ball, [block], [2, 3])
        rows = report.for_set(1)
        assert [row.r for row in rows] == [2, 3]
        first = rows[0]
        assert (first.set_size, first.boundary_size, first.inner_size) == (5, 4, 2)
        assert first.ratio == Fraction(4, 5)
        assert first.inner_ratio == Fraction(2, 5)
        assert first.graph_ratio == Fraction(2, 5)

    def test_ratios_shrink_along_growing_blocks(self, path_ball):
        """Blocks [-n, n] form a Følner sequence."""
        sets = [_ints(*range(-n, n + 1)) for n in (1, 3, 6)]
        report = folner_ratios(path_ball, sets, [2])
        ratios = [row.ratio for row in report.rows]
        assert ratios == sorted(ratios, reverse=True)
        assert ratios[-1] == Fraction(4, 13)


class TestCountingBounds:
    """Tests for the quasi-lattice constant and the counting inequalities."""

    def test_quasi_lattice_constant(self, path_ball):
        """A closed 2-ball on a path holds five points."""
        assert quasi_lattice_K(path_ball, 2) == 5

    def test_quasi_lattice_needs_room(self, path_ball):
        """No node has a complete 11-ball inside a radius-10 ball."""
        with pytest.raises(InsufficientMarginError):
            quasi_lattice_K(path_ball, 11)

    def test_boundary_growth(self, path_ball, block):
        """#∂_2 S = 4 <= 2^2 * #∂S = 8."""
        assert boundary_growth_holds(path_ball, block, 2, 2)

    def test_shell_bound(self, path_ball, block):
        """The outer shell is controlled by the inner boundary."""
        assert shell_bound_holds(path_ball, block, 2)

    def test_a_cap_s(self, path_ball, block):
        """The even integers are a 2-net of the path."""
        evens = _ints(*range(-10, 11, 2))
        check = a_cap_s_check(path_ball, evens, block, 2)
        assert check.is_net
        assert (check.set_size, check.boundary_part, check.net_part, check.k) == (5, 2, 3, 3)
        assert check.holds

    def test_a_cap_s_not_a_net(self, path_ball, block):
        """A single point is no 2-net of the path."""
        check = a_cap_s_check(path_ball, _ints(0), block, 2)
        assert not check.is_net

    def test_a_cap_s_rejects_small_c(self, path_ball, block):
        """C must exceed 1."""
        with pytest.raises(ValueError):
            a_cap_s_check(path_ball, block, block, 1)


class TestSampleFunctions:
    """Tests for the exact test functions."""

    def test_tent(self):
        """The tent on (0, 1) peaks at 1/2."""
        tent = PiecewiseLinearFunction.tent(0, 1)
        assert tent(Scalar(Fraction(1, 2))) == 1
        assert tent(Scalar(Fraction(1, 4))) == Scalar(Fraction(1, 2))
        assert tent(Scalar(2)) == 0
        assert tent.sup_norm() == 1

    def test_rejects_unsorted_breakpoints(self):
        """Breakpoints must increase."""
        with pytest.raises(ValueError):
            PiecewiseLinearFunction.of([(1, 0), (0, 1)])

    def test_tabulated_and_constant(self):
        """Tables default to zero; constants are constant."""
        table = TabulatedFunction({Scalar(1): Scalar(-3)})
        assert table(Scalar(1)) == -3
        assert table(Scalar(2)) == 0
        assert table.sup_norm() == 3
        assert ConstantFunction()(Scalar(7)) == 1


class TestAveragingMeasures:
    """Tests for μ_S and invariance defects."""

    def test_average(self):
        """μ of the identity on {0, 1, 2} is 1."""
        assert averaging_measure(_ints(0, 1, 2), lambda x: x) == 1

    def test_average_of_empty_set(self):
        """Averaging over nothing is an error."""
        with pytest.raises(ValueError):
            averaging_measure([], lambda x: x)

    def test_measure_series(self):
        """μ_n along a sequence of sets."""
        tent = PiecewiseLinearFunction.tent(0, 2)
        series = measure_series([[Scalar(0)], [Scalar(0), Scalar(1)]], tent)
        assert [s.value for s in series.samples] == [Scalar(0), Scalar(Fraction(1, 2))]
        assert series.samples[1].approx.startswith("0.5")
        assert series.sup_norm == 1

    def test_invariance_defect_within_bound(self, path_ball, block):
        """Translating the tent by one step does not change its average on S."""
        system = make_translation_system()
        result = invariance_defect(
            path_ball, block, system["t"], PiecewiseLinearFunction.tent(0, 2)
        )
        assert result.defect == 0
        assert result.bound == Scalar(Fraction(4, 5))
        assert result.passed

    def test_support_violation(self, path_ball, block):
        """f must vanish on S outside the image of g."""
        g = make_affine_map(0, 10, 1, 1)
        with pytest.raises(SupportViolationError):
            invariance_defect(path_ball, block, g, PiecewiseLinearFunction.tent(0, 2))


class TestBackwardSegments:
    """Tests on the segments X = {g1^-m(x0)} of the non-recurrent example."""

    def test_boundary_from_interior_base(self, section6):
        """From x0 = 10/11 in (a, a') only the two endpoints have outside neighbours."""
        xs = section6.backward_orbit(Fraction(10, 11), 100)
        graph = set_neighborhood(section6.system, xs, 1)
        boundary = graph_boundary(graph, xs)
        assert boundary == {xs[0], xs[-1]}
        assert Fraction(len(boundary), len(xs)) == Fraction(2, 101)

    @pytest.mark.parametrize("n", [5, 10, 20])
    def test_tent_on_target_along_backward_orbit(self, section6, n):
        """A tent on V = (1, 5) over X = {g1^-m(5/4)} sees only g1(5/4) and 5/4.

        f(5/3) = 1/3 and f(5/4) = 1/8, so the defect is 1/(3(n+1)), well under
        the bound 2·1·2/(n+1).
        """
        xs = section6.backward_orbit(Fraction(5, 4), n)
        graph = set_neighborhood(section6.system, xs, 1)
        (v,) = section6.target.components
        tent = PiecewiseLinearFunction.tent(v.lo, v.hi)
        result = invariance_defect(graph, xs, section6.system["g1"], tent, generator="g1")
        assert result.defect == Scalar(Fraction(1, 3 * (n + 1)))
        assert result.bound == Scalar(Fraction(4, n + 1))
        assert result.passed
