"""Unit tests for intervals, Möbius maps, partial maps and generator systems."""

import random
from fractions import Fraction

import pytest

from pseudodyn.exactnum import NEG_INF, POS_INF, Scalar
from pseudodyn.exceptions import (
    IntervalNotInDomainError,
    InvalidMapError,
    MissingExtensionError,
    OutsideDomainError,
)
from pseudodyn.localmaps import (
    DomainSet,
    GeneratorSystem,
    Interval,
    MoebiusMap,
    PartialMap,
    Space,
    combine,
    compose,
    germ_at,
    germ_equal,
    invert,
    is_identity_on,
    restrict,
)
from tests.conftest import (
    SQRT2_MINUS_ONE,
    make_affine_map,
    make_random_fraction,
    make_rotation_system,
)

HALF = Fraction(1, 2)


class TestInterval:
    """Tests for Interval."""

    def test_open_membership(self):
        """Open ends exclude their endpoints."""
        iv = Interval.open(0, 1)
        assert iv.contains(HALF)
        assert not iv.contains(0)
        assert not iv.contains(1)

    def test_rejects_empty(self):
        """lo > hi is rejected."""
        with pytest.raises(ValueError):
            Interval.open(2, 1)

    def test_make_returns_none_for_empty(self):
        """make should signal emptiness with None."""
        assert Interval.make(1, 1, True, False) is None
        assert Interval.make(1, 1, False, False) == Interval.point(1)

    def test_infinite_ends_are_open(self):
        """An infinite endpoint cannot be closed."""
        with pytest.raises(ValueError):
            Interval(NEG_INF, Scalar(0), False, True)
        assert Interval.line().contains(10**6)

    def test_closure_strictly_inside(self):
        """[1/4, 3/4] sits in (0, 1); (0, 1) does not sit in (0, 1)."""
        outer = Interval.open(0, 1)
        assert outer.contains_closure_strictly(Interval.open(Fraction(1, 4), Fraction(3, 4)))
        assert not outer.contains_closure_strictly(Interval.open(0, 1))


class TestDomainSet:
    """Tests for finite unions of intervals."""

    def test_merges_touching_intervals(self):
        """(0, 1] and (1, 2) merge into (0, 2)."""
        ds = DomainSet.of(Interval(Scalar(0), Scalar(1), True, False), Interval.open(1, 2))
        assert ds.components == (Interval.open(0, 2),)

    def test_keeps_gap_at_missing_point(self):
        """(0, 1) and (1, 2) stay apart."""
        ds = DomainSet.of(Interval.open(0, 1), Interval.open(1, 2))
        assert len(ds) == 2
        assert not ds.contains(1)

    def test_difference_and_intersection(self):
        """Set algebra should be exact."""
        big = DomainSet.of(Interval.open(0, 4))
        hole = DomainSet.of(Interval.closed(1, 2))
        rest = big - hole
        assert rest.components == (
            Interval(Scalar(0), Scalar(1), True, True),
            Interval(Scalar(2), Scalar(4), True, True),
        )
        assert (big & hole) == hole

    def test_closure_of(self):
        """contains_closure_of requires boundedness."""
        outer = DomainSet.of(Interval.open(0, 5))
        assert outer.contains_closure_of(DomainSet.of(Interval.open(1, 2)))
        assert not outer.contains_closure_of(DomainSet.of(Interval(Scalar(1), POS_INF)))


class TestMoebiusMap:
    """Tests for Möbius maps."""

    def test_rejects_orientation_reversing(self):
        """ad - bc must be positive."""
        with pytest.raises(InvalidMapError):
            MoebiusMap(-1, 0, 0, 1)

    def test_projective_normalization(self):
        """Scaled coefficient vectors are the same map."""
        assert MoebiusMap(2, 4, 0, 2) == MoebiusMap(1, 2, 0, 1)

    def test_compose_and_inverse(self):
        """m ∘ m^-1 is the identity."""
        m = MoebiusMap(2, 1, 1, 1)
        assert m.compose(m.inverse()).is_identity
        assert m(Scalar(1)) == Scalar(Fraction(3, 2))

    def test_limit_at_pole_and_infinity(self):
        """One-sided limits at the pole and at ±inf."""
        m = MoebiusMap(0, -1, 1, 0)  # x -> -1/x
        assert m.pole == 0
        assert m.limit(Scalar(0), from_left=True) == POS_INF
        assert m.limit(POS_INF, from_left=True) == 0


class TestPartialMap:
    """Tests for piecewise-Möbius partial maps."""

    def test_apply_and_domain(self):
        """x -> 2x on (0, 1)."""
        f = make_affine_map(0, 1, 2, 0)
        assert f.apply(HALF) == 1
        assert f.try_apply(Scalar(2)) is None
        with pytest.raises(OutsideDomainError):
            f.apply(2)

    def test_rejects_overlapping_pieces(self):
        """Pieces must be disjoint."""
        with pytest.raises(InvalidMapError):
            PartialMap.line_map(
                [
                    (Interval.open(0, 2), MoebiusMap.identity()),
                    (Interval.open(1, 3), MoebiusMap.translation(5)),
                ]
            )

    def test_rejects_discontinuity(self):
        """Touching pieces must agree at the seam."""
        with pytest.raises(InvalidMapError):
            PartialMap.line_map(
                [
                    (Interval(Scalar(0), Scalar(1), True, False), MoebiusMap.identity()),
                    (Interval.open(1, 2), MoebiusMap.translation(1)),
                ]
            )

    def test_rejects_non_injective(self):
        """Two pieces with overlapping images are not a homeomorphism."""
        with pytest.raises(InvalidMapError):
            PartialMap.line_map(
                [
                    (Interval.open(0, 1), MoebiusMap.identity()),
                    (Interval.open(2, 3), MoebiusMap.translation(-2)),
                ]
            )

    def test_rotation_wraps(self):
        """Rotation by 2/5 sends 4/5 to 1/5."""
        r = PartialMap.rotation(Fraction(2, 5))
        assert r.apply(Fraction(4, 5)) == Scalar(Fraction(1, 5))
        assert r.apply(Fraction(9, 5)) == Scalar(Fraction(1, 5))

    def test_compose_domain(self):
        """(x -> x + 1 on (0, 2)) then (x -> 2x on (1, 2)) lives on (0, 1)."""
        f = make_affine_map(1, 2, 2, 0)
        g = make_affine_map(0, 2, 1, 1)
        h = compose(f, g)
        assert h.domain == DomainSet.of(Interval.open(0, 1))
        assert h.apply(HALF) == 3

    def test_invert_and_restrict(self):
        """invert swaps domain and image; restrict shrinks the domain."""
        f = make_affine_map(0, 1, 2, 0)
        inv = invert(f)
        assert inv.domain == DomainSet.of(Interval.open(0, 2))
        assert inv.apply(1) == HALF
        small = restrict(f, Interval.open(0, HALF))
        assert small.try_apply(Scalar(Fraction(3, 4))) is None

    def test_combine_disjoint_and_conflicting(self):
        """combine glues agreeing maps and rejects disagreement."""
        left = make_affine_map(0, 1, 1, 0)
        right = make_affine_map(1, 2, 1, 0)
        glued = combine(left, right)
        assert glued.apply(Fraction(3, 2)) == Scalar(Fraction(3, 2))
        with pytest.raises(InvalidMapError):
            combine(left, make_affine_map(0, 1, 1, Fraction(1, 10)))

    def test_is_identity_on(self):
        """Identity detection and the domain precondition."""
        f = make_affine_map(0, 1, 1, 0)
        assert is_identity_on(f, Interval.open(0, HALF))
        with pytest.raises(IntervalNotInDomainError):
            is_identity_on(f, Interval.open(0, 2))


def _random_line_map(rng: random.Random) -> tuple[PartialMap, Interval]:
    # one affine piece, or two pieces with different slopes meeting at m
    lo = make_random_fraction(rng)
    m = lo + Fraction(rng.randint(1, 9), rng.randint(1, 4))
    hi = m + Fraction(rng.randint(1, 9), rng.randint(1, 4))
    s1 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    c1 = make_random_fraction(rng)
    if rng.random() < 0.5:
        return make_affine_map(lo, hi, s1, c1), Interval.open(lo, hi)
    s2 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    c2 = s1 * m + c1 - s2 * m
    f = PartialMap.line_map(
        [
            (Interval(Scalar(lo), Scalar(m), True, False), MoebiusMap.affine(s1, c1)),
            (Interval.open(m, hi), MoebiusMap.affine(s2, c2)),
        ]
    )
    return f, Interval.open(lo, hi)


class TestInverseLaw:
    """Randomized checks that invert undoes a map on its domain."""

    @pytest.mark.parametrize("seed", range(20))
    def test_inverse_after_map_is_identity(self, seed):
        """invert(f) ∘ f is the identity on all of dom f."""
        f, span = _random_line_map(random.Random(seed))
        back = compose(invert(f), f)
        assert back.domain == f.domain
        assert is_identity_on(back, span)

    @pytest.mark.parametrize("seed", range(20))
    def test_map_after_inverse_is_identity(self, seed):
        """f ∘ invert(f) is the identity on the image of f."""
        f, _ = _random_line_map(random.Random(seed))
        forth = compose(f, invert(f))
        assert forth.domain == f.image
        for component in f.image:
            assert is_identity_on(forth, component)


class TestGerms:
    """Tests for germs at a point."""

    def test_identity_germ(self):
        """The identity map has the identity germ."""
        f = make_affine_map(0, 1, 1, 0)
        assert germ_at(f, HALF).is_identity

    def test_germs_compare_locally(self):
        """Maps agreeing near a point have equal germs there."""
        f = make_affine_map(0, 2, 1, 0)
        g = combine(make_affine_map(0, 1, 1, 0), make_affine_map(1, 2, 1, 0))
        assert germ_equal(restrict(f, Interval.open(0, 1)), g, HALF)

    def test_circle_germ_at_zero(self):
        """A rotation's germ at 0 is a translation on both sides."""
        germ = germ_at(PartialMap.rotation(Fraction(1, 3)), 0)
        assert not germ.is_identity
        assert germ.value == Scalar(Fraction(1, 3))


class TestGeneratorSystem:
    """Tests for generator systems."""

    def test_auto_completes_inverse(self):
        """A missing inverse is added as name^-1."""
        system = make_rotation_system()
        assert system.labels == ("r", "r^-1")
        assert system.auto_completed == ("r^-1",)
        assert system.inverse_of("r^-1") == "r"

    def test_involution_is_its_own_inverse(self):
        """Rotation by 1/2 needs no partner."""
        system = make_rotation_system(HALF)
        assert system.labels == ("r",)
        assert system.inverse_of("r") == "r"

    def test_declared_inverse_is_checked(self):
        """A wrong declared inverse is rejected."""
        f = make_affine_map(0, 1, 2, 0)
        not_inverse = make_affine_map(0, 2, 1, 0)
        with pytest.raises(InvalidMapError):
            GeneratorSystem(Space.LINE, [("f", f), ("g", not_inverse)], inverses={"f": "g"})

    def test_rejects_closed_domain_on_line(self):
        """Line generators need open domains."""
        closed = PartialMap.line_map([(Interval.closed(0, 1), MoebiusMap.identity())])
        with pytest.raises(InvalidMapError):
            GeneratorSystem(Space.LINE, [("c", closed)])

    def test_bar_extension_checks(self):
        """The extension must restrict to the generator and cover its closure."""
        f = make_affine_map(1, 2, 1, 1)
        good = make_affine_map(0, 3, 1, 1)
        system = GeneratorSystem(Space.LINE, [("f", f)], bars={"f": good})
        assert system.bar("f^-1").apply(3) == 2
        with pytest.raises(InvalidMapError):
            GeneratorSystem(Space.LINE, [("f", f)], bars={"f": f})
        with pytest.raises(InvalidMapError):
            GeneratorSystem(Space.LINE, [("f", f)], bars={"f": make_affine_map(0, 3, 1, 2)})

    def test_unvalidated_bars(self, caplog):
        """validate_bars=False installs the table with a warning."""
        f = make_affine_map(1, 2, 1, 1)
        with caplog.at_level("WARNING"):
            system = GeneratorSystem(Space.LINE, [("f", f)], bars={"f": f}, validate_bars=False)
        assert system.bar("f") is f
        assert "without validation" in caplog.text

    def test_missing_bar(self):
        """Asking for an undeclared extension raises."""
        with pytest.raises(MissingExtensionError):
            make_rotation_system().bar("r")

    def test_circle_distance_and_normalize(self):
        """Arc length goes the short way round."""
        system = make_rotation_system()
        assert system.distance(Scalar(Fraction(1, 10)), Scalar(Fraction(9, 10))) == Scalar(
            Fraction(1, 5)
        )
        assert system.normalize(Fraction(5, 4)) == Scalar(Fraction(1, 4))
        assert system["r"].apply(0) == SQRT2_MINUS_ONE
