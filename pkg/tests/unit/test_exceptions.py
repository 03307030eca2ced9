"""Unit tests for the exception hierarchy."""

import pytest

from pseudodyn.exceptions import (
    AcceptanceError,
    ConfigurationError,
    EmptySetError,
    ExplosionGuardError,
    ExtensionDomainError,
    FieldMismatchError,
    InsufficientMarginError,
    IntervalNotInDomainError,
    InvalidMapError,
    InvalidParametersError,
    MissingExtensionError,
    NontrivialGermError,
    NotDenseError,
    OrbitMismatchError,
    OutsideDomainError,
    OverlapDisagreementError,
    PseudodynError,
    RadiusInsufficientError,
    ScenarioError,
    ScenarioParseError,
    ScenarioValidationError,
    SupportViolationError,
    WellDefinednessError,
    WordDomainError,
)

ERRORS = [
    (ConfigurationError("PSEUDODYN_NODE_CAP", "x", "expected an integer"), "config"),
    (FieldMismatchError(2, 3), "exactnum"),
    (OutsideDomainError(5, "f"), "localmaps"),
    (IntervalNotInDomainError("(0, 2)"), "localmaps"),
    (InvalidMapError("pieces overlap"), "localmaps"),
    (MissingExtensionError("r"), "localmaps"),
    (WordDomainError(1, 3, "h"), "pseudogroup"),
    (ExplosionGuardError(10), "pseudogroup"),
    (InvalidParametersError("lambda > 1"), "recurrence"),
    (OrbitMismatchError(0, 1, "first"), "recurrence"),
    (InsufficientMarginError(6, 4), "folner"),
    (SupportViolationError(1, "g"), "folner"),
    (EmptySetError(), "coarse"),
    (WellDefinednessError(1, "r r", "s"), "coarse"),
    (NontrivialGermError(0, "h"), "coarse"),
    (RadiusInsufficientError(3, "too small"), "coarse"),
    (ExtensionDomainError(2, "(0, 1)"), "equicont"),
    (NotDenseError(50, "1/3"), "equicont"),
    (OverlapDisagreementError("p1", "p2", ("A", "B")), "metrization"),
    (ScenarioParseError("bad"), "scenario"),
    (ScenarioValidationError("names-resolve", "unknown"), "scenario"),
    (AcceptanceError(7, "gap too large"), "selftest"),
]


class TestHierarchy:
    """Tests for the shared base and module tags."""

    @pytest.mark.parametrize(("error", "module"), ERRORS)
    def test_module_tags(self, error, module):
        """Every error derives from PseudodynError and names its module."""
        assert isinstance(error, PseudodynError)
        assert error.module == module
        assert str(error)

    def test_scenario_errors_share_a_base(self):
        """Parse and validation errors are both ScenarioErrors."""
        assert issubclass(ScenarioParseError, ScenarioError)
        assert issubclass(ScenarioValidationError, ScenarioError)


class TestMessages:
    """Tests for error context and messages."""

    def test_parse_error_location(self):
        """Line and field are shown as a prefix."""
        error = ScenarioParseError("Expecting value", field="seeds", line=4)
        assert str(error) == "[line 4, field seeds] Expecting value"

    def test_validation_error_names_invariant(self):
        """The invariant leads the message."""
        error = ScenarioValidationError("schema-version", "expected 1")
        assert str(error) == "schema-version: expected 1"
        assert error.errors == []

    def test_explosion_guard_context(self):
        """The limit and what was counted are kept."""
        error = ExplosionGuardError(100, "words")
        assert (error.limit, error.what) == (100, "words")

    def test_word_domain_context(self):
        """The failing prefix is recorded."""
        error = WordDomainError(2, 7, "g1")
        assert (error.prefix_length, error.point, error.label) == (2, 7, "g1")

    def test_acceptance_error(self):
        """Criterion failures carry their number."""
        error = AcceptanceError(3, "mu did not vanish")
        assert error.number == 3
        assert str(error) == "criterion 3: mu did not vanish"
