"""Exception hierarchy for pseudodyn.

Every error raised by the library derives from `PseudodynError`, so callers
can catch the whole family at once or pick out a specific failure. Errors
carry their context (the offending point, word prefix, patch names, ...) as
attributes so that reports and the CLI can show precise diagnostics.

Example:
    from pseudodyn import orbit_ball
    from pseudodyn.exceptions import ExplosionGuardError, OutsideDomainError

    try:
        ball = orbit_ball(system, seed, radius=40)
    except ExplosionGuardError as e:
        print(f"ball too large: more than {e.limit} {e.what}")
"""

from __future__ import annotations

from typing import Any


class PseudodynError(Exception):
    """Base exception for all pseudodyn errors.

    Attributes:
        module: Name of the library module the error belongs to. Used by
            the CLI to prefix diagnostics.
    """

    module: str = "pseudodyn"


class ConfigurationError(PseudodynError):
    """Raised when an environment override or config value is invalid."""

    module = "config"

    def __init__(self, name: str, value: str, reason: str) -> None:
        """Initialize a ConfigurationError.

        Args:
            name: The setting (or environment variable) name.
            value: The rejected raw value.
            reason: Why the value was rejected.
        """
        self.name = name
        self.value = value
        self.reason = reason
        super().__init__(f"{name}={value!r}: {reason}")


# ---------------------------------------------------------------------------
# exact arithmetic
# ---------------------------------------------------------------------------


class FieldMismatchError(PseudodynError):
    """Raised when two irrational scalars from different fields are combined."""

    module = "exactnum"

    def __init__(self, d1: int, d2: int) -> None:
        """Initialize a FieldMismatchError.

        Args:
            d1: Discriminant of the first operand.
            d2: Discriminant of the second operand.
        """
        self.d1 = d1
        self.d2 = d2
        super().__init__(f"cannot combine Q(sqrt({d1})) with Q(sqrt({d2}))")


# ---------------------------------------------------------------------------
# local maps
# ---------------------------------------------------------------------------


class OutsideDomainError(PseudodynError):
    """Raised when a map is evaluated (or its germ taken) outside its domain.

    Attributes:
        point: The offending point.
    """

    module = "localmaps"

    def __init__(self, point: Any, map_name: str | None = None) -> None:
        """Initialize an OutsideDomainError.

        Args:
            point: The point outside the domain.
            map_name: Optional name of the map that was evaluated.
        """
        self.point = point
        self.map_name = map_name
        where = f" of {map_name}" if map_name else ""
        super().__init__(f"point {point} is outside the domain{where}")


class IntervalNotInDomainError(PseudodynError):
    """Raised when an interval is required to lie inside a map's domain."""

    module = "localmaps"

    def __init__(self, interval: Any) -> None:
        """Initialize an IntervalNotInDomainError.

        Args:
            interval: The interval that is not contained in the domain.
        """
        self.interval = interval
        super().__init__(f"interval {interval} is not contained in the domain")


class InvalidMapError(PseudodynError):
    """Raised when a partial map violates its structural invariants."""

    module = "localmaps"

    def __init__(self, reason: str) -> None:
        """Initialize an InvalidMapError.

        Args:
            reason: Which invariant failed.
        """
        self.reason = reason
        super().__init__(f"invalid partial map: {reason}")


# ---------------------------------------------------------------------------
# orbit engine
# ---------------------------------------------------------------------------


class WordDomainError(PseudodynError):
    """Raised when a word cannot be evaluated at a point.

    Attributes:
        prefix_length: Number of letters applied successfully before the
            first letter whose domain excludes the running point.
        point: The running point at which evaluation stopped.
    """

    module = "pseudogroup"

    def __init__(self, prefix_length: int, point: Any, label: str) -> None:
        """Initialize a WordDomainError.

        Args:
            prefix_length: Letters applied before the failure.
            point: The running point that left the domain.
            label: The generator label that could not be applied.
        """
        self.prefix_length = prefix_length
        self.point = point
        self.label = label
        super().__init__(
            f"word undefined after prefix of length {prefix_length}: "
            f"{label} is not defined at {point}"
        )


class ExplosionGuardError(PseudodynError):
    """Raised when an enumeration exceeds its configured cap.

    Distances are never reported from a truncated ball, so hitting the cap
    is always an error.
    """

    module = "pseudogroup"

    def __init__(self, limit: int, what: str = "nodes") -> None:
        """Initialize an ExplosionGuardError.

        Args:
            limit: The cap that was exceeded.
            what: What was being counted (nodes, words, ...).
        """
        self.limit = limit
        self.what = what
        super().__init__(
            f"explosion guard: more than {limit} {what}; raise the cap with "
            "PSEUDODYN_NODE_CAP or lower the radius"
        )


# ---------------------------------------------------------------------------
# recurrence
# ---------------------------------------------------------------------------


class InvalidParametersError(PseudodynError):
    """Raised when the non-recurrent example parameters violate a condition.

    Attributes:
        bullet: Human-readable statement of the violated condition.
    """

    module = "recurrence"

    def __init__(self, bullet: str) -> None:
        """Initialize an InvalidParametersError.

        Args:
            bullet: The condition that failed.
        """
        self.bullet = bullet
        super().__init__(f"invalid example parameters: {bullet}")


class OrbitMismatchError(PseudodynError):
    """Raised when a sampled pair is connected in one system but not the other."""

    module = "recurrence"

    def __init__(self, x: Any, y: Any, connected_in: str) -> None:
        """Initialize an OrbitMismatchError.

        Args:
            x: First point of the pair.
            y: Second point of the pair.
            connected_in: Name of the system that connects the pair.
        """
        self.x = x
        self.y = y
        self.connected_in = connected_in
        super().__init__(
            f"pair ({x}, {y}) is connected in {connected_in} only "
            "within the radius budget"
        )


# ---------------------------------------------------------------------------
# Følner analysis
# ---------------------------------------------------------------------------


class InsufficientMarginError(PseudodynError):
    """Raised when a ball is too small to decide a boundary exactly."""

    module = "folner"

    def __init__(self, required: int, available: int) -> None:
        """Initialize an InsufficientMarginError.

        Args:
            required: Radius the computation needs.
            available: Radius of the ball that was supplied.
        """
        self.required = required
        self.available = available
        super().__init__(
            f"insufficient margin: need ball radius {required}, have {available}"
        )


class SupportViolationError(PseudodynError):
    """Raised when a test function is nonzero outside the image of a generator."""

    module = "folner"

    def __init__(self, point: Any, generator: str) -> None:
        """Initialize a SupportViolationError.

        Args:
            point: A point of the set where f is nonzero but not in im g.
            generator: The generator label.
        """
        self.point = point
        self.generator = generator
        super().__init__(f"f({point}) != 0 but {point} is not in im {generator}")


# ---------------------------------------------------------------------------
# coarse geometry
# ---------------------------------------------------------------------------


class EmptySetError(PseudodynError):
    """Raised when a Hausdorff distance involves an empty set."""

    module = "coarse"

    def __init__(self) -> None:
        """Initialize an EmptySetError."""
        super().__init__("Hausdorff distance requires nonempty sets")


class MissingExtensionError(PseudodynError):
    """Raised when a generator has no bar extension."""

    module = "localmaps"

    def __init__(self, name: str) -> None:
        """Initialize a MissingExtensionError.

        Args:
            name: Generator label without an extension.
        """
        self.name = name
        super().__init__(f"generator {name!r} has no bar extension")


class ExtensionDomainError(PseudodynError):
    """Raised when a bar-extended word does not cover the required interval.

    Attributes:
        prefix_length: Length of the shortest prefix whose extended
            composite no longer contains the interval.
    """

    module = "equicont"

    def __init__(self, prefix_length: int, interval: Any) -> None:
        """Initialize an ExtensionDomainError.

        Args:
            prefix_length: Failing prefix length.
            interval: The interval that must be covered.
        """
        self.prefix_length = prefix_length
        self.interval = interval
        super().__init__(
            f"extended word prefix of length {prefix_length} is not defined "
            f"on {interval}"
        )


class WellDefinednessError(PseudodynError):
    """Raised when two words reaching one point transport the target differently."""

    module = "coarse"

    def __init__(self, point: Any, word_a: str, word_b: str) -> None:
        """Initialize a WellDefinednessError.

        Args:
            point: The source point reached by both words.
            word_a: First witness word.
            word_b: Second witness word.
        """
        self.point = point
        self.word_a = word_a
        self.word_b = word_b
        super().__init__(
            f"words {word_a!r} and {word_b!r} both reach {point} but "
            "transport the target base to different points"
        )


class NontrivialGermError(PseudodynError):
    """Raised when a stabilizing word has a nontrivial germ."""

    module = "coarse"

    def __init__(self, point: Any, word: str) -> None:
        """Initialize a NontrivialGermError.

        Args:
            point: The base point.
            word: A word fixing the point with a nontrivial germ.
        """
        self.point = point
        self.word = word
        super().__init__(f"word {word!r} fixes {point} with a nontrivial germ")


class RadiusInsufficientError(PseudodynError):
    """Raised when distance statistics cannot be certified at the given radius."""

    module = "coarse"

    def __init__(self, radius: int, reason: str) -> None:
        """Initialize a RadiusInsufficientError.

        Args:
            radius: The radius in use.
            reason: What could not be certified.
        """
        self.radius = radius
        self.reason = reason
        super().__init__(f"radius {radius} insufficient: {reason}")


# ---------------------------------------------------------------------------
# equicontinuity
# ---------------------------------------------------------------------------


class NotDenseError(PseudodynError):
    """Raised when an orbit ball never becomes dense within the budget."""

    module = "equicont"

    def __init__(self, rmax: int, largest_gap: Any) -> None:
        """Initialize a NotDenseError.

        Args:
            rmax: The exhausted radius budget.
            largest_gap: Largest gap left at radius rmax.
        """
        self.rmax = rmax
        self.largest_gap = largest_gap
        super().__init__(
            f"orbit ball not dense within radius {rmax} (largest gap {largest_gap})"
        )


# ---------------------------------------------------------------------------
# metric gluing
# ---------------------------------------------------------------------------


class OverlapDisagreementError(PseudodynError):
    """Raised when two patch tables disagree on a shared pair in local mode."""

    module = "metrization"

    def __init__(self, point_a: str, point_b: str, patches: tuple[str, str]) -> None:
        """Initialize an OverlapDisagreementError.

        Args:
            point_a: First point of the pair.
            point_b: Second point of the pair.
            patches: The two disagreeing patch names.
        """
        self.point_a = point_a
        self.point_b = point_b
        self.patches = patches
        super().__init__(
            f"patches {patches[0]!r} and {patches[1]!r} disagree on "
            f"({point_a}, {point_b})"
        )


# ---------------------------------------------------------------------------
# scenarios
# ---------------------------------------------------------------------------


class ScenarioError(PseudodynError):
    """Base exception for scenario and atlas ingestion errors."""

    module = "scenario"


class ScenarioParseError(ScenarioError):
    """Raised when a scenario file is not valid JSON or misses a field.

    Attributes:
        field: Dotted path of the offending field, if known.
        line: Line number in the file, if known.
    """

    def __init__(
        self,
        message: str,
        *,
        field: str | None = None,
        line: int | None = None,
    ) -> None:
        """Initialize a ScenarioParseError.

        Args:
            message: What went wrong.
            field: Dotted field path.
            line: Line number in the source file.
        """
        self.message = message
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        prefix = f"[{', '.join(where)}] " if where else ""
        super().__init__(f"{prefix}{message}")


class ScenarioValidationError(ScenarioError):
    """Raised when a parsed scenario violates a named invariant.

    Attributes:
        invariant: Name of the first violated invariant.
        errors: Structured details (pydantic-style error dicts).
    """

    def __init__(
        self,
        invariant: str,
        message: str,
        errors: list[dict[str, Any]] | None = None,
    ) -> None:
        """Initialize a ScenarioValidationError.

        Args:
            invariant: The violated invariant's name.
            message: Human-readable description.
            errors: Optional structured error details.
        """
        self.invariant = invariant
        self.message = message
        self.errors = errors or []
        super().__init__(f"{invariant}: {message}")


# ---------------------------------------------------------------------------
# self-test
# ---------------------------------------------------------------------------


class AcceptanceError(PseudodynError):
    """Raised by an acceptance check whose expected property does not hold."""

    module = "selftest"

    def __init__(self, number: int, message: str) -> None:
        """Initialize an AcceptanceError.

        Args:
            number: The failing criterion.
            message: What was observed.
        """
        self.number = number
        self.message = message
        super().__init__(f"criterion {number}: {message}")
