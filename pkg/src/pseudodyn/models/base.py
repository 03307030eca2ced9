"""Base models shared across pseudodyn reports.

Reports are frozen pydantic models. Exact values (`Scalar`, `Fraction`) are
carried as-is in Python and dumped as exact strings in JSON mode.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer

from pseudodyn.exactnum import Infinity, Scalar


def _exact_str(value: Any) -> str:
    return str(value)


def _as_fraction(value: Any) -> Any:
    # "1/3", 2 and "0.25" are accepted; bools are left for pydantic to reject
    if isinstance(value, bool | Fraction):
        return value
    if isinstance(value, int | str):
        try:
            return Fraction(value)
        except ValueError:
            return value
    if isinstance(value, float):
        return Fraction(str(value))
    return value


ExactScalar = Annotated[Scalar, PlainSerializer(_exact_str, return_type=str)]
"""A Scalar field, serialized as its exact string."""

ExactRational = Annotated[
    Fraction,
    BeforeValidator(_as_fraction),
    PlainSerializer(_exact_str, return_type=str),
]
"""A Fraction field, serialized as "num/den"."""

ExactValue = Annotated[
    Scalar | Fraction | Infinity, PlainSerializer(_exact_str, return_type=str)
]
"""Either kind of exact number, or an ideal endpoint."""


class PseudodynModel(BaseModel):
    """Base for every report and record model.

    All reports are immutable snapshots of a finished computation.
    """

    model_config = ConfigDict(
        frozen=True,
        arbitrary_types_allowed=True,
        extra="forbid",
    )
