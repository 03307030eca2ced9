"""Outcome of a self-test run."""

from __future__ import annotations

from pydantic import Field

from pseudodyn.models.base import PseudodynModel


class CriterionResult(PseudodynModel):
    """One acceptance criterion, checked.

    Attributes:
        number: Criterion number (1-10).
        title: Short description.
        passed: Whether the property held.
        detail: Observed values on success, the failure message otherwise.
        slow: Whether the criterion is in the slow set.
    """

    number: int = Field(ge=1, description="Criterion number")
    title: str = Field(description="Short description")
    passed: bool = Field(description="Whether the property held")
    detail: str = Field(default="", description="Observed values or failure message")
    slow: bool = Field(default=False, description="Member of the slow set")
