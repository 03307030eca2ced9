"""Exact partial homeomorphisms of the line and circle."""

from pseudodyn.localmaps.intervals import DomainSet, Interval
from pseudodyn.localmaps.moebius import MoebiusMap
from pseudodyn.localmaps.partial import (
    Germ,
    PartialMap,
    Piece,
    Space,
    apply,
    combine,
    compose,
    germ_at,
    germ_equal,
    invert,
    is_identity_on,
    restrict,
)
from pseudodyn.localmaps.system import GeneratorSystem, inverse_label

__all__ = [
    "DomainSet",
    "GeneratorSystem",
    "Germ",
    "Interval",
    "MoebiusMap",
    "PartialMap",
    "Piece",
    "Space",
    "apply",
    "combine",
    "compose",
    "germ_at",
    "germ_equal",
    "inverse_label",
    "invert",
    "is_identity_on",
    "restrict",
]
