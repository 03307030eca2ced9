"""Symmetric generator systems with optional bar extensions."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping, Sequence
from typing import Any

from pseudodyn.exactnum import Scalar
from pseudodyn.exceptions import InvalidMapError, MissingExtensionError
from pseudodyn.localmaps.intervals import DomainSet
from pseudodyn.localmaps.partial import PartialMap, Space, invert, restrict

logger = logging.getLogger(__name__)

INVERSE_SUFFIX = "^-1"


def inverse_label(name: str) -> str:
    """Default label of the inverse of ``name`` (involutive)."""
    if name.endswith(INVERSE_SUFFIX):
        return name[: -len(INVERSE_SUFFIX)]
    return name + INVERSE_SUFFIX


def _closure_inside(space: Space, inner: DomainSet, outer: DomainSet) -> bool:
    if space is Space.CIRCLE and outer == DomainSet.circle():
        return True
    return outer.contains_closure_of(inner)


class GeneratorSystem:
    """A finite symmetric family of named partial maps.

    Generators keep their declaration order, which also fixes BFS tie-breaking.
    Missing inverses are added as ``name^-1``. When a bar table is given,
    every generator g must satisfy: dom g is relatively compact, the closure
    of dom g lies in dom ḡ, and ḡ restricted to dom g equals g. Passing
    ``validate_bars=False`` skips these checks.

    Example:
        r = PartialMap.rotation(Fraction(2, 5))
        system = GeneratorSystem(Space.CIRCLE, [("r", r)])
        system.labels  # ("r", "r^-1")
    """

    def __init__(
        self,
        space: Space,
        generators: Sequence[tuple[str, PartialMap]],
        *,
        inverses: Mapping[str, str] | None = None,
        bars: Mapping[str, PartialMap] | None = None,
        window: DomainSet | None = None,
        validate_bars: bool = True,
    ) -> None:
        self.space = Space(space)
        self._maps: dict[str, PartialMap] = {}
        self._inverse: dict[str, str] = {}
        self.auto_completed: tuple[str, ...] = ()

        for name, f in generators:
            if name in self._maps:
                raise InvalidMapError(f"duplicate generator name {name!r}")
            if f.space is not self.space:
                raise InvalidMapError(f"generator {name!r} acts on {f.space.value}")
            if self.space is Space.LINE and not f.domain.is_open:
                raise InvalidMapError(f"generator {name!r} has a non-open domain {f.domain}")
            self._maps[name] = f

        for name, partner in (inverses or {}).items():
            if name not in self._maps or partner not in self._maps:
                raise InvalidMapError(f"inverse pair ({name!r}, {partner!r}) names an unknown map")
            if not invert(self._maps[name]).agrees_with(self._maps[partner]):
                raise InvalidMapError(f"{partner!r} is not the inverse of {name!r}")
            self._inverse[name] = partner
            self._inverse[partner] = name

        added: list[str] = []
        for name in list(self._maps):
            if name in self._inverse:
                continue
            f = self._maps[name]
            inv = invert(f)
            if inv.agrees_with(f):
                self._inverse[name] = name
                continue
            partner = inverse_label(name)
            if partner in self._maps:
                if not self._maps[partner].agrees_with(inv):
                    raise InvalidMapError(f"{partner!r} is not the inverse of {name!r}")
            else:
                self._maps[partner] = inv
                added.append(partner)
            self._inverse[name] = partner
            self._inverse[partner] = name
        if added:
            logger.info("Auto-completed inverses: %s", ", ".join(added))
        self.auto_completed = tuple(added)

        self._bars: dict[str, PartialMap] = {}
        if bars:
            self._install_bars(bars, validate=validate_bars)

        if window is None:
            window = DomainSet(())
            for f in self._maps.values():
                window = window | f.domain
        self.window = window

    def _install_bars(self, bars: Mapping[str, PartialMap], *, validate: bool) -> None:
        table = dict(bars)
        for name, ext in list(table.items()):
            if name not in self._maps:
                raise InvalidMapError(f"bar extension for unknown generator {name!r}")
            partner = self._inverse[name]
            if partner not in table:
                table[partner] = invert(ext)
        if not validate:
            logger.warning("Bar extensions installed without validation")
            self._bars = table
            return
        for name, ext in table.items():
            g = self._maps[name]
            if self.space is Space.LINE and not g.domain.is_bounded:
                raise InvalidMapError(f"dom {name} is not relatively compact")
            if not _closure_inside(self.space, g.domain, ext.domain):
                raise InvalidMapError(f"closure of dom {name} is not inside dom of its extension")
            if not restrict(ext, g.domain).agrees_with(g):
                raise InvalidMapError(f"extension of {name} does not restrict to {name}")
        self._bars = table

    # -- queries -----------------------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self._maps)

    def __getitem__(self, label: str) -> PartialMap:
        return self._maps[label]

    def __contains__(self, label: object) -> bool:
        return label in self._maps

    def __iter__(self) -> Iterator[tuple[str, PartialMap]]:
        return iter(self._maps.items())

    def __len__(self) -> int:
        return len(self._maps)

    def inverse_of(self, label: str) -> str:
        return self._inverse[label]

    @property
    def has_bars(self) -> bool:
        return bool(self._bars)

    def bar(self, label: str) -> PartialMap:
        """The bar extension of a generator.

        Raises:
            MissingExtensionError: If no extension was declared.
        """
        try:
            return self._bars[label]
        except KeyError:
            raise MissingExtensionError(label) from None

    def distance(self, x: Scalar, y: Scalar) -> Scalar:
        """Ambient distance: |x - y| on the line, arc length on the circle."""
        gap = abs(x - y)
        if self.space is Space.CIRCLE:
            gap = gap.frac()
            other = 1 - gap
            return other if other < gap else gap
        return gap

    def normalize(self, x: Any) -> Scalar:
        s = Scalar.coerce(x)
        if self.space is Space.CIRCLE:
            return s.frac()
        return s

    # -- derived systems ---------------------------------------------------

    def extended(self, extra: Sequence[tuple[str, PartialMap]]) -> GeneratorSystem:
        """A larger system E ∪ extra over the same window (bars are dropped)."""
        base = [(name, f) for name, f in self._maps.items()]
        return GeneratorSystem(
            self.space,
            base + list(extra),
            inverses={k: v for k, v in self._inverse.items() if k != v},
            window=self.window,
        )

    def __repr__(self) -> str:
        return f"GeneratorSystem({self.space.value}, labels={list(self._maps)})"
