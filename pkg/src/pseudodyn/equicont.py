"""Equicontinuity moduli, word extensions, propagation and density audits.

Strong equicontinuity is audited with S taken as all defined composites of
at most L generators. Distances are the ambient ones: |x - y| on the line
and arc length on the circle.

The candidate modulus for one ε is

    δ(ε) = min( min{d(x, y) : d(hx, hy) >= ε},  ε · min{d(x, y) / d(hx, hy)} )

over every tested instance (h, x, y). It is non-decreasing in ε and equals ε
exactly when every tested composite is an isometry.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

from pseudodyn._config import EngineConfig, default_config
from pseudodyn.exactnum import Scalar
from pseudodyn.exceptions import (
    ExplosionGuardError,
    ExtensionDomainError,
    NotDenseError,
    OutsideDomainError,
    WordDomainError,
)
from pseudodyn.localmaps import (
    DomainSet,
    GeneratorSystem,
    Interval,
    MoebiusMap,
    PartialMap,
    Space,
    compose,
    is_identity_on,
)
from pseudodyn.models.equicont import (
    ABReport,
    ABViolation,
    DensityResult,
    MinimalityWitness,
    ModulusRow,
    ModulusTable,
    QuasiEffectiveReport,
    QuasiEffectiveViolation,
)
from pseudodyn.pseudogroup import (
    Word,
    enumerate_words,
    evaluate_word,
    find_word,
    orbit_ball,
)

logger = logging.getLogger(__name__)


def _joint_images(
    system: GeneratorSystem,
    x: Scalar,
    y: Scalar,
    max_length: int,
    config: EngineConfig | None,
) -> list[tuple[Word, Scalar, Scalar]]:
    """Reduced words of length <= max_length defined at both x and y."""
    at_y = dict(enumerate_words(system, y, max_length, config=config).iter())
    return [
        (word, fx, at_y[word])
        for word, fx in enumerate_words(system, x, max_length, config=config)
        if word in at_y
    ]


# ---------------------------------------------------------------------------
# moduli
# ---------------------------------------------------------------------------


def modulus_estimate(
    system: GeneratorSystem,
    max_length: int,
    eps_grid: Iterable[Any],
    pairs: Iterable[tuple[Any, Any]],
    *,
    config: EngineConfig | None = None,
) -> ModulusTable:
    """Candidate δ(ε) for every ε of the grid.

    Args:
        system: Generator system.
        max_length: Longest composite tested (L >= 1).
        eps_grid: The ε values (positive).
        pairs: Sample point pairs; equal points are skipped.
        config: Engine limits.

    Raises:
        ExplosionGuardError: If word enumeration exceeds the word cap.
    """
    if max_length < 1:
        raise ValueError("max_length must be >= 1")
    grid = sorted(dict.fromkeys(Scalar.coerce(e) for e in eps_grid))
    if any(e.sign() <= 0 for e in grid):
        raise ValueError("eps values must be positive")

    # instances grouped by word length: (d(x, y), d(hx, hy))
    by_length: dict[int, list[tuple[Scalar, Scalar]]] = {
        n: [] for n in range(1, max_length + 1)
    }
    count = 0
    for raw_x, raw_y in pairs:
        x, y = system.normalize(raw_x), system.normalize(raw_y)
        if x == y:
            continue
        before = system.distance(x, y)
        for word, fx, fy in _joint_images(system, x, y, max_length, config):
            if not word.labels:
                continue
            by_length[len(word)].append((before, system.distance(fx, fy)))
            count += 1

    rows = []
    for eps in grid:
        hit: Scalar | None = None
        ratio: Scalar | None = None
        history: list[Scalar | None] = []
        for n in range(1, max_length + 1):
            for before, after in by_length[n]:
                if after >= eps and (hit is None or before < hit):
                    hit = before
                q = before / after
                if ratio is None or q < ratio:
                    ratio = q
            scaled = None if ratio is None else eps * ratio
            candidates = [v for v in (hit, scaled) if v is not None]
            history.append(min(candidates) if candidates else None)
        known = [d for d in history if d is not None]
        rows.append(
            ModulusRow(
                eps=eps,
                delta=history[-1],
                by_length=tuple(history),
                shrinking=any(b < a for a, b in zip(known, known[1:], strict=False)),
            )
        )
    logger.debug("Modulus table from %d instances up to length %d", count, max_length)
    return ModulusTable(max_length=max_length, rows=tuple(rows), instances=count)


@dataclass(frozen=True)
class TranslationCombination:
    """A combination of two translations on a disconnected domain.

    h is the identity on (a, a + r) and x -> x + b - a - 2r on
    (a + r, a + 2r). The pairs straddle a + r, so their distance goes to 0
    while the distance of their images stays above ``gap``.
    """

    h: PartialMap
    system: GeneratorSystem
    gap: Scalar
    a: Scalar
    r: Scalar

    def pair(self, n: int) -> tuple[Scalar, Scalar]:
        """(a + (n-1)r/n, a + (n+1)r/n) for n >= 2."""
        if n < 2:
            raise ValueError("pairs start at n = 2")
        return self.a + self.r * (n - 1) / n, self.a + self.r * (n + 1) / n

    def pairs(self, count: int) -> list[tuple[Scalar, Scalar]]:
        return [self.pair(n) for n in range(2, count + 2)]


def translation_combination_example(a: Any, b: Any, r: Any) -> TranslationCombination:
    """Build the combined translation map and its one-generator system.

    Raises:
        ValueError: Unless 0 < r < (b - a) / 3.
    """
    lo, hi, step = Scalar.coerce(a), Scalar.coerce(b), Scalar.coerce(r)
    if not (step.sign() > 0 and 3 * step < hi - lo):
        raise ValueError("need 0 < r < (b - a) / 3")
    shift = hi - lo - 2 * step
    h = PartialMap.line_map(
        [
            (Interval.open(lo, lo + step), MoebiusMap.identity()),
            (Interval.open(lo + step, lo + 2 * step), MoebiusMap.translation(shift)),
        ]
    )
    return TranslationCombination(
        h=h,
        system=GeneratorSystem(Space.LINE, [("h", h)]),
        gap=shift,
        a=lo,
        r=step,
    )


# ---------------------------------------------------------------------------
# word extensions and propagation
# ---------------------------------------------------------------------------


def extend_word_over(
    system: GeneratorSystem,
    word: Word | Sequence[str],
    x: Any,
    window: Interval,
) -> PartialMap:
    """Compose the bar extensions along a word and check they cover the window.

    Raises:
        OutsideDomainError: If x is not in the window.
        WordDomainError: If the word is not defined at x.
        MissingExtensionError: If a generator has no bar extension.
        ExtensionDomainError: Naming the first prefix whose extension does
            not contain the window.
    """
    point = system.normalize(x)
    if not window.contains(point):
        raise OutsideDomainError(point)
    labels = tuple(word)
    evaluate_word(system, labels, point)
    extended = PartialMap.identity(system.space, DomainSet.of(window))
    for i, label in enumerate(labels, start=1):
        extended = compose(system.bar(label), extended)
        if not extended.domain.contains_interval(window):
            raise ExtensionDomainError(i, window)
    return extended


def ab_propagation_check(
    system: GeneratorSystem,
    a: DomainSet,
    b: DomainSet,
    pairs: Iterable[tuple[Any, Any]],
    max_length: int,
    *,
    config: EngineConfig | None = None,
) -> ABReport:
    """Check f(x) ∈ A ⟹ f(y) ∈ B over words defined at both points.

    Raises:
        ValueError: If the closure of A is not a compact subset of B.
    """
    if system.space is Space.LINE and not a.is_bounded:
        raise ValueError("A must be bounded")
    if not b.contains_closure_of(a):
        raise ValueError("the closure of A must lie inside B")

    violations: list[ABViolation] = []
    clean: list[Scalar] = []
    bad: list[Scalar] = []
    words = 0
    n_pairs = 0
    for raw_x, raw_y in pairs:
        x, y = system.normalize(raw_x), system.normalize(raw_y)
        n_pairs += 1
        separation = system.distance(x, y)
        found = False
        for word, fx, fy in _joint_images(system, x, y, max_length, config):
            words += 1
            if a.contains(fx) and not b.contains(fy):
                found = True
                violations.append(
                    ABViolation(x=x, y=y, word=word.labels, fx=fx, fy=fy)
                )
        (bad if found else clean).append(separation)

    limit = min(bad) if bad else None
    safe = [s for s in clean if limit is None or s < limit]
    return ABReport(
        pairs_checked=n_pairs,
        words_checked=words,
        violations=tuple(violations),
        safe_separation=max(safe) if safe else None,
    )


# ---------------------------------------------------------------------------
# density and minimality
# ---------------------------------------------------------------------------


def _largest_gap(
    system: GeneratorSystem, points: Iterable[Scalar], region: Interval
) -> Scalar:
    inside = sorted({p for p in points if region.contains(p)})
    lo, hi = Scalar.coerce(region.lo), Scalar.coerce(region.hi)
    cyclic = system.space is Space.CIRCLE and lo.sign() == 0 and hi == 1
    if not inside:
        return hi - lo
    gaps = [q - p for p, q in zip(inside, inside[1:], strict=False)]
    if cyclic:
        gaps.append(1 - inside[-1] + inside[0])
    else:
        gaps.extend([inside[0] - lo, hi - inside[-1]])
    return max(gaps)


def orbit_density(
    system: GeneratorSystem,
    x: Any,
    region: Interval,
    eps: Any,
    rmax: int,
    *,
    config: EngineConfig | None = None,
) -> DensityResult:
    """Smallest R <= rmax with ball(x, R) ε-dense in a bounded region.

    ε-dense means every subinterval of length 2ε meets the ball, that is
    every gap (region ends included, cyclic on the full circle) is <= 2ε.

    Raises:
        NotDenseError: If no radius up to rmax works.
    """
    if not region.is_bounded:
        raise ValueError("region must be bounded")
    bound = 2 * Scalar.coerce(eps)
    ball = orbit_ball(system, x, rmax, config=config)
    gap = _largest_gap(system, [], region)
    for radius in range(rmax + 1):
        points = ball.points(radius)
        gap = _largest_gap(system, points, region)
        if gap <= bound:
            return DensityResult(
                radius=radius,
                largest_gap=gap,
                points_in_region=sum(1 for p in points if region.contains(p)),
            )
        if len(points) == len(ball):
            break
    raise NotDenseError(rmax, gap)


def minimality_witness(
    system: GeneratorSystem,
    x: Any,
    y: Any,
    eps: Any,
    rmax: int,
    *,
    config: EngineConfig | None = None,
) -> MinimalityWitness:
    """A shortest word w with d(w x, y) < ε, and d(w⁻¹ y, x).

    Raises:
        NotDenseError: If no point of ball(x, rmax) comes within ε of y.
    """
    target = system.normalize(y)
    bound = Scalar.coerce(eps)
    found = find_word(
        system, x, rmax, lambda p: system.distance(p, target) < bound, config=config
    )
    if found is None:
        ball = orbit_ball(system, x, rmax, config=config)
        closest = min(system.distance(p, target) for p in ball.nodes)
        raise NotDenseError(rmax, closest)
    word, image = found
    try:
        back = evaluate_word(system, word.inverse(system), target)
        reverse: Scalar | None = system.distance(back, system.normalize(x))
    except WordDomainError:
        reverse = None
    return MinimalityWitness(
        word=word.labels,
        image=image,
        forward_distance=system.distance(image, target),
        reverse_distance=reverse,
    )


# ---------------------------------------------------------------------------
# quasi-effectiveness
# ---------------------------------------------------------------------------


def _locally_identity(f: PartialMap, samples: Sequence[Interval] | None) -> bool:
    if samples is None:
        return any(p.moebius.is_identity and not p.interval.is_point for p in f.pieces)
    return any(
        f.domain.contains_interval(s) and not s.is_point and is_identity_on(f, s)
        for s in samples
    )


def quasi_effective_check(
    system: GeneratorSystem,
    max_length: int,
    samples: Sequence[Interval] | None = None,
    *,
    config: EngineConfig | None = None,
) -> QuasiEffectiveReport:
    """Composites that are locally the identity must be so on their whole domain.

    Every freely reduced word of length 1..L is composed into a partial map.
    Local identity is detected on the sampled sub-intervals, or on any
    identity piece of positive length when no samples are given. The domain
    may be disconnected: an identity piece on one component and a moving
    piece on another is a violation.

    Raises:
        ExplosionGuardError: If the number of composites exceeds the word cap.
    """
    if max_length < 1:
        raise ValueError("max_length must be >= 1")
    cap = (config or default_config()).word_cap
    layer: list[tuple[Word, PartialMap]] = [(Word(), PartialMap.identity(system.space))]
    violations: list[QuasiEffectiveViolation] = []
    checked = 0
    for _ in range(max_length):
        nxt: list[tuple[Word, PartialMap]] = []
        for word, f in layer:
            banned = system.inverse_of(word.labels[-1]) if word.labels else None
            for label, g in system:
                if label == banned:
                    continue
                h = compose(g, f)
                if h.is_empty:
                    continue
                checked += 1
                if checked > cap:
                    logger.warning("Composite enumeration exceeded cap %d", cap)
                    raise ExplosionGuardError(cap, "words")
                longer = word.then(label)
                if _locally_identity(h, samples) and not all(
                    p.moebius.is_identity for p in h.pieces
                ):
                    violations.append(
                        QuasiEffectiveViolation(word=longer.labels, domain=repr(h.domain))
                    )
                nxt.append((longer, h))
        layer = nxt
    return QuasiEffectiveReport(words_checked=checked, violations=tuple(violations))
