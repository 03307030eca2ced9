"""Recurrence audits and the non-recurrent example on the line.

A generator system is recurrent when every word-metric ball of some fixed
radius, in every orbit, meets the window. Sampling can only give evidence,
so the audits here report hitting distances and distance ratios rather than
verdicts.

The non-recurrent example lives on U = (a, b). A hyperbolic Möbius map g̃₁
fixes a and b, and a homeomorphism φ: R -> (a, b) fixes [a'', b'']. The
system E = {g₁, g₂} (restrictions to U of g̃₁ and g̃₂ = φ g̃₁ φ⁻¹) has hitting
distances to V = (a', b) that blow up near a.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from pseudodyn._config import EngineConfig
from pseudodyn.exactnum import NEG_INF, POS_INF, Scalar
from pseudodyn.exceptions import InvalidParametersError, OrbitMismatchError
from pseudodyn.localmaps import (
    DomainSet,
    GeneratorSystem,
    Interval,
    MoebiusMap,
    PartialMap,
    Space,
    combine,
    compose,
    invert,
    restrict,
)
from pseudodyn.models.recurrence import (
    BiLipschitzReport,
    BiLipschitzWitness,
    HittingEntry,
    RecurrenceProfile,
    Section6Params,
)
from pseudodyn.pseudogroup import distances_to, hitting_search, orbit_ball

logger = logging.getLogger(__name__)

_NU_ITERATION_LIMIT = 1_000_000


def recurrence_profile(
    system: GeneratorSystem,
    window: DomainSet,
    seeds: Iterable[Any],
    rmax: int,
    *,
    nu: Any = None,
    config: EngineConfig | None = None,
) -> RecurrenceProfile:
    """Hitting distance d_E(x, U ∩ orbit(x)) for each seed, up to rmax.

    Args:
        system: Generator system.
        window: The window U.
        seeds: Starting points.
        rmax: Radius budget per seed.
        nu: Optional callable reported alongside each distance.
        config: Engine limits.
    """
    entries = []
    for seed in seeds:
        x = system.normalize(seed)
        dist, hit = hitting_search(system, x, rmax, window.contains, config=config)
        entries.append(
            HittingEntry(
                seed=x,
                hit_distance=dist,
                hit_point=hit,
                nu=nu(x) if nu is not None else None,
            )
        )
    return RecurrenceProfile(window=repr(window), rmax=rmax, entries=tuple(entries))


def window_hitting_bound(
    system: GeneratorSystem,
    seeds: Iterable[Any],
    *,
    window: DomainSet | None = None,
    rmax: int = 1,
    config: EngineConfig | None = None,
) -> int | None:
    """Largest hitting distance into the window using the bar extensions.

    Seeds may lie outside the window (typically in a neighbourhood of its
    closure); each is moved by the extended generators. Returns None when
    some seed does not reach the window within rmax.
    """
    target = window if window is not None else system.window
    extended = system
    if system.has_bars:
        named = [(label, system.bar(label)) for label in system.labels]
        extended = GeneratorSystem(
            system.space,
            named,
            inverses={k: system.inverse_of(k) for k in system.labels},
        )
    profile = recurrence_profile(extended, target, seeds, rmax, config=config)
    return profile.max_distance


# ---------------------------------------------------------------------------
# the non-recurrent example
# ---------------------------------------------------------------------------


def _tilde_g1(p: Section6Params) -> PartialMap:
    a, b, lam = p.a, p.b, Scalar(p.lam)
    hyperbolic = MoebiusMap(b * lam - a, a * b * (1 - lam), lam - 1, b - a * lam)
    ident = MoebiusMap.identity()
    return PartialMap.line_map(
        [
            (Interval(NEG_INF, a, True, False), ident),
            (Interval.open(a, b), hyperbolic),
            (Interval(b, POS_INF, False, True), ident),
        ]
    )


def _phi(p: Section6Params) -> PartialMap:
    a, a1, a2, b2, b1, b = p.a, p.a1, p.a2, p.b2, p.b1, p.b
    c_left = p.left_shape if p.left_shape is not None else a1 - a
    c_right = p.right_shape if p.right_shape is not None else b - b1
    # x -> a' - (a' - a) t / (t + c), t = a - x
    left_tail = MoebiusMap(a, -a1 * c_left - a * a, 1, -(a + c_left))
    left_slope = (a2 - a1) / (a2 - a)
    left_bridge = MoebiusMap.affine(left_slope, a1 - left_slope * a)
    right_slope = (b1 - b2) / (b - b2)
    right_bridge = MoebiusMap.affine(right_slope, b2 - right_slope * b2)
    # x -> b' + (b - b') t / (t + c), t = x - b
    right_tail = MoebiusMap(b, b1 * c_right - b * b, 1, c_right - b)
    return PartialMap.line_map(
        [
            (Interval(NEG_INF, a, True, False), left_tail),
            (Interval.open(a, a2), left_bridge),
            (Interval.closed(a2, b2), MoebiusMap.identity()),
            (Interval.open(b2, b), right_bridge),
            (Interval(b, POS_INF, False, True), right_tail),
        ]
    )


@dataclass(frozen=True)
class Section6Example:
    """The assembled non-recurrent example.

    Attributes:
        params: The parameters it was built from.
        system: E = {g1, g2, g1^-1, g2^-1} on U with bar extensions.
        g1_tilde: Hyperbolic map fixing a and b, identity outside (a, b).
        g2_tilde: φ g̃₁ φ⁻¹ on (a, b), identity outside.
        phi: Homeomorphism of R onto (a, b), identity on [a'', b''].
        window: U = (a, b).
        target: V = (a', b).
    """

    params: Section6Params
    system: GeneratorSystem
    g1_tilde: PartialMap
    g2_tilde: PartialMap
    phi: PartialMap
    window: DomainSet
    target: DomainSet

    def nu(self, x: Any) -> int:
        """min{n >= 0 : g1^n(x) in V}."""
        point = Scalar.coerce(x)
        g1 = self.system["g1"]
        for n in range(_NU_ITERATION_LIMIT):
            if self.target.contains(point):
                return n
            nxt = g1.try_apply(point)
            if nxt is None:
                raise InvalidParametersError("nu is only defined on U")
            point = nxt
        raise InvalidParametersError("nu iteration did not reach V")

    def backward_orbit(self, x: Any, steps: int) -> list[Scalar]:
        """[x, g1^-1 x, ..., g1^-steps x]."""
        inv = self.system["g1^-1"]
        out = [Scalar.coerce(x)]
        for _ in range(steps):
            out.append(inv.apply(out[-1]))
        return out

    def __iter__(self) -> Any:
        # unpacks as (system, nu)
        return iter((self.system, self.nu))


def build_section6_example(params: Section6Params | None = None) -> Section6Example:
    """Build E, its bar extensions and the ν oracle.

    Raises:
        InvalidParametersError: Naming the violated condition.
    """
    p = params or Section6Params.default()
    g1_tilde = _tilde_g1(p)
    if not g1_tilde.apply(p.a2) < p.b2:
        raise InvalidParametersError("g~1(a'') < b''")
    logger.info("Checked g~1(a'') = %s < b'' = %s", g1_tilde.apply(p.a2), p.b2)

    phi = _phi(p)
    checks = {
        "phi(a) = a'": phi.apply(p.a) == p.a1,
        "phi(b) = b'": phi.apply(p.b) == p.b1,
        "phi is the identity on [a'', b'']": all(
            phi.apply(x) == x for x in (p.a2, (p.a2 + p.b2) / 2, p.b2)
        ),
        "phi(R) = (a, b)": phi.image == DomainSet.of(Interval.open(p.a, p.b)),
    }
    for bullet, ok in checks.items():
        if not ok:
            raise InvalidParametersError(bullet)
        logger.info("Checked %s", bullet)

    window = DomainSet.of(Interval.open(p.a, p.b))
    outside = DomainSet.of(
        Interval(NEG_INF, p.a, True, False), Interval(p.b, POS_INF, False, True)
    )
    inside = compose(phi, compose(g1_tilde, invert(phi)))
    g2_tilde = combine(inside, PartialMap.identity(Space.LINE, outside))

    system = GeneratorSystem(
        Space.LINE,
        [("g1", restrict(g1_tilde, window)), ("g2", restrict(g2_tilde, window))],
        bars={"g1": g1_tilde, "g2": g2_tilde},
        window=window,
    )
    return Section6Example(
        params=p,
        system=system,
        g1_tilde=g1_tilde,
        g2_tilde=g2_tilde,
        phi=phi,
        window=window,
        target=DomainSet.of(Interval.open(p.a1, p.b)),
    )


def recurrent_companion(example: Section6Example) -> GeneratorSystem:
    """F = E ∪ {φ|U, its inverse}: every seed of U reaches V in one step."""
    return example.system.extended([("phi", restrict(example.phi, example.window))])


def bilipschitz_audit(
    first: GeneratorSystem,
    second: GeneratorSystem,
    seeds: Sequence[Any],
    radius: int,
    *,
    rmax: int | None = None,
    config: EngineConfig | None = None,
) -> BiLipschitzReport:
    """Largest ratio between the two word metrics on sampled same-orbit pairs.

    Pairs are (x, z) with x a seed and z in the radius-ball of x for either
    system; the other system's distance is searched with budget rmax
    (default 2 * radius).

    Raises:
        OrbitMismatchError: If z is reachable in one system but not in the
            other within the budget.
    """
    budget = rmax if rmax is not None else 2 * radius
    best = Fraction(1)
    witness: BiLipschitzWitness | None = None
    per_seed: list[Fraction] = []
    checked = 0
    for seed in seeds:
        x = first.normalize(seed)
        ball_a = orbit_ball(first, x, radius, config=config)
        ball_b = orbit_ball(second, x, radius, config=config)
        need_b = [z for z in ball_a.nodes if z not in ball_b]
        need_a = [z for z in ball_b.nodes if z not in ball_a]
        far_b = distances_to(second, x, need_b, budget, config=config) if need_b else {}
        far_a = distances_to(first, x, need_a, budget, config=config) if need_a else {}
        seed_best = Fraction(1)
        for z in dict.fromkeys([*ball_a.nodes, *ball_b.nodes]):
            if z == x:
                continue
            d_a = ball_a.dist(z) if z in ball_a else far_a.get(z)
            d_b = ball_b.dist(z) if z in ball_b else far_b.get(z)
            if d_a is None:
                raise OrbitMismatchError(x, z, "second")
            if d_b is None:
                raise OrbitMismatchError(x, z, "first")
            pair = BiLipschitzWitness(x=x, z=z, d_first=d_a, d_second=d_b)
            checked += 1
            if pair.ratio > seed_best:
                seed_best = pair.ratio
            if pair.ratio > best:
                best, witness = pair.ratio, pair
        per_seed.append(seed_best)
    return BiLipschitzReport(
        constant=best,
        witness=witness,
        per_seed=tuple(per_seed),
        pairs_checked=checked,
    )
