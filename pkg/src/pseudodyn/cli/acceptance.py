"""Acceptance checks run by ``pseudodyn selftest`` and the integration tests.

Each check is registered with `criterion` and either returns a short
summary of what it observed or raises `AcceptanceError`.

Example:
    results = run_criteria(only={1, 2}, include_slow=False)
    assert all(r.passed for r in results)
"""

from __future__ import annotations

import logging
import random
import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction

from pseudodyn._config import EngineConfig, default_config
from pseudodyn.coarse import distortion_stats, orbit_correspondence
from pseudodyn.equicont import orbit_density
from pseudodyn.exactnum import Scalar
from pseudodyn.exceptions import AcceptanceError, NotDenseError, PseudodynError
from pseudodyn.folner import (
    PiecewiseLinearFunction,
    a_cap_s_check,
    averaging_measure,
    graph_boundary,
    invariance_defect,
    r_boundary,
)
from pseudodyn.localmaps import DomainSet, GeneratorSystem, Interval, compose
from pseudodyn.metrization import (
    exhaustive_chain_metric,
    glue_metric,
    is_metric,
    lower_bound_check,
    random_line_atlas,
)
from pseudodyn.models.acceptance import CriterionResult
from pseudodyn.pseudogroup import (
    OrbitBall,
    brute_force_distances,
    orbit_ball,
    set_neighborhood,
)
from pseudodyn.recurrence import (
    Section6Example,
    bilipschitz_audit,
    build_section6_example,
    recurrence_profile,
)
from pseudodyn.scenario import load_bundled

logger = logging.getLogger(__name__)

Check = Callable[[EngineConfig], str]

SELFTEST_SEED = 20240601


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    slow: bool
    check: Check


_REGISTRY: dict[int, Criterion] = {}


def criterion(number: int, title: str, *, slow: bool = False) -> Callable[[Check], Check]:
    """Register an acceptance check under its number."""

    def register(check: Check) -> Check:
        if number in _REGISTRY:
            raise ValueError(f"criterion {number} registered twice")
        _REGISTRY[number] = Criterion(number, title, slow, check)
        return check

    return register


def criteria() -> list[Criterion]:
    return [_REGISTRY[n] for n in sorted(_REGISTRY)]


def _expect(number: int, ok: bool, message: str) -> None:
    if not ok:
        raise AcceptanceError(number, message)


# ---------------------------------------------------------------------------
# shared fixtures
# ---------------------------------------------------------------------------


FOLNER_BASE = Fraction(10, 11)


def _folner_set(example: Section6Example, n: int) -> list[Scalar]:
    """X_n = {g1^-m(x0) : m = 0..n} with x0 = 10/11 inside (a, a')."""
    return example.backward_orbit(FOLNER_BASE, n)


def _tent_below_one() -> PiecewiseLinearFunction:
    return PiecewiseLinearFunction.tent(0, 1)


# ---------------------------------------------------------------------------
# the checks
# ---------------------------------------------------------------------------


@criterion(1, "non-recurrence: d_E(x_k, V) = nu(x_k) = k for k = 1..12")
def _non_recurrence(config: EngineConfig) -> str:
    example = build_section6_example()
    seeds = example.backward_orbit(Fraction(5, 4), 12)[1:]
    profile = recurrence_profile(
        example.system, example.target, seeds, 14, nu=example.nu, config=config
    )
    for k, entry in enumerate(profile.entries, start=1):
        _expect(1, entry.nu == k, f"nu(x_{k}) = {entry.nu}, expected {k}")
        _expect(
            1,
            entry.hit_distance == k,
            f"d_E(x_{k}, V) = {entry.hit_distance}, expected {k}",
        )
    return f"max hitting distance {profile.max_distance}"


@criterion(2, "Følner: boundary of X_n is {x0, inner endpoint}, ratio 2/101 at n = 100")
def _section6_folner(config: EngineConfig) -> str:
    example = build_section6_example()
    xs = _folner_set(example, 100)
    x0 = xs[0]
    graph = set_neighborhood(example.system, xs, 1, config=config)
    boundary = graph_boundary(graph, xs)
    _expect(2, x0 in boundary, "x0 is not in the boundary")
    _expect(2, boundary <= {x0, xs[-1]}, f"unexpected boundary points {boundary}")
    ratio = Fraction(len(boundary), len(xs))
    _expect(2, ratio <= Fraction(2, 101), f"ratio {ratio} > 2/101")
    return f"ratio {ratio}"


@criterion(3, "averaging measures of {n..2n} escape a bump on (0, 1)")
def _translation_escape(config: EngineConfig) -> str:
    scenario = load_bundled("translation")
    f = _tent_below_one()
    for n in range(1, 51):
        sn = [scenario.system.normalize(k) for k in range(n, 2 * n + 1)]
        mu = averaging_measure(sn, f)
        _expect(3, mu == 0, f"mu_{n}(f) = {mu}")
    return "mu_n(f) = 0 for n = 1..50"


@criterion(4, "invariance defect <= 2 sup|f| ratio on X_n, n in {5, 10, 20}")
def _invariance_defect(config: EngineConfig) -> str:
    example = build_section6_example()
    (v,) = example.target.components
    # (name, test function, base of the segment)
    cases = (
        ("(a, a')", _tent_below_one(), FOLNER_BASE),
        ("V", PiecewiseLinearFunction.tent(v.lo, v.hi), Fraction(5, 4)),
    )
    lines = []
    for name, f, base in cases:
        for n in (5, 10, 20):
            xs = example.backward_orbit(base, n)
            graph = set_neighborhood(example.system, xs, 1, config=config)
            result = invariance_defect(graph, xs, example.system["g1"], f, generator="g1")
            _expect(
                4,
                result.passed,
                f"tent on {name}, n={n}: defect {result.defect} > bound {result.bound}",
            )
            lines.append(f"{name} n={n}: {result.defect} <= {result.bound}")
    return "; ".join(lines)


@criterion(5, "orbit correspondence is forward-Lipschitz and injective", slow=True)
def _correspondence(config: EngineConfig) -> str:
    scenario = load_bundled("rotation_sqrt2")
    system = scenario.system
    seeds = list(scenario.seeds)
    pairs = list(zip(seeds, seeds[1:] + seeds[:1], strict=True))[:5]
    window = Interval.unit()
    checked = 0
    for x, y in pairs:
        corr = orbit_correspondence(system, x, y, 20, window, config=config)
        images = [p.image for p in corr.pairs]
        _expect(5, len(set(images)) == len(images), f"({x}, {y}): not injective")
        stats = distortion_stats(corr, system, window=DomainSet.circle(), config=config)
        _expect(
            5,
            stats.forward_holds,
            f"({x}, {y}): {len(stats.failing_pairs)} forward violations",
        )
        checked += stats.pairs_checked
    return f"{checked} node pairs over {len(pairs)} base pairs"


@criterion(6, "bi-Lipschitz constant at R = 15 is not exceeded at R = 30", slow=True)
def _bilipschitz(config: EngineConfig) -> str:
    scenario = load_bundled("rotation_sqrt2")
    first = scenario.system
    r = first["r"]
    second = first.extended([("rr", compose(r, r))])
    seeds = scenario.seeds[:3]
    small = bilipschitz_audit(first, second, seeds, 15, config=config)
    large = bilipschitz_audit(first, second, seeds, 30, config=config)
    _expect(
        6,
        large.constant <= small.constant,
        f"C(30) = {large.constant} exceeds C(15) = {small.constant}",
    )
    return f"C(15) = {small.constant}, C(30) = {large.constant}"


def _rotation_gap(alpha: Scalar, radius: int) -> Scalar:
    """Largest cyclic gap of {k alpha mod 1 : |k| <= radius}, from the closed form."""
    points = sorted({(k * alpha).frac() for k in range(-radius, radius + 1)})
    gaps = [b - a for a, b in zip(points, points[1:], strict=False)]
    gaps.append(points[0] + 1 - points[-1])
    return max(gaps)


@criterion(7, "rotation by sqrt(2) - 1 is 1/100-dense at the oracle radius; 1/3 is not")
def _density(config: EngineConfig) -> str:
    eps = Scalar(Fraction(1, 100))
    scenario = load_bundled("rotation_sqrt2")
    alpha = scenario.system["r"].apply(Scalar(0))
    oracle = next(
        radius for radius in range(1, 500) if _rotation_gap(alpha, radius) <= 2 * eps
    )
    result = orbit_density(scenario.system, 0, Interval.unit(), eps, 500, config=config)
    _expect(7, result.radius == oracle, f"radius {result.radius}, oracle {oracle}")
    try:
        orbit_density(scenario.system, 0, Interval.unit(), eps, oracle - 1, config=config)
    except NotDenseError:
        pass
    else:
        raise AcceptanceError(7, f"already dense at radius {oracle - 1}")

    third = load_bundled("rotation_third")
    try:
        orbit_density(third.system, 0, Interval.unit(), eps, 50, config=config)
    except NotDenseError as exc:
        return f"dense at R = {oracle}; 1/3 rotation stalls with gap {exc.largest_gap}"
    raise AcceptanceError(7, "rational rotation reported dense")


@criterion(8, "glued metric equals chain enumeration on 100 random atlases", slow=True)
def _gluing(config: EngineConfig) -> str:
    rng = random.Random(SELFTEST_SEED)
    checked = 0
    for trial in range(100):
        atlas = random_line_atlas(rng, 8)
        glued = glue_metric(atlas)
        oracle = exhaustive_chain_metric(atlas)
        _expect(8, glued.table == oracle.table, f"atlas {trial}: D differs from oracle")
        axioms = is_metric(glued)
        _expect(8, axioms.is_metric, f"atlas {trial}: not a metric ({axioms.witness})")
        bound = lower_bound_check(atlas, glued)
        _expect(8, bound.holds, f"atlas {trial}: {len(bound.violations)} bound violations")
        checked += bound.checked
    return f"100 atlases, {checked} lower-bound instances"


def _interior(graph: OrbitBall, margin: int) -> list[Scalar]:
    return [p for p, info in graph.nodes.items() if info.dist + margin <= graph.radius]


def _sample(rng: random.Random, pool: Iterable[Scalar], p: float) -> set[Scalar]:
    return {x for x in pool if rng.random() < p}


@criterion(9, "boundary identities on 100 random (S, A, C)")
def _boundary_identities(config: EngineConfig) -> str:
    rng = random.Random(SELFTEST_SEED)
    # (name, ball, largest r); the section-6 orbit graph branches, so it stays small
    graphs: list[tuple[str, OrbitBall, int]] = []
    for name, seed, radius, top in (
        ("rotation_sqrt2", 0, 14, 3),
        ("section6", Fraction(3, 2), 8, 2),
    ):
        system: GeneratorSystem = load_bundled(name).system
        graphs.append((name, orbit_ball(system, seed, radius, config=config), top))
    nets = 0
    for trial in range(100):
        name, graph, top = graphs[trial % len(graphs)]
        r = rng.randint(1, top)
        c = rng.randint(2, 3)
        s = _sample(rng, _interior(graph, 2 * r + 2), 0.5) or {graph.base}
        where = f"trial {trial} on {name} (r={r}, C={c})"

        boundary = graph_boundary(graph, s)
        _expect(9, boundary == s & r_boundary(graph, s, 2), f"{where}: ∂S != S ∩ ∂_2 S")

        k = max(2, max(d for _, d in graph.graph.degree()))
        grown = r_boundary(graph, s, r)
        _expect(
            9,
            len(grown) <= k**r * len(boundary),
            f"{where}: #∂_r S = {len(grown)} > K^r #∂S = {k**r * len(boundary)}",
        )

        a = _sample(rng, graph.nodes, 0.4)
        check = a_cap_s_check(graph, a, s, c)
        if check.is_net:
            nets += 1
            _expect(9, check.holds, f"{where}: A ∩ S inequality fails")
    _expect(9, nets > 0, "no sampled A was a C-net; the A ∩ S inequality never ran")
    return f"100 trials, {nets} with A a C-net, zero violations"


@criterion(10, "BFS distances equal brute-force word minima up to length 6")
def _engine_oracle(config: EngineConfig) -> str:
    cases = (("rotation_sqrt2", 0), ("section6", Fraction(3, 2)), ("translation", 0))
    sizes = []
    for name, seed in cases:
        system = load_bundled(name).system
        ball = orbit_ball(system, seed, 6, config=config)
        bfs = {p: info.dist for p, info in ball.nodes.items()}
        brute = brute_force_distances(system, seed, 6)
        _expect(10, bfs == brute, f"{name}: BFS and brute force disagree")
        sizes.append(f"{name}: {len(bfs)} points")
    return ", ".join(sizes)


def run_criteria(
    *,
    only: set[int] | None = None,
    include_slow: bool = True,
    config: EngineConfig | None = None,
) -> list[CriterionResult]:
    """Run the registered checks in order and collect their outcomes."""
    config = config or default_config()
    results = []
    for item in criteria():
        if only is not None and item.number not in only:
            continue
        if item.slow and not include_slow and only is None:
            continue
        started = time.perf_counter()
        try:
            detail = item.check(config)
            passed = True
        except PseudodynError as exc:
            detail = str(exc)
            passed = False
        logger.info(
            "Criterion %d %s in %.2fs",
            item.number,
            "passed" if passed else "failed",
            time.perf_counter() - started,
        )
        results.append(
            CriterionResult(
                number=item.number,
                title=item.title,
                passed=passed,
                detail=detail,
                slow=item.slow,
            )
        )
    return results
