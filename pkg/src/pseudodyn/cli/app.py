"""The ``pseudodyn`` command group.

Points on the command line are exact: ``1/3`` is a rational, ``p:q`` is
p + q·sqrt(d) in the scenario's field. Scenarios are file paths or bundled
names (``rotation_sqrt2``, ``section6``, ``translation``, ...).

Exit codes: 0 success, 1 failed self-test, 2 usage error, 3 scenario
error, 4 computation error.
"""

from __future__ import annotations

import csv
import logging
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, cast

import click

from pseudodyn._config import EngineConfig
from pseudodyn._version import __version__
from pseudodyn.cli import emit
from pseudodyn.cli.acceptance import run_criteria
from pseudodyn.coarse import distortion_stats, orbit_correspondence
from pseudodyn.equicont import modulus_estimate, orbit_density
from pseudodyn.exactnum import Scalar
from pseudodyn.exceptions import (
    ConfigurationError,
    PseudodynError,
    ScenarioError,
    WordDomainError,
)
from pseudodyn.folner import (
    PiecewiseLinearFunction,
    averaging_measure,
    folner_ratios,
)
from pseudodyn.localmaps import DomainSet, GeneratorSystem, Interval, Space
from pseudodyn.metrization import glue_metric
from pseudodyn.models.metrization import GlueMode
from pseudodyn.pseudogroup import orbit_ball, set_neighborhood, word_metric
from pseudodyn.recurrence import recurrence_profile
from pseudodyn.scenario import Scenario, load_atlas, resolve_scenario

logger = logging.getLogger(__name__)

EXIT_SELFTEST_FAILED = 1
EXIT_USAGE = 2
EXIT_SCENARIO = 3
EXIT_COMPUTATION = 4

_LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


# ---------------------------------------------------------------------------
# option helpers
# ---------------------------------------------------------------------------


def _raw_value(scenario: Scenario, raw: str) -> Scalar:
    text = raw.strip()
    try:
        if ":" in text:
            p, q = text.split(":", 1)
            return scenario.number_field.make(p, q)
        return scenario.number_field.make(text)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise click.BadParameter(f"{raw!r} is not an exact value ({exc})") from exc


def _point(scenario: Scenario, raw: str) -> Scalar:
    return scenario.system.normalize(_raw_value(scenario, raw))


def _seed(scenario: Scenario, raw: str | None) -> Scalar:
    if raw is not None:
        return _point(scenario, raw)
    if not scenario.seeds:
        raise click.UsageError(f"scenario {scenario.name!r} has no seeds; pass --seed")
    return scenario.seeds[0]


def _open_interval(scenario: Scenario, raw: str) -> Interval:
    parts = raw.split(",")
    if len(parts) != 2:
        raise click.BadParameter(f"expected 'lo,hi', got {raw!r}")
    lo, hi = (_raw_value(scenario, p) for p in parts)
    try:
        return Interval.open(lo, hi)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from exc


def _full_region(scenario: Scenario) -> Interval:
    if scenario.space is Space.CIRCLE:
        return Interval.unit()
    hull = scenario.window.components
    return Interval(hull[0].lo, hull[-1].hi, hull[0].lo_open, hull[-1].hi_open)


def _region_set(scenario: Scenario, raw: str) -> DomainSet:
    if "," in raw:
        return DomainSet.of(_open_interval(scenario, raw))
    return scenario.region(raw)


def _geometric_seeds(scenario: Scenario, raw: str) -> list[Scalar]:
    # x_k = limit - (limit - x0)·q^k accumulates at limit from the side of x0
    parts = raw.split(",")
    if len(parts) != 4:
        raise click.BadParameter(
            f"expected 'x0,limit,q,count', got {raw!r}", param_hint="--geometric"
        )
    x0, limit, q = (_raw_value(scenario, p) for p in parts[:3])
    try:
        count = int(parts[3])
    except ValueError as exc:
        raise click.BadParameter(f"count {parts[3]!r} is not an integer",
                                 param_hint="--geometric") from exc
    if not (q.sign() > 0 and q < 1) or count < 1 or x0 == limit:
        raise click.BadParameter(
            "need 0 < q < 1, count >= 1 and x0 != limit", param_hint="--geometric"
        )
    seeds = []
    gap = limit - x0
    for _ in range(count):
        seeds.append(scenario.system.normalize(limit - gap))
        gap *= q
    return seeds


def _config(ctx: click.Context) -> EngineConfig:
    config = ctx.find_object(EngineConfig)
    return config if config is not None else EngineConfig.from_env()


scenario_option = click.option(
    "--scenario",
    "-s",
    "scenario_name",
    required=True,
    help="Scenario file or bundled scenario name.",
)
emit_option = click.option(
    "--emit",
    "emit_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the CSV here instead of stdout.",
)
svg_option = click.option(
    "--svg",
    "svg_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write a static SVG plot.",
)


# ---------------------------------------------------------------------------
# the group
# ---------------------------------------------------------------------------


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="pseudodyn")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Log level (default WARNING, or PSEUDODYN_LOG_LEVEL).",
)
@click.option(
    "--node-cap", type=click.IntRange(min=1), default=None, help="Override PSEUDODYN_NODE_CAP."
)
@click.option(
    "--word-cap", type=click.IntRange(min=1), default=None, help="Override PSEUDODYN_WORD_CAP."
)
@click.pass_context
def cli(
    ctx: click.Context,
    log_level: str | None,
    node_cap: int | None,
    word_cap: int | None,
) -> None:
    """Exact orbit geometry for pseudogroups of the line and circle."""
    config = EngineConfig.from_env(node_cap=node_cap, word_cap=word_cap, log_level=log_level)
    logging.basicConfig(stream=sys.stderr, level=config.log_level, format=_LOG_FORMAT)
    ctx.obj = config


@cli.command()
@scenario_option
@click.option("--seed", default=None, help="Base point (default: first scenario seed).")
@click.option("--radius", type=click.IntRange(min=0), required=True)
@emit_option
@svg_option
@click.pass_context
def orbit(
    ctx: click.Context,
    scenario_name: str,
    seed: str | None,
    radius: int,
    emit_path: Path | None,
    svg_path: Path | None,
) -> None:
    """Orbit ball of a seed.

    CSV columns: point_p, point_q (the node is point_p + point_q·sqrt(d)),
    dist (word distance), parent and label (the BFS tree edge that reached
    the node; empty for the seed).
    """
    scenario = resolve_scenario(scenario_name)
    x = _seed(scenario, seed)
    ball = orbit_ball(scenario.system, x, radius, config=_config(ctx))
    rows = [(p.p, p.q, info.dist, info.parent, info.label) for p, info in ball.nodes.items()]
    emit.emit_csv(("point_p", "point_q", "dist", "parent", "label"), rows, emit_path)
    if svg_path is not None:
        sizes = [len(ball.points(r)) for r in range(radius + 1)]
        emit.emit_svg(
            svg_path,
            list(range(radius + 1)),
            {"#ball": [float(s) for s in sizes]},
            xlabel="radius",
            ylabel="points",
            title=f"{scenario.name}: ball growth",
        )


@cli.command()
@scenario_option
@click.option("--x", "x_raw", required=True)
@click.option("--y", "y_raw", required=True)
@click.option("--rmax", type=click.IntRange(min=0), default=20, show_default=True)
@emit_option
@click.pass_context
def metric(
    ctx: click.Context,
    scenario_name: str,
    x_raw: str,
    y_raw: str,
    rmax: int,
    emit_path: Path | None,
) -> None:
    """Word metric d_E(x, y) within a radius budget.

    CSV columns: x, y, distance ('unreachable' beyond rmax or in another orbit).
    """
    scenario = resolve_scenario(scenario_name)
    x, y = _point(scenario, x_raw), _point(scenario, y_raw)
    d = word_metric(scenario.system, x, y, rmax, config=_config(ctx))
    emit.emit_csv(("x", "y", "distance"), [(x, y, "unreachable" if d is None else d)], emit_path)


@cli.command()
@scenario_option
@click.option("--window", "window_raw", default=None,
              help="Target region name or 'lo,hi' (default V, or the scenario window).")
@click.option("--seeds", "seeds_raw", multiple=True,
              help="Comma-separated seed points (repeatable).")
@click.option("--geometric", "geometric_raw", default=None,
              help="'x0,limit,q,count': seeds limit - (limit - x0)·q^k, k = 0..count-1.")
@click.option("--steps", type=click.IntRange(min=1), default=None,
              help="Section-6 scenarios: use g1^-k(base) for k = 1..steps.")
@click.option("--base", default="5/4", show_default=True, help="Base of the backward orbit.")
@click.option("--rmax", type=click.IntRange(min=0), default=None,
              help="Radius budget (default: largest ν + 2, or 10).")
@emit_option
@svg_option
@click.pass_context
def recur(
    ctx: click.Context,
    scenario_name: str,
    window_raw: str | None,
    seeds_raw: Sequence[str],
    geometric_raw: str | None,
    steps: int | None,
    base: str,
    rmax: int | None,
    emit_path: Path | None,
    svg_path: Path | None,
) -> None:
    """Hitting distances into a target window.

    Seeds come from --seeds, from --geometric (a sequence accumulating at
    limit), from --steps, or from the scenario. CSV columns: seed, nu
    (section-6 oracle, '' otherwise), hit_dist ('' when not reached within
    rmax).
    """
    scenario = resolve_scenario(scenario_name)
    example = scenario.section6
    sources = {
        "--seeds": bool(seeds_raw),
        "--geometric": geometric_raw is not None,
        "--steps": steps is not None,
    }
    chosen = [opt for opt, used in sources.items() if used]
    if len(chosen) > 1:
        raise click.UsageError(f"{' and '.join(chosen)} are mutually exclusive")
    if steps is not None:
        if example is None:
            raise click.UsageError("--steps needs a section-6 scenario")
        points = example.backward_orbit(_point(scenario, base), steps)[1:]
    elif geometric_raw is not None:
        points = _geometric_seeds(scenario, geometric_raw)
    elif seeds_raw:
        points = [_point(scenario, s) for raw in seeds_raw for s in raw.split(",")]
    else:
        points = list(scenario.seeds)
    if window_raw is not None:
        target = _region_set(scenario, window_raw)
    elif example is not None:
        target = example.target
    else:
        target = scenario.window
    nu = example.nu if example is not None else None
    if rmax is not None:
        budget = rmax
    elif nu is not None:
        budget = max((nu(p) for p in points), default=0) + 2
    else:
        budget = 10
    profile = recurrence_profile(
        scenario.system, target, points, budget, nu=nu, config=_config(ctx)
    )
    rows = [(e.seed, e.nu, e.hit_distance) for e in profile.entries]
    emit.emit_csv(("seed", "nu", "hit_dist"), rows, emit_path)
    if svg_path is not None:
        ks = list(range(1, len(profile.entries) + 1))
        series = {"d_E": [float(e.hit_distance or 0) for e in profile.entries]}
        if example is not None:
            series["nu"] = [float(e.nu or 0) for e in profile.entries]
        emit.emit_svg(
            svg_path, ks, series, xlabel="k", ylabel="distance", title=f"{scenario.name}: hitting"
        )


_SEQUENCES = ("ball", "g-segment")


def _read_csv(path: Path, columns: set[str], hint: str) -> list[dict[str, str]]:
    with path.open(encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None or not columns <= set(reader.fieldnames):
            names = " and ".join(sorted(columns))
            raise click.BadParameter(f"{path} needs {names} columns", param_hint=hint)
        return list(reader)


def _read_sets(scenario: Scenario, path: Path) -> tuple[list[int], list[list[Scalar]]]:
    """Sets from a CSV with one (n, point) row per member, grouped by n."""
    grouped: dict[int, list[Scalar]] = {}
    for row in _read_csv(path, {"n", "point"}, "--sequence"):
        try:
            n = int(row["n"])
        except ValueError as exc:
            raise click.BadParameter(f"n {row['n']!r} is not an integer",
                                     param_hint="--sequence") from exc
        grouped.setdefault(n, []).append(_point(scenario, row["point"]))
    if not grouped:
        raise click.BadParameter(f"{path} lists no sets", param_hint="--sequence")
    ns = sorted(grouped)
    return ns, [grouped[n] for n in ns]


def _read_testfn(scenario: Scenario, path: Path) -> PiecewiseLinearFunction:
    """Breakpoints (x, y) of a piecewise-linear test function, zero outside them."""
    rows = _read_csv(path, {"x", "y"}, "--testfn")
    try:
        return PiecewiseLinearFunction.of(
            (_raw_value(scenario, r["x"]), _raw_value(scenario, r["y"])) for r in rows
        )
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--testfn") from exc


def _segment(system: GeneratorSystem, x: Scalar, label: str, length: int) -> list[Scalar]:
    ray = [x]
    g = system[label]
    for m in range(length):
        nxt = g.try_apply(ray[-1])
        if nxt is None:
            raise WordDomainError(m, ray[-1], label)
        ray.append(nxt)
    return ray


@cli.command()
@scenario_option
@click.option("--seed", default=None, help="Centre of the balls, or first point of the segment.")
@click.option("--sequence", "sequence", default="g-segment", show_default=True,
              help="'ball', 'g-segment', or a CSV file with n,point rows.")
@click.option("--generator", default=None, help="Generator iterated along the segment.")
@click.option("--n", "sizes", type=click.IntRange(min=0), multiple=True,
              help="Ball radii or segment lengths n (repeatable).")
@click.option("--r", "radii", type=click.IntRange(min=1), multiple=True,
              help="Boundary radii (repeatable, default 2).")
@click.option("--testfn", "testfn_path",
              type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help="CSV with x,y breakpoints of a piecewise-linear test function.")
@click.option("--bump", default=None, help="'lo,hi': use a tent on (lo, hi) as the test function.")
@emit_option
@click.option("--mu-emit", "mu_path", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Write the (n, mu_value) table here.")
@svg_option
@click.pass_context
def folner(
    ctx: click.Context,
    scenario_name: str,
    seed: str | None,
    sequence: str,
    generator: str | None,
    sizes: Sequence[int],
    radii: Sequence[int],
    testfn_path: Path | None,
    bump: str | None,
    emit_path: Path | None,
    mu_path: Path | None,
    svg_path: Path | None,
) -> None:
    """Boundary ratios #∂_r S_n / #S_n and averages μ_n(f) along a sequence.

    The sequence is the balls S_n = B(x, n), the segments
    S_n = {x, g x, ..., g^n x}, or sets read from a file. The ratio CSV has
    columns n, r, boundary_size, set_size, ratio. With a test function the
    (n, mu_value) table follows after a blank line, or goes to --mu-emit.
    """
    scenario = resolve_scenario(scenario_name)
    system = scenario.system
    config = _config(ctx)
    rs = sorted(set(radii)) or [2]
    margin = max(2 * max(rs) - 2, 1)
    if testfn_path is not None and bump is not None:
        raise click.UsageError("--testfn and --bump are mutually exclusive")

    if sequence == "ball":
        x = _seed(scenario, seed)
        ns = sorted(set(sizes)) or [2, 4, 8]
        graph = orbit_ball(system, x, max(ns) + margin, config=config)
        sets = [graph.points(n) for n in ns]
    elif sequence == "g-segment":
        x = _seed(scenario, seed)
        label = generator or ("g1^-1" if scenario.section6 is not None else system.labels[0])
        if label not in system:
            raise click.BadParameter(f"unknown generator {label!r}", param_hint="--generator")
        ns = sorted(set(sizes)) or [10, 20, 50, 100]
        ray = _segment(system, x, label, max(ns))
        sets = [ray[: n + 1] for n in ns]
        graph = set_neighborhood(system, ray, margin, config=config)
    else:
        path = Path(sequence)
        if not path.is_file():
            raise click.BadParameter(
                f"expected one of {', '.join(_SEQUENCES)} or a file, got {sequence!r}",
                param_hint="--sequence",
            )
        ns, sets = _read_sets(scenario, path)
        union = dict.fromkeys(p for s in sets for p in s)
        graph = set_neighborhood(system, union, margin, config=config)

    report = folner_ratios(graph, sets, rs)
    rows = [
        (ns[row.n - 1], row.r, row.boundary_size, row.set_size, row.ratio)
        for row in report.rows
    ]
    text = emit.csv_text(("n", "r", "boundary_size", "set_size", "ratio"), rows)

    f: PiecewiseLinearFunction | None = None
    if testfn_path is not None:
        f = _read_testfn(scenario, testfn_path)
    elif bump is not None:
        interval = _open_interval(scenario, bump)
        f = PiecewiseLinearFunction.tent(interval.lo, interval.hi)
    if f is not None:
        mu_rows = [(n, averaging_measure(s, f)) for n, s in zip(ns, sets, strict=True)]
        mu_text = emit.csv_text(("n", "mu_value"), mu_rows)
        if mu_path is not None:
            emit.write_text(mu_text, mu_path)
        else:
            text += "\n" + mu_text
    emit.write_text(text, emit_path)

    if svg_path is not None:
        first = [r for r in report.rows if r.r == rs[0]]
        emit.emit_svg(
            svg_path,
            [float(ns[r.n - 1]) for r in first],
            {f"r={rs[0]}": [float(r.ratio) for r in first]},
            xlabel="n",
            ylabel="#boundary / #S",
            title=f"{scenario.name}: Følner ratios",
        )


@cli.command()
@scenario_option
@click.option("--x", "x_raw", required=True)
@click.option("--y", "y_raw", required=True)
@click.option("--radius", type=click.IntRange(min=1), required=True)
@click.option("--window", "window_raw", default=None,
              help="'lo,hi' open interval V containing x and y (default: whole space).")
@click.option("--pairs-csv", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the correspondence pairs here.")
@click.option("--emit", "emit_path", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Write the JSON report here instead of stdout.")
@click.pass_context
def qi(
    ctx: click.Context,
    scenario_name: str,
    x_raw: str,
    y_raw: str,
    radius: int,
    window_raw: str | None,
    pairs_csv: Path | None,
    emit_path: Path | None,
) -> None:
    """Orbit correspondence around (x, y) and its distortion statistics (JSON).

    The pairs CSV has one row per ball node z, with columns z, phi_z,
    d_source = d(x, z) and d_target = d(y, phi_z) ('' beyond 2R).
    """
    scenario = resolve_scenario(scenario_name)
    config = _config(ctx)
    x, y = _point(scenario, x_raw), _point(scenario, y_raw)
    window = _open_interval(scenario, window_raw) if window_raw else _full_region(scenario)
    corr = orbit_correspondence(scenario.system, x, y, radius, window, config=config)
    stats = distortion_stats(corr, scenario.system, window=DomainSet.of(window), config=config)
    if pairs_csv is not None:
        phi = corr.as_dict()
        rows = [(p.z2, phi[p.z2], p.d_source, p.d_target) for p in stats.from_base]
        emit.emit_csv(("z", "phi_z", "d_source", "d_target"), rows, pairs_csv)
    emit.emit_json(stats, emit_path)


def _read_pairs(scenario: Scenario, path: Path) -> list[tuple[Scalar, Scalar]]:
    rows = _read_csv(path, {"x", "y"}, "--pairs")
    return [(_point(scenario, r["x"]), _point(scenario, r["y"])) for r in rows]


@cli.command()
@scenario_option
@click.option("--maxlen", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--eps", "eps_raw", multiple=True, help="ε value (repeatable).")
@click.option("--pairs", "pairs_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None, help="CSV with x,y columns (default: consecutive seeds).")
@emit_option
@click.pass_context
def equicont(
    ctx: click.Context,
    scenario_name: str,
    maxlen: int,
    eps_raw: Sequence[str],
    pairs_path: Path | None,
    emit_path: Path | None,
) -> None:
    """Empirical equicontinuity modulus δ(ε).

    CSV columns: eps, delta, delta_approx, shrinking, by_length (δ for word
    lengths 1..maxlen, separated by '|').
    """
    scenario = resolve_scenario(scenario_name)
    if pairs_path is not None:
        pairs = _read_pairs(scenario, pairs_path)
    else:
        pairs = list(zip(scenario.seeds, scenario.seeds[1:], strict=False))
    grid = [_raw_value(scenario, e) for e in eps_raw] or [
        Scalar(Fraction(1, 10)), Scalar(Fraction(1, 4)), Scalar(Fraction(1, 2))
    ]
    table = modulus_estimate(scenario.system, maxlen, grid, pairs, config=_config(ctx))
    rows = [
        (
            row.eps,
            row.delta,
            emit.approx_cell(row.delta),
            row.shrinking,
            "|".join(emit.cell(d) for d in row.by_length),
        )
        for row in table.rows
    ]
    emit.emit_csv(("eps", "delta", "delta_approx", "shrinking", "by_length"), rows, emit_path)


@cli.command()
@scenario_option
@click.option("--seed", default=None)
@click.option("--region", default=None, help="Region name or 'lo,hi' (default: whole space).")
@click.option("--eps", "eps_raw", required=True)
@click.option("--rmax", type=click.IntRange(min=0), default=200, show_default=True)
@emit_option
@click.pass_context
def density(
    ctx: click.Context,
    scenario_name: str,
    seed: str | None,
    region: str | None,
    eps_raw: str,
    rmax: int,
    emit_path: Path | None,
) -> None:
    """Smallest radius at which the orbit ball is ε-dense in a region.

    CSV columns: radius, largest_gap, largest_gap_approx, points_in_region.
    """
    scenario = resolve_scenario(scenario_name)
    if region is None:
        interval = _full_region(scenario)
    elif "," in region:
        interval = _open_interval(scenario, region)
    else:
        components = scenario.region(region).components
        if len(components) != 1:
            raise click.BadParameter("density regions must be single intervals")
        interval = components[0]
    result = orbit_density(
        scenario.system,
        _seed(scenario, seed),
        interval,
        _raw_value(scenario, eps_raw),
        rmax,
        config=_config(ctx),
    )
    rows = [
        (
            result.radius,
            result.largest_gap,
            emit.approx_cell(result.largest_gap),
            result.points_in_region,
        )
    ]
    emit.emit_csv(
        ("radius", "largest_gap", "largest_gap_approx", "points_in_region"), rows, emit_path
    )


@cli.command()
@click.option("--atlas", "atlas_name", required=True, help="Atlas file or bundled atlas name.")
@click.option("--mode", type=click.Choice(["local", "quasilocal"]), default="local",
              show_default=True)
@emit_option
def glue(atlas_name: str, mode: str, emit_path: Path | None) -> None:
    """Glued chain metric D of an atlas.

    CSV: a square table with a 'point' column followed by one column per point.
    """
    atlas = load_atlas(atlas_name)
    glued = glue_metric(atlas, cast(GlueMode, mode))
    rows = [(p, *row) for p, row in zip(glued.points, glued.table, strict=True)]
    emit.emit_csv(("point", *glued.points), rows, emit_path)


@cli.command()
@click.option("--only", "only", type=click.IntRange(1, 10), multiple=True,
              help="Run only these criteria (repeatable).")
@click.option("--skip-slow", is_flag=True, help="Skip the slow criteria.")
@click.pass_context
def selftest(ctx: click.Context, only: Sequence[int], skip_slow: bool) -> None:
    """Run the bundled acceptance checks."""
    results = run_criteria(only=set(only) or None, include_slow=not skip_slow,
                           config=_config(ctx))
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        click.echo(f"criterion {r.number:2d}: {status}  {r.title}")
        if not r.passed:
            click.echo(f"    {r.detail}")
    failed = sum(1 for r in results if not r.passed)
    click.echo(f"{len(results) - failed}/{len(results)} passed")
    if failed:
        ctx.exit(EXIT_SELFTEST_FAILED)


def _report(exc: PseudodynError) -> None:
    click.echo(f"error[{exc.module}]: {exc}", err=True)


def main(argv: Sequence[str] | None = None) -> int:
    """Console entry point; returns the process exit code."""
    try:
        rv: Any = cli.main(args=argv, prog_name="pseudodyn", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except ConfigurationError as exc:
        _report(exc)
        return EXIT_USAGE
    except ScenarioError as exc:
        _report(exc)
        return EXIT_SCENARIO
    except PseudodynError as exc:
        _report(exc)
        return EXIT_COMPUTATION
    return rv if isinstance(rv, int) else 0

