"""Gluing patch metrics into one metric by admissible chains.

A pair {z₁, z₂} is admissible when both points lie in some shrinking U′ₐ
and every patch Uᵦ whose shrinking meets the pair contains the whole pair.
The glued distance is the cheapest chain of admissible pairs, capped at 1,
with chainless pairs at exactly 1:

    local mode:       cost(z₁, z₂) = Dₐ(z₁, z₂) for the witness a
    quasilocal mode:  cost(z₁, z₂) = D̄(z₁, z₂) = max over patches with both

Costs are positive, so the chain infimum is a shortest path and is computed
with Dijkstra's algorithm over the admissible-pair graph. Atlases with a
patch of diameter >= 1 are first scaled by a common factor.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable, Iterator, Mapping
from fractions import Fraction
from typing import Any

import networkx as nx

from pseudodyn.exceptions import OverlapDisagreementError
from pseudodyn.models.metrization import (
    AdmissiblePair,
    AgreementEntry,
    AgreementReport,
    GluedMetric,
    GlueMode,
    LowerBoundReport,
    LowerBoundViolation,
    MetricAxiomReport,
    MetricPatch,
    MetricPatchAtlas,
    ModulusCheck,
    ModulusViolation,
)

logger = logging.getLogger(__name__)

_ONE = Fraction(1)


def _unordered_pairs(points: tuple[str, ...]) -> Iterator[tuple[str, str]]:
    for i, x in enumerate(points):
        for y in points[i + 1 :]:
            yield x, y


def admissible_pairs(atlas: MetricPatchAtlas) -> list[AdmissiblePair]:
    """Every admissible pair, with the first patch witnessing it."""
    out: list[AdmissiblePair] = []
    for x, y in _unordered_pairs(atlas.points):
        if not all(
            x in b and y in b
            for b in atlas.patches
            if b.in_shrink(x) or b.in_shrink(y)
        ):
            continue
        witness = next(
            (a for a in atlas.patches if a.in_shrink(x) and a.in_shrink(y)), None
        )
        if witness is not None:
            out.append(AdmissiblePair(z1=x, z2=y, witness=witness.name))
    return out


def sup_premetric(atlas: MetricPatchAtlas, x: str, y: str) -> Fraction | None:
    """D̄(x, y): the largest Dₐ(x, y) over patches containing both."""
    values = [a.distance(x, y) for a in atlas.patches if x in a and y in a]
    return max(values) if values else None


def check_overlaps(atlas: MetricPatchAtlas) -> None:
    """Require patch tables to agree on every shared pair.

    Raises:
        OverlapDisagreementError: On the first disagreeing pair.
    """
    patches = atlas.patches
    for i, a in enumerate(patches):
        for b in patches[i + 1 :]:
            shared = tuple(p for p in a.members if p in b)
            for x, y in _unordered_pairs(shared):
                if a.distance(x, y) != b.distance(x, y):
                    raise OverlapDisagreementError(x, y, (a.name, b.name))


def _edge_costs(
    atlas: MetricPatchAtlas, mode: GlueMode
) -> list[tuple[str, str, Fraction]]:
    edges = []
    for pair in admissible_pairs(atlas):
        if mode == "local":
            cost = atlas.patch(pair.witness).distance(pair.z1, pair.z2)
        else:
            sup = sup_premetric(atlas, pair.z1, pair.z2)
            if sup is None:
                continue
            cost = sup
        edges.append((pair.z1, pair.z2, cost))
    return edges


def _prepare(atlas: MetricPatchAtlas, mode: GlueMode) -> MetricPatchAtlas:
    if mode not in ("local", "quasilocal"):
        raise ValueError(f"unknown gluing mode {mode!r}")
    work = atlas.normalized()
    if mode == "local":
        check_overlaps(work)
    return work


def _assemble(
    atlas: MetricPatchAtlas,
    mode: GlueMode,
    scale: Fraction,
    best: Mapping[str, Mapping[str, Fraction]],
) -> GluedMetric:
    rows = []
    chainless = []
    for i, x in enumerate(atlas.points):
        row = []
        for j, y in enumerate(atlas.points):
            if x == y:
                row.append(Fraction(0))
                continue
            cost = best.get(x, {}).get(y)
            if cost is None:
                if i < j:
                    chainless.append((x, y))
                row.append(_ONE)
            else:
                row.append(min(cost, _ONE))
        rows.append(tuple(row))
    return GluedMetric(
        mode=mode,
        points=atlas.points,
        table=tuple(rows),
        scale=scale,
        chainless=tuple(chainless),
    )


def glue_metric(atlas: MetricPatchAtlas, mode: GlueMode = "local") -> GluedMetric:
    """The chain metric D of an atlas.

    Raises:
        OverlapDisagreementError: In local mode, if two patches disagree on
            a shared pair.
    """
    work = _prepare(atlas, mode)
    graph = nx.Graph()
    graph.add_nodes_from(work.points)
    graph.add_weighted_edges_from(_edge_costs(work, mode))
    best = dict(nx.all_pairs_dijkstra_path_length(graph))
    glued = _assemble(work, mode, atlas.normalization_factor(), best)
    logger.debug(
        "Glued %d points in %s mode, %d chainless pairs",
        len(work.points),
        mode,
        len(glued.chainless),
    )
    return glued


def _chain_costs(
    adjacency: Mapping[str, list[tuple[str, Fraction]]], source: str, hops: int
) -> dict[str, Fraction]:
    """Cheapest simple chain from source to every point, by depth-first search."""
    found: dict[str, Fraction] = {}
    visited = {source}

    def walk(node: str, total: Fraction, depth: int) -> None:
        if depth == hops:
            return
        for nxt, cost in adjacency[node]:
            if nxt in visited:
                continue
            reached = total + cost
            if nxt not in found or reached < found[nxt]:
                found[nxt] = reached
            visited.add(nxt)
            walk(nxt, reached, depth + 1)
            visited.discard(nxt)

    walk(source, Fraction(0), 0)
    return found


def exhaustive_chain_metric(
    atlas: MetricPatchAtlas,
    mode: GlueMode = "local",
    *,
    max_hops: int | None = None,
) -> GluedMetric:
    """The chain metric by enumerating every simple chain (slow; an oracle)."""
    work = _prepare(atlas, mode)
    adjacency: dict[str, list[tuple[str, Fraction]]] = {p: [] for p in work.points}
    for x, y, cost in _edge_costs(work, mode):
        adjacency[x].append((y, cost))
        adjacency[y].append((x, cost))
    hops = max_hops if max_hops is not None else len(work.points) - 1

    best = {source: _chain_costs(adjacency, source, hops) for source in work.points}
    return _assemble(work, mode, atlas.normalization_factor(), best)


def _working_atlas(atlas: MetricPatchAtlas, glued: GluedMetric) -> MetricPatchAtlas:
    return atlas if glued.scale == 1 else atlas.scaled(glued.scale)


def lower_bound_check(atlas: MetricPatchAtlas, glued: GluedMetric) -> LowerBoundReport:
    """D(x, y) >= min(Dₐ(x, y), Dₐ(x, Uₐ \\ U′ₐ)) for x in U′ₐ.

    The Dₐ(x, y) term only applies when y is in U′ₐ. A missing escape term
    (U′ₐ = Uₐ) is infinite, and every bound is capped at 1.
    """
    work = _working_atlas(atlas, glued)
    checked = 0
    violations: list[LowerBoundViolation] = []
    for patch in work.patches:
        for x in patch.shrink:
            escape = patch.escape_distance(x)
            for y in work.points:
                if y == x:
                    continue
                terms = [_ONE]
                if escape is not None:
                    terms.append(escape)
                if patch.in_shrink(y):
                    terms.append(patch.distance(x, y))
                bound = min(terms)
                value = glued.d(x, y)
                checked += 1
                if value < bound:
                    violations.append(
                        LowerBoundViolation(
                            patch=patch.name, x=x, y=y, glued=value, bound=bound
                        )
                    )
    return LowerBoundReport(checked=checked, violations=tuple(violations))


def _best_patch(atlas: MetricPatchAtlas, z: str) -> tuple[MetricPatch, Fraction | None]:
    # the witness with the largest escape distance; no escape set beats any
    ranked = []
    for patch in atlas.patches:
        if patch.in_shrink(z):
            escape = patch.escape_distance(z)
            ranked.append((escape is None, escape or Fraction(0), patch))
    _, _, patch = max(ranked, key=lambda item: (item[0], item[1]))
    return patch, patch.escape_distance(z)


def local_agreement(atlas: MetricPatchAtlas, glued: GluedMetric) -> AgreementReport:
    """Per point z, the largest sampled radius on which D equals Dₐ₀.

    Balls are open D-balls around z; the sampled radii are the distinct
    values D(z, w). A radius of None means agreement on every sampled ball.
    """
    work = _working_atlas(atlas, glued)
    entries = []
    for z in work.points:
        patch, escape = _best_patch(work, z)
        radii = sorted({glued.d(z, w) for w in work.points if w != z})
        radius: Fraction | None = None
        for t in radii:
            closed = [w for w in work.points if glued.d(z, w) <= t]
            agrees = all(w in patch for w in closed) and all(
                glued.d(x, y) == patch.distance(x, y) for x in closed for y in closed
            )
            if not agrees:
                radius = t
                break
        entries.append(
            AgreementEntry(point=z, patch=patch.name, radius=radius, escape=escape)
        )
    return AgreementReport(entries=tuple(entries))


def _lookup(table: Mapping[tuple[str, str], Any]) -> Callable[[str, str], Any]:
    def d(x: str, y: str) -> Any:
        return table[(x, y)]

    return d


def is_metric(glued: GluedMetric | Mapping[tuple[str, str], Any]) -> MetricAxiomReport:
    """Exact audit of the metric axioms over a full distance table."""
    if isinstance(glued, GluedMetric):
        points, d = glued.points, glued.d
    else:
        table = dict(glued)
        points = tuple(dict.fromkeys(p for pair in table for p in pair))
        d = _lookup(table)

    for x in points:
        if d(x, x) != 0:
            return MetricAxiomReport(zero_diagonal=False, witness=(x,))
    for x, y in _unordered_pairs(points):
        if d(x, y) != d(y, x):
            return MetricAxiomReport(symmetric=False, witness=(x, y))
        if d(x, y) <= 0:
            return MetricAxiomReport(positive=False, witness=(x, y))
    for x in points:
        for y in points:
            for z in points:
                if d(x, z) > d(x, y) + d(y, z):
                    return MetricAxiomReport(triangle=False, witness=(x, y, z))
    return MetricAxiomReport()


def check_quasilocal_modulus(
    atlas: MetricPatchAtlas,
    delta_table: Mapping[Any, Any],
) -> ModulusCheck:
    """Dₐ(x, y) < δ(ε) ⟹ D̄(x, y) < ε for every patch and tabulated ε."""
    moduli = [(Fraction(e), Fraction(d)) for e, d in delta_table.items()]
    checked = 0
    violations: list[ModulusViolation] = []
    for patch in atlas.patches:
        for x, y in _unordered_pairs(patch.members):
            here = patch.distance(x, y)
            sup = sup_premetric(atlas, x, y) or here
            for eps, delta in moduli:
                checked += 1
                if here < delta and not sup < eps:
                    violations.append(
                        ModulusViolation(
                            patch=patch.name,
                            x=x,
                            y=y,
                            eps=eps,
                            delta=delta,
                            patch_distance=here,
                            sup_distance=sup,
                        )
                    )
    return ModulusCheck(checked=checked, violations=tuple(violations))


def random_line_atlas(
    rng: random.Random,
    n_points: int = 8,
    *,
    agreeing: bool = True,
) -> MetricPatchAtlas:
    """A random atlas of overlapping windows of points on the line.

    Patch tables are |x - y| (scaled per patch when ``agreeing`` is False,
    which breaks overlap agreement but keeps every table a metric).
    """
    if n_points < 3:
        raise ValueError("need at least 3 points")
    positions = sorted(Fraction(k, 128) for k in rng.sample(range(1, 64), n_points))
    names = tuple(f"p{i}" for i in range(n_points))
    last = n_points - 1
    windows: list[tuple[int, int, list[int]]] = []
    start = 0
    while True:
        end = min(last, start + rng.randint(2, 4))
        shrink = [
            k
            for k in range(start, end + 1)
            if (start == 0 or k > start) and (end == last or k < end)
        ]
        windows.append((start, end, shrink))
        if end == last:
            break
        start = end - 1
    lo = rng.randint(0, last - 1)
    hi = rng.randint(lo + 1, last)
    extra = [k for k in range(lo, hi + 1) if rng.random() < 0.5]
    windows.append((lo, hi, extra))

    patches = []
    for i, (s, e, shrink) in enumerate(windows):
        factor = _ONE if agreeing else Fraction(rng.randint(4, 8), 8)
        idx = range(s, e + 1)
        patches.append(
            MetricPatch(
                name=f"w{i}",
                members=tuple(names[k] for k in idx),
                shrink=tuple(names[k] for k in shrink),
                table=tuple(
                    tuple(abs(positions[j] - positions[k]) * factor for k in idx)
                    for j in idx
                ),
            )
        )
    return MetricPatchAtlas(points=names, patches=tuple(patches))
