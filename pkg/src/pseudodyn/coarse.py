"""Coarse geometry on orbits: Hausdorff distance, nets and orbit correspondences.

The correspondence φ_{x,y} between the orbits of two nearby points sends
h(x) to h̃(y), where h is a word in the generators and h̃ is the same word
in their bar extensions. It is built along the BFS tree of the ball around
x and every non-tree edge is re-checked, so a conflict between two words
reaching the same point surfaces as a `WellDefinednessError`.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from fractions import Fraction
from typing import Any

import networkx as nx

from pseudodyn._config import EngineConfig
from pseudodyn.exactnum import Scalar
from pseudodyn.exceptions import (
    EmptySetError,
    ExtensionDomainError,
    NontrivialGermError,
    OutsideDomainError,
    RadiusInsufficientError,
    WellDefinednessError,
)
from pseudodyn.localmaps import DomainSet, GeneratorSystem, Interval, PartialMap, compose
from pseudodyn.models.coarse import (
    Correspondence,
    CorrespondencePair,
    DistortionPair,
    DistortionStats,
    NetCheck,
)
from pseudodyn.pseudogroup import OrbitBall, germ_group_sample, orbit_ball

logger = logging.getLogger(__name__)

Metric = Callable[[Scalar, Scalar], Any]


def table_metric(table: dict[tuple[Scalar, Scalar], Any]) -> Metric:
    """Metric read from a symmetric table keyed by point pairs."""

    def metric(a: Scalar, b: Scalar) -> Any:
        if a == b:
            return 0
        return table[(a, b)] if (a, b) in table else table[(b, a)]

    return metric


def ball_metric(system: GeneratorSystem, radius: int) -> Metric:
    """d_E read from per-point BFS balls of the given radius (cached)."""
    cache: dict[Scalar, OrbitBall] = {}

    def metric(a: Scalar, b: Scalar) -> Any:
        ball = cache.get(a)
        if ball is None:
            ball = cache[a] = orbit_ball(system, a, radius)
        d = ball.dist(b)
        if d is None:
            raise RadiusInsufficientError(radius, f"{b} is not within {radius} of {a}")
        return d

    return metric


def hausdorff_distance(
    a: Iterable[Scalar],
    b: Iterable[Scalar],
    metric: Metric | None = None,
) -> Any:
    """max(sup_a d(a, B), sup_b d(b, A)); the ambient |x - y| by default.

    Raises:
        EmptySetError: If either set is empty.
    """
    left, right = list(dict.fromkeys(a)), list(dict.fromkeys(b))
    if not left or not right:
        raise EmptySetError()
    d = metric or (lambda p, q: abs(p - q))

    def one_sided(xs: list[Scalar], ys: list[Scalar]) -> Any:
        return max(min(d(x, y) for y in ys) for x in xs)

    return max(one_sided(left, right), one_sided(right, left))


def net_check(points: Iterable[Scalar], ambient: OrbitBall, c: int) -> NetCheck:
    """True iff every node of the ambient ball is within distance < C of the set."""
    sources = {p for p in points if p in ambient}
    if c < 1 or not sources:
        worst = next(iter(ambient.nodes), None)
        return NetCheck(holds=False, c=c, worst_point=worst, worst_distance=None)
    reach = dict(nx.multi_source_dijkstra_path_length(ambient.graph, sources))
    worst_point: Scalar | None = None
    worst_distance: int | None = -1
    for node in ambient.nodes:
        d = reach.get(node)
        if d is None:
            worst_point, worst_distance = node, None
            break
        if worst_distance is not None and d > worst_distance:
            worst_point, worst_distance = node, d
    holds = worst_distance is not None and worst_distance < c
    return NetCheck(holds=holds, c=c, worst_point=worst_point, worst_distance=worst_distance)


def _step(system: GeneratorSystem, label: str, u: Scalar, v: Scalar) -> str:
    """The label carrying u to v (the stored edge label may point the other way)."""
    if system[label].try_apply(u) == v:
        return label
    return system.inverse_of(label)


def orbit_correspondence(
    system: GeneratorSystem,
    x: Any,
    y: Any,
    radius: int,
    window: Interval,
    *,
    germ_length: int = 4,
    config: EngineConfig | None = None,
) -> Correspondence:
    """Transport the radius-R ball around x to the orbit of y.

    Raises:
        OutsideDomainError: If x or y is not in the window.
        NontrivialGermError: If a short word fixes x with a non-trivial germ.
        MissingExtensionError: If a generator has no bar extension.
        ExtensionDomainError: If an extended word is not defined on the window.
        WellDefinednessError: If two words reaching one point move y differently.
    """
    sx, sy = system.normalize(x), system.normalize(y)
    for p in (sx, sy):
        if not window.contains(p):
            raise OutsideDomainError(p)
    sample = germ_group_sample(system, sx, germ_length, config=config)
    if not sample.trivial_up_to_length:
        raise NontrivialGermError(sx, " ".join(sample.nontrivial[0].word))

    ball = orbit_ball(system, sx, radius, config=config)
    identity = PartialMap.identity(system.space, DomainSet.of(window))
    extended: dict[Scalar, PartialMap] = {sx: identity}
    images: dict[Scalar, Scalar] = {sx: sy}
    pairs = [CorrespondencePair(z=sx, image=sy, word=())]
    for z, info in ball.nodes.items():
        if info.parent is None or info.label is None:
            continue
        h = compose(system.bar(info.label), extended[info.parent])
        if not h.domain.contains_interval(window):
            raise ExtensionDomainError(info.dist, window)
        extended[z] = h
        images[z] = h.apply(sy)
        pairs.append(
            CorrespondencePair(z=z, image=images[z], word=ball.word_to(z).labels)
        )

    checked = 0
    for u, v, data in ball.graph.edges(data=True):
        if ball.nodes[v].parent == u or ball.nodes[u].parent == v:
            continue
        label = _step(system, data["label"], u, v)
        moved = system.bar(label).try_apply(images[u])
        checked += 1
        if moved != images[v]:
            raise WellDefinednessError(
                v,
                " ".join(ball.word_to(v).labels),
                " ".join(ball.word_to(u).then(label).labels),
            )
    logger.debug("Correspondence on %d nodes, %d cycle edges checked", len(pairs), checked)
    return Correspondence(
        source=sx,
        target=sy,
        radius=radius,
        pairs=tuple(pairs),
        edges_checked=checked,
    )


def distortion_stats(
    corr: Correspondence,
    source_system: GeneratorSystem,
    target_system: GeneratorSystem | None = None,
    *,
    window: DomainSet | None = None,
    config: EngineConfig | None = None,
) -> DistortionStats:
    """Forward inequality, reverse constant on the window, and net constant.

    Distances are computed by BFS with budget 2R from every node; a target
    distance beyond the budget exceeds its source distance and is a
    violation. Target distances are measured in ``target_system``, which
    defaults to ``source_system``: x and y lie in the same space and the bar
    extensions only transport points, they are not used for the metric.

    ``from_base`` keeps d(x, z) and d(y, φ(z)) for every node z in BFS
    order, starting with (x, x).

    Raises:
        RadiusInsufficientError: If the ball has fewer than two points, or no
            point lies in the window.
    """
    target_system = target_system or source_system
    budget = 2 * corr.radius
    nodes = [p.z for p in corr.pairs]
    phi = corr.as_dict()
    if len(nodes) < 2:
        raise RadiusInsufficientError(corr.radius, "the ball has a single point")

    failing: list[DistortionPair] = []
    base = nodes[0]
    from_base = [DistortionPair(z1=base, z2=base, d_source=0, d_target=0)]
    reverse: Fraction | None = None
    checked = 0
    in_window = [z for z in nodes if window is None or window.contains(z)]
    if not in_window:
        raise RadiusInsufficientError(corr.radius, "no orbit point lies in the window")
    window_set = set(in_window)

    for i, z1 in enumerate(nodes):
        src = orbit_ball(source_system, z1, budget, config=config)
        tgt = orbit_ball(target_system, phi[z1], budget, config=config)
        for z2 in nodes[i + 1 :]:
            d_src = src.dist(z2)
            if d_src is None:
                raise RadiusInsufficientError(corr.radius, f"{z1} and {z2} are not within 2R")
            d_tgt = tgt.dist(phi[z2])
            checked += 1
            if z1 == base:
                from_base.append(
                    DistortionPair(z1=base, z2=z2, d_source=d_src, d_target=d_tgt)
                )
            if d_tgt is None or d_tgt > d_src:
                failing.append(DistortionPair(z1=z1, z2=z2, d_source=d_src, d_target=d_tgt))
                continue
            if z1 in window_set and z2 in window_set and d_tgt > 0:
                ratio = Fraction(d_src, d_tgt)
                if reverse is None or ratio > reverse:
                    reverse = ratio

    target_ball = orbit_ball(target_system, corr.target, corr.radius, config=config)
    net = net_check([phi[z] for z in in_window], target_ball, budget + 1)
    net_constant = None if net.worst_distance is None else net.worst_distance + 1
    return DistortionStats(
        forward_holds=not failing,
        pairs_checked=checked,
        failing_pairs=tuple(failing),
        from_base=tuple(from_base),
        reverse_constant=reverse,
        net_constant=net_constant,
    )


def inverse_correspondence_holds(forward: Correspondence, backward: Correspondence) -> bool:
    """φ_{y,x} ∘ φ_{x,y} is the identity wherever both are defined."""
    back = backward.as_dict()
    return all(back.get(p.image, p.z) == p.z for p in forward.pairs)

