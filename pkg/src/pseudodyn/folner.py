"""Boundaries, quasi-lattice constants, Følner ratios and averaging measures.

The r-boundary of a finite set S in an orbit graph is

    ∂_r S = {x : d(x, S) < r and d(x, M \\ S) < r},

taken over the whole orbit M, so ∂_r S \\ S is the outer shell. The graph
boundary ∂S is S ∩ ∂_2 S: the points of S with an edge leaving S.

Every operator works on an `OrbitBall` and refuses to answer when the ball
does not reach far enough around S to see all the relevant points.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any, Protocol

import networkx as nx

from pseudodyn.exactnum import Scalar, approx
from pseudodyn.exceptions import InsufficientMarginError, SupportViolationError
from pseudodyn.localmaps import PartialMap
from pseudodyn.models.folner import (
    ACapSCheck,
    FolnerReport,
    FolnerRow,
    InvarianceDefect,
    MeasureSample,
    MeasureSeries,
)
from pseudodyn.pseudogroup import OrbitBall

logger = logging.getLogger(__name__)

_ZERO = Scalar(0)


# ---------------------------------------------------------------------------
# test functions
# ---------------------------------------------------------------------------


class SampleFunction(Protocol):
    """A real function evaluated exactly at orbit points."""

    def __call__(self, x: Scalar) -> Scalar: ...

    def sup_norm(self) -> Scalar: ...


@dataclass(frozen=True)
class PiecewiseLinearFunction:
    """Linear interpolation through breakpoints, zero outside their span.

    Example:
        tent = PiecewiseLinearFunction.tent(0, 1)  # peak 1 at 1/2
    """

    breakpoints: tuple[tuple[Scalar, Scalar], ...]

    def __post_init__(self) -> None:
        xs = [x for x, _ in self.breakpoints]
        if any(not a < b for a, b in zip(xs, xs[1:], strict=False)):
            raise ValueError("breakpoints must be strictly increasing")

    @classmethod
    def of(cls, points: Iterable[tuple[Any, Any]]) -> PiecewiseLinearFunction:
        return cls(tuple((Scalar.coerce(x), Scalar.coerce(y)) for x, y in points))

    @classmethod
    def tent(cls, lo: Any, hi: Any, height: Any = 1) -> PiecewiseLinearFunction:
        """Tent supported in (lo, hi) with its peak at the midpoint."""
        lo_, hi_ = Scalar.coerce(lo), Scalar.coerce(hi)
        return cls.of([(lo_, 0), ((lo_ + hi_) / 2, height), (hi_, 0)])

    def __call__(self, x: Scalar) -> Scalar:
        pts = self.breakpoints
        if not pts or x < pts[0][0] or x > pts[-1][0]:
            return _ZERO
        for (x0, y0), (x1, y1) in zip(pts, pts[1:], strict=False):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return pts[-1][1]

    def sup_norm(self) -> Scalar:
        return max((abs(y) for _, y in self.breakpoints), default=_ZERO)


@dataclass(frozen=True)
class TabulatedFunction:
    """Explicit values on finitely many points, zero elsewhere."""

    values: Mapping[Scalar, Scalar] = field(default_factory=dict)

    def __call__(self, x: Scalar) -> Scalar:
        return self.values.get(x, _ZERO)

    def sup_norm(self) -> Scalar:
        return max((abs(v) for v in self.values.values()), default=_ZERO)


@dataclass(frozen=True)
class ConstantFunction:
    value: Scalar = Scalar(1)

    def __call__(self, x: Scalar) -> Scalar:
        return self.value

    def sup_norm(self) -> Scalar:
        return abs(self.value)


# ---------------------------------------------------------------------------
# boundaries
# ---------------------------------------------------------------------------


def _check_margin(graph: OrbitBall, points: Iterable[Scalar], reach: int) -> None:
    deepest = 0
    for p in points:
        d = graph.dist(p)
        if d is None:
            raise InsufficientMarginError(reach, graph.radius)
        deepest = max(deepest, d)
    if deepest + reach > graph.radius:
        raise InsufficientMarginError(deepest + reach, graph.radius)


def _within(g: nx.Graph, sources: set[Scalar], cutoff: int) -> dict[Scalar, int]:
    if not sources or cutoff < 0:
        return {}
    return dict(nx.multi_source_dijkstra_path_length(g, sources, cutoff=cutoff))


def r_boundary(graph: OrbitBall, points: Iterable[Scalar], r: int) -> set[Scalar]:
    """∂_r S over the whole orbit.

    Raises:
        InsufficientMarginError: If the ball does not contain every point
            within 2r - 2 of S.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    s = set(points)
    if not s:
        return set()
    _check_margin(graph, s, 2 * r - 2)
    g = graph.graph
    near_s = _within(g, s, r - 1)
    complement = {x for x in near_s if x not in s}
    near_c = _within(g, complement, r - 1)
    return {x for x in near_s if x in near_c}


def graph_boundary(graph: OrbitBall, points: Iterable[Scalar]) -> set[Scalar]:
    """Points of S with an edge into the complement (equals S ∩ ∂_2 S)."""
    s = set(points)
    if not s:
        return set()
    _check_margin(graph, s, 1)
    g = graph.graph
    return {x for x in s if any(y not in s for y in g.neighbors(x))}


def folner_ratios(
    graph: OrbitBall,
    sets: Sequence[Iterable[Scalar]],
    radii: Sequence[int],
    *,
    start: int = 1,
) -> FolnerReport:
    """Exact ratios #∂_r S_n / #S_n, the inner form and the graph-boundary ratio."""
    rows = []
    for n, raw in enumerate(sets, start=start):
        s = set(raw)
        boundary = graph_boundary(graph, s)
        for r in radii:
            b = r_boundary(graph, s, r)
            rows.append(
                FolnerRow(
                    n=n,
                    r=r,
                    set_size=len(s),
                    boundary_size=len(b),
                    inner_size=len(b & s),
                    graph_boundary_size=len(boundary),
                )
            )
    return FolnerReport(rows=tuple(rows))


def quasi_lattice_K(graph: OrbitBall, r: int) -> int:
    """max #B(x, r) over nodes whose closed r-ball lies inside the graph.

    Raises:
        InsufficientMarginError: If no node has a complete r-ball.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    inner = [p for p, info in graph.nodes.items() if info.dist + r <= graph.radius]
    if not inner:
        raise InsufficientMarginError(r, graph.radius)
    g = graph.graph
    return max(
        len(nx.single_source_shortest_path_length(g, p, cutoff=r)) for p in inner
    )


def boundary_growth_holds(graph: OrbitBall, points: Iterable[Scalar], r: int, k: int) -> bool:
    """#∂_r S <= K^r · #∂S, where K bounds vertex degrees."""
    s = set(points)
    return len(r_boundary(graph, s, r)) <= k**r * len(graph_boundary(graph, s))


def shell_bound_holds(graph: OrbitBall, points: Iterable[Scalar], r: int) -> bool:
    """#(∂_r S \\ S) <= K_r · #(S ∩ ∂_r S)."""
    s = set(points)
    b = r_boundary(graph, s, r)
    return len(b - s) <= quasi_lattice_K(graph, r) * len(b & s)


def a_cap_s_check(
    graph: OrbitBall,
    net: Iterable[Scalar],
    points: Iterable[Scalar],
    c: int,
) -> ACapSCheck:
    """Check #S <= #(S ∩ ∂_C S) + K·#(A ∩ S) on the graph's interior.

    Γ is the set of nodes whose C-neighbourhood the ball sees; K is the
    largest open C-ball count there.
    """
    if c < 2:
        raise ValueError("C must be > 1")
    a, s = set(net), set(points)
    g = graph.graph
    gamma = {p for p, info in graph.nodes.items() if info.dist + 2 * c - 2 <= graph.radius}
    s &= gamma
    near_a = _within(g, a, c - 1)
    is_net = all(p in near_a for p in gamma)
    k = max(
        (len(nx.single_source_shortest_path_length(g, p, cutoff=c - 1)) for p in gamma),
        default=0,
    )
    boundary = r_boundary(graph, s, c) if s else set()
    return ACapSCheck(
        set_size=len(s),
        boundary_part=len(s & boundary),
        net_part=len(a & s),
        k=k,
        is_net=is_net,
    )


# ---------------------------------------------------------------------------
# averaging measures
# ---------------------------------------------------------------------------


def averaging_measure(points: Iterable[Scalar], f: Callable[[Scalar], Scalar]) -> Scalar:
    """μ(f) = (1/#S) Σ_{x ∈ S} f(x), exactly."""
    s = list(dict.fromkeys(points))
    if not s:
        raise ValueError("averaging over an empty set")
    total = _ZERO
    for x in s:
        total = total + f(x)
    return total / len(s)


def measure_series(
    sets: Sequence[Iterable[Scalar]],
    f: SampleFunction,
    *,
    start: int = 1,
) -> MeasureSeries:
    """μ_n(f) along a sequence of sets."""
    samples = []
    for n, s in enumerate(sets, start=start):
        value = averaging_measure(s, f)
        samples.append(MeasureSample(n=n, value=value, approx=approx(value, 20)))
    return MeasureSeries(samples=tuple(samples), sup_norm=f.sup_norm())


def invariance_defect(
    graph: OrbitBall,
    points: Iterable[Scalar],
    g: PartialMap,
    f: SampleFunction,
    *,
    generator: str = "g",
) -> InvarianceDefect:
    """|μ(f∘g) − μ(f)| against the bound 2·sup|f|·#∂S/#S.

    f∘g is extended by zero outside dom g.

    Raises:
        SupportViolationError: If f is non-zero at a point of S outside im g.
    """
    s = list(dict.fromkeys(points))
    image = g.image
    for x in s:
        if f(x).sign() != 0 and not image.contains(x):
            raise SupportViolationError(x, generator)

    def pulled(x: Scalar) -> Scalar:
        y = g.try_apply(x)
        return _ZERO if y is None else f(y)

    defect = abs(averaging_measure(s, pulled) - averaging_measure(s, f))
    ratio = Scalar(len(graph_boundary(graph, s))) / len(s)
    bound = 2 * f.sup_norm() * ratio
    return InvarianceDefect(defect=defect, bound=bound, passed=bool(defect <= bound))
