"""Orbit-graph engine: BFS balls, the word metric, words and germs.

Orbit points are exact scalars and are deduplicated by exact equality.
Every ball records, besides its BFS tree, all generator edges between its
nodes, so it doubles as the orbit graph used by the boundary operators.

Example:
    ball = orbit_ball(system, Scalar(0), 2)
    ball.dist(Scalar(4, 5))  # 2
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass
from typing import Any, NamedTuple

import networkx as nx

from pseudodyn._config import EngineConfig, default_config
from pseudodyn.exactnum import Scalar
from pseudodyn.exceptions import ExplosionGuardError, WordDomainError
from pseudodyn.localmaps import GeneratorSystem, Germ
from pseudodyn.models.germs import GermSample, StabilizerWitness

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Word:
    """A word in the generators, applied left to right.

    ``Word(("a", "b"))`` means: apply a first, then b.
    """

    labels: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def then(self, label: str) -> Word:
        return Word(self.labels + (label,))

    def inverse(self, system: GeneratorSystem) -> Word:
        return Word(tuple(system.inverse_of(lab) for lab in reversed(self.labels)))

    def __str__(self) -> str:
        return " ".join(self.labels) if self.labels else "ε"


class NodeInfo(NamedTuple):
    dist: int
    parent: Scalar | None
    label: str | None


class OrbitBall:
    """A BFS ball in an orbit graph.

    Attributes:
        bases: Source points (one for an ordinary ball).
        radius: Radius actually explored.
        nodes: point -> (dist, parent, generator label).
        graph: Undirected networkx graph of all generator edges among nodes.
    """

    def __init__(self, bases: tuple[Scalar, ...], radius: int) -> None:
        self.bases = bases
        self.radius = radius
        self.nodes: dict[Scalar, NodeInfo] = {}
        self.graph: nx.Graph = nx.Graph()

    @property
    def base(self) -> Scalar:
        return self.bases[0]

    def __contains__(self, x: object) -> bool:
        return x in self.nodes

    def __len__(self) -> int:
        return len(self.nodes)

    def dist(self, x: Scalar) -> int | None:
        info = self.nodes.get(x)
        return None if info is None else info.dist

    def points(self, max_dist: int | None = None) -> list[Scalar]:
        """Nodes in discovery order, optionally only those within max_dist."""
        if max_dist is None:
            return list(self.nodes)
        return [p for p, info in self.nodes.items() if info.dist <= max_dist]

    def word_to(self, x: Scalar) -> Word:
        """The BFS-tree word carrying its base to x."""
        labels: list[str] = []
        cursor: Scalar | None = x
        while cursor is not None:
            info = self.nodes[cursor]
            if info.label is not None:
                labels.append(info.label)
            cursor = info.parent
        return Word(tuple(reversed(labels)))

    def source_of(self, x: Scalar) -> Scalar:
        cursor = x
        while (parent := self.nodes[cursor].parent) is not None:
            cursor = parent
        return cursor

    def to_graph(self) -> nx.Graph:
        return self.graph


def _expand(
    system: GeneratorSystem,
    sources: Iterable[Scalar],
    radius: int,
    *,
    config: EngineConfig | None,
    stop: Callable[[Scalar], bool] | None = None,
) -> tuple[OrbitBall, Scalar | None]:
    """Layered BFS from sources; returns the ball and the first stop hit."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    cap = (config or default_config()).node_cap
    starts = tuple(dict.fromkeys(system.normalize(s) for s in sources))
    ball = OrbitBall(starts, radius)
    maps = list(system)
    frontier: deque[Scalar] = deque()
    for s in starts:
        ball.nodes[s] = NodeInfo(0, None, None)
        ball.graph.add_node(s, dist=0)
        frontier.append(s)
        if stop is not None and stop(s):
            ball.radius = 0
            return ball, s

    while frontier:
        u = frontier.popleft()
        du = ball.nodes[u].dist
        for label, f in maps:
            v = f.try_apply(u)
            if v is None or v == u:
                continue
            known = ball.nodes.get(v)
            if known is None:
                if du >= radius:
                    continue
                ball.nodes[v] = NodeInfo(du + 1, u, label)
                ball.graph.add_node(v, dist=du + 1)
                ball.graph.add_edge(u, v, label=label)
                if len(ball.nodes) > cap:
                    logger.warning("Orbit expansion exceeded node cap %d", cap)
                    raise ExplosionGuardError(cap, "nodes")
                if stop is not None and stop(v):
                    ball.radius = du + 1
                    return ball, v
                frontier.append(v)
            elif not ball.graph.has_edge(u, v):
                ball.graph.add_edge(u, v, label=label)
    logger.debug(
        "Expanded ball of radius %d from %d source(s): %d nodes",
        radius,
        len(starts),
        len(ball.nodes),
    )
    return ball, None


def orbit_ball(
    system: GeneratorSystem,
    x: Any,
    radius: int,
    *,
    config: EngineConfig | None = None,
) -> OrbitBall:
    """All points at word distance <= radius from x, with shortest distances.

    Raises:
        ExplosionGuardError: If the configured node cap is exceeded.
    """
    ball, _ = _expand(system, (Scalar.coerce(x),), radius, config=config)
    return ball


def set_neighborhood(
    system: GeneratorSystem,
    points: Iterable[Any],
    radius: int,
    *,
    config: EngineConfig | None = None,
) -> OrbitBall:
    """Multi-source ball: all points within word distance radius of a finite set."""
    ball, _ = _expand(system, (Scalar.coerce(p) for p in points), radius, config=config)
    return ball


def hitting_search(
    system: GeneratorSystem,
    x: Any,
    radius: int,
    target: Callable[[Scalar], bool],
    *,
    config: EngineConfig | None = None,
) -> tuple[int | None, Scalar | None]:
    """BFS from x until a node satisfies target; returns (distance, node)."""
    ball, hit = _expand(system, (Scalar.coerce(x),), radius, config=config, stop=target)
    if hit is None:
        return None, None
    return ball.nodes[hit].dist, hit


def find_word(
    system: GeneratorSystem,
    x: Any,
    radius: int,
    target: Callable[[Scalar], bool],
    *,
    config: EngineConfig | None = None,
) -> tuple[Word, Scalar] | None:
    """A shortest word carrying x to a point satisfying target, if any."""
    ball, hit = _expand(system, (Scalar.coerce(x),), radius, config=config, stop=target)
    if hit is None:
        return None
    return ball.word_to(hit), hit


def distances_to(
    system: GeneratorSystem,
    x: Any,
    targets: Iterable[Any],
    rmax: int,
    *,
    config: EngineConfig | None = None,
) -> dict[Scalar, int | None]:
    """d_E from x to each target, stopping as soon as all are found."""
    wanted = {system.normalize(t) for t in targets}
    remaining = set(wanted)

    def done(p: Scalar) -> bool:
        remaining.discard(p)
        return not remaining

    ball, _ = _expand(system, (Scalar.coerce(x),), rmax, config=config, stop=done)
    return {t: ball.dist(t) for t in wanted}


def word_metric(
    system: GeneratorSystem,
    x: Any,
    y: Any,
    rmax: int,
    *,
    config: EngineConfig | None = None,
) -> int | None:
    """d_E(x, y) when it is at most rmax, else None (unreachable within budget)."""
    target = system.normalize(y)
    dist, _ = hitting_search(system, x, rmax, lambda p: p == target, config=config)
    return dist


def evaluate_word(system: GeneratorSystem, word: Word | Iterable[str], x: Any) -> Scalar:
    """Apply a word left to right.

    Raises:
        WordDomainError: At the first generator whose domain misses the
            running point; carries the length of the applied prefix.
    """
    point = system.normalize(x)
    for i, label in enumerate(word):
        nxt = system[label].try_apply(point)
        if nxt is None:
            raise WordDomainError(i, point, label)
        point = nxt
    return point


def word_germ(system: GeneratorSystem, word: Word | Iterable[str], x: Any) -> Germ:
    """Germ at x of the composite of a word."""
    point = system.normalize(x)
    germ = Germ.identity(system.space, point)
    for label in word:
        germ = germ.then(system[label])
    return germ


class WordEnumerator:
    """Freely reduced words defined at a point, shortest first.

    Words are produced in breadth-first order with generators tried in
    declaration order. Each item is (word, endpoint).

    Example:
        for word, y in WordEnumerator(system, x, 3).iter():
            ...
        everything = WordEnumerator(system, x, 3).collect()
    """

    def __init__(
        self,
        system: GeneratorSystem,
        x: Any,
        max_length: int,
        *,
        config: EngineConfig | None = None,
    ) -> None:
        if max_length < 0:
            raise ValueError("max_length must be >= 0")
        self._system = system
        self._start = system.normalize(x)
        self._max_length = max_length
        self._cap = (config or default_config()).word_cap

    def iter(self) -> Iterator[tuple[Word, Scalar]]:
        system = self._system
        layer: list[tuple[Word, Scalar]] = [(Word(), self._start)]
        produced = 0
        for length in range(self._max_length + 1):
            nxt: list[tuple[Word, Scalar]] = []
            for word, point in layer:
                produced += 1
                if produced > self._cap:
                    logger.warning("Word enumeration exceeded cap %d", self._cap)
                    raise ExplosionGuardError(self._cap, "words")
                yield word, point
                if length == self._max_length:
                    continue
                last = word.labels[-1] if word.labels else None
                banned = system.inverse_of(last) if last is not None else None
                for label, f in system:
                    if label == banned:
                        continue
                    y = f.try_apply(point)
                    if y is not None:
                        nxt.append((word.then(label), y))
            layer = nxt

    def __iter__(self) -> Iterator[tuple[Word, Scalar]]:
        return self.iter()

    def collect(self) -> list[tuple[Word, Scalar]]:
        return list(self.iter())


def enumerate_words(
    system: GeneratorSystem,
    x: Any,
    max_length: int,
    *,
    config: EngineConfig | None = None,
) -> WordEnumerator:
    """Enumerator of freely reduced words of length <= max_length defined at x."""
    return WordEnumerator(system, x, max_length, config=config)


def germ_group_sample(
    system: GeneratorSystem,
    x: Any,
    max_length: int,
    *,
    config: EngineConfig | None = None,
) -> GermSample:
    """Classify every non-empty word of length <= max_length fixing x by its germ."""
    point = system.normalize(x)
    checked = 0
    witnesses: list[StabilizerWitness] = []
    for word, y in enumerate_words(system, point, max_length, config=config):
        checked += 1
        if not word.labels or y != point:
            continue
        germ = word_germ(system, word, point)
        witnesses.append(StabilizerWitness(word=word.labels, trivial=germ.is_identity))
    return GermSample(
        point=point,
        max_length=max_length,
        words_checked=checked,
        stabilizers=tuple(witnesses),
    )


def brute_force_distances(system: GeneratorSystem, x: Any, max_length: int) -> dict[Scalar, int]:
    """Minimum word length to every point reachable by some word of length <= max_length.

    Enumerates all words, reduced or not; used as an oracle for BFS.
    """
    best: dict[Scalar, int] = {}
    maps = list(system)

    def walk(point: Scalar, depth: int) -> None:
        if best.get(point, max_length + 1) > depth:
            best[point] = depth
        if depth == max_length:
            return
        for _, f in maps:
            y = f.try_apply(point)
            if y is not None:
                walk(y, depth + 1)

    walk(system.normalize(x), 0)
    return best
