"""Models for coarse-geometry audits."""

from __future__ import annotations

from pydantic import Field

from pseudodyn.exactnum import Scalar
from pseudodyn.models.base import ExactRational, ExactScalar, PseudodynModel


class NetCheck(PseudodynModel):
    """Whether a set is a C-net in a ball, with the worst-covered node.

    Attributes:
        holds: Every node is within distance < C of the set.
        c: The constant C.
        worst_point: A node farthest from the set.
        worst_distance: Its distance, None when it cannot reach the set.
    """

    holds: bool
    c: int
    worst_point: ExactScalar | None = None
    worst_distance: int | None = None


class CorrespondencePair(PseudodynModel):
    """One transported orbit point z -> φ(z) with its witness word."""

    z: ExactScalar
    image: ExactScalar
    word: tuple[str, ...] = ()


class Correspondence(PseudodynModel):
    """The map φ_{x,y} on the radius-R ball around x.

    Attributes:
        source: Base point x.
        target: Base point y.
        radius: Ball radius R.
        pairs: Transported pairs in BFS order.
        edges_checked: Non-tree edges verified for well-definedness.
    """

    source: ExactScalar
    target: ExactScalar
    radius: int = Field(ge=0)
    pairs: tuple[CorrespondencePair, ...] = ()
    edges_checked: int = 0

    def as_dict(self) -> dict[Scalar, Scalar]:
        return {p.z: p.image for p in self.pairs}

    @property
    def is_injective(self) -> bool:
        return len({p.image for p in self.pairs}) == len(self.pairs)


class DistortionPair(PseudodynModel):
    """A node pair with source and target word distances."""

    z1: ExactScalar
    z2: ExactScalar
    d_source: int
    d_target: int | None


class DistortionStats(PseudodynModel):
    """Forward Lipschitz check, reverse constant and net constant.

    Attributes:
        forward_holds: d(φz1, φz2) <= d(z1, z2) for every checked pair.
        pairs_checked: Number of unordered node pairs.
        failing_pairs: Pairs violating the forward inequality.
        from_base: (x, z) pairs for every node z, with d(y, φ(z)) as the
            target distance; left out of JSON dumps.
        reverse_constant: max d(z1, z2)/d(φz1, φz2) over pairs in the window.
        net_constant: Smallest C with φ(orbit ∩ A) a C-net in the target ball.
    """

    forward_holds: bool
    pairs_checked: int = 0
    failing_pairs: tuple[DistortionPair, ...] = ()
    from_base: tuple[DistortionPair, ...] = Field(default=(), exclude=True)
    reverse_constant: ExactRational | None = None
    net_constant: int | None = None

