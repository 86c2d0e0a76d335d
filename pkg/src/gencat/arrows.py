"""Equivalence-relation arrows between finite ordinals.

An arrow ``n -> m`` is an equivalence relation on the disjoint union of its
boundaries, stored as a partition of the positions ``0..n+m-1``; positions
``0..n-1`` belong to the source and ``n..n+m-1`` to the target.  Composing
two arrows glues them along the shared middle boundary, closes the union
transitively, and restricts to the outer positions.  Blocks of the closure
that disappear entirely inside the middle segment are reported as circles;
they are invisible in the composite arrow but carry weight in the diagram
algebras built on top of this module.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .partitions import Blocks, UnionFind, all_partitions, canonical_blocks

__all__ = [
    "GenArrow",
    "CompositionResult",
    "GluedRelation",
    "make_arrow",
    "identity",
    "compose",
    "glued_closure",
    "transpose",
    "all_arrows",
    "render_arrow",
]


def _check_canonical(domain: int, blocks: Blocks) -> None:
    # Canonical form: nonempty blocks, strictly increasing inside each block,
    # blocks ordered by least member, and the blocks cover 0..domain-1 exactly.
    covered: set[int] = set()
    previous_min = -1
    for block in blocks:
        if not isinstance(block, tuple) or not block:
            raise ValueError("blocks must be nonempty tuples")
        if list(block) != sorted(set(block)):
            raise ValueError(f"block {block} is not strictly increasing")
        if block[0] <= previous_min:
            raise ValueError("blocks must be ordered by least member")
        previous_min = block[0]
        for position in block:
            if not isinstance(position, int):
                raise ValueError(f"position {position!r} is not an integer")
            if not 0 <= position < domain:
                raise ValueError(
                    f"position {position} out of range for domain of size {domain}"
                )
            if position in covered:
                raise ValueError(f"position {position} appears in more than one block")
            covered.add(position)
    if len(covered) != domain:
        missing = sorted(set(range(domain)) - covered)
        raise ValueError(f"blocks do not cover positions {missing}")


@dataclass(frozen=True)
class GenArrow:
    """A partition arrow between the ordinals ``source`` and ``target``.

    Instances must be in canonical form; use :func:`make_arrow` to build one
    from loose input (partial block lists are completed with singletons).
    """

    source: int
    target: int
    blocks: Blocks

    def __post_init__(self) -> None:
        if self.source < 0 or self.target < 0:
            raise ValueError("boundaries must be nonnegative")
        _check_canonical(self.source + self.target, self.blocks)

    @property
    def positions(self) -> int:
        return self.source + self.target

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "blocks": [list(block) for block in self.blocks],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GenArrow":
        if not isinstance(data, dict):
            raise ValueError("arrow payload must be a JSON object")
        try:
            source = data["source"]
            target = data["target"]
        except KeyError as missing:
            raise ValueError(f"arrow payload lacks field {missing}") from None
        if not isinstance(source, int) or not isinstance(target, int):
            raise ValueError("arrow boundaries must be integers")
        return make_arrow(source, target, data.get("blocks", []))

    def __str__(self) -> str:
        shown = " ".join("{" + ",".join(map(str, block)) + "}" for block in self.blocks)
        return f"{self.source}->{self.target} [{shown}]"


@dataclass(frozen=True)
class CompositionResult:
    """A composite arrow together with the number of circles discarded."""

    arrow: GenArrow
    circles: int


@dataclass(frozen=True)
class GluedRelation:
    """Transitive closure of two composable arrows over the glued domain.

    The domain has three segments: ``source`` positions of the first arrow
    applied, the shared ``middle`` boundary, and the ``end`` positions of the
    second.  Restricting to the outer segments yields the composite.
    """

    source: int
    middle: int
    end: int
    blocks: Blocks

    @property
    def domain_size(self) -> int:
        return self.source + self.middle + self.end


def make_arrow(source: int, target: int, blocks: Iterable[Iterable[int]] = ()) -> GenArrow:
    """Build an arrow from any disjoint family of blocks.

    Positions not mentioned become singleton blocks.  Raises ``ValueError``
    for negative boundaries, out-of-range positions, or a position listed in
    two blocks.
    """
    if source < 0 or target < 0:
        raise ValueError("boundaries must be nonnegative")
    domain = source + target
    seen: set[int] = set()
    cleaned: list[set[int]] = []
    for block in blocks:
        members = set(block)
        if not members:
            continue
        for position in members:
            if not isinstance(position, int):
                raise ValueError(f"position {position!r} is not an integer")
            if not 0 <= position < domain:
                raise ValueError(
                    f"position {position} out of range for a {source}->{target} arrow"
                )
            if position in seen:
                raise ValueError(f"position {position} appears in more than one block")
        seen |= members
        cleaned.append(members)
    cleaned.extend({position} for position in range(domain) if position not in seen)
    return GenArrow(source, target, canonical_blocks(cleaned))


def identity(n: int) -> GenArrow:
    """The identity arrow on ``n``: position i shares a block with n+i."""
    return GenArrow(n, n, tuple((i, i + n) for i in range(n)))


def glued_closure(second: GenArrow, first: GenArrow) -> GluedRelation:
    """Union of ``first`` with the shifted ``second``, closed transitively.

    ``first`` must feed into ``second``: its target boundary is the source
    boundary of ``second``.
    """
    if first.target != second.source:
        raise ValueError(
            f"cannot compose: {first.source}->{first.target} does not feed "
            f"{second.source}->{second.target}"
        )
    n, m, k = first.source, first.target, second.target
    forest = UnionFind(n + m + k)
    for block in first.blocks:
        for position in block[1:]:
            forest.union(block[0], position)
    for block in second.blocks:
        for position in block[1:]:
            forest.union(block[0] + n, position + n)
    return GluedRelation(n, m, k, forest.blocks())


def compose(second: GenArrow, first: GenArrow) -> CompositionResult:
    """Compose two arrows, applying ``first`` first.

    The result arrow runs from ``first.source`` to ``second.target``; blocks
    of the glued closure that never reach an outer position are counted as
    circles and dropped.
    """
    glued = glued_closure(second, first)
    n, m = glued.source, glued.middle
    outer_blocks: list[list[int]] = []
    circles = 0
    for block in glued.blocks:
        # End positions are renumbered down past the vanished middle segment.
        outer = [x if x < n else x - m for x in block if x < n or x >= n + m]
        if outer:
            outer_blocks.append(outer)
        else:
            circles += 1
    return CompositionResult(GenArrow(n, glued.end, canonical_blocks(outer_blocks)), circles)


def transpose(arrow: GenArrow) -> GenArrow:
    """Swap the roles of source and target.

    Source position i becomes target position i of the result (absolute
    position m+i), and target position j becomes source position j.
    Transposing twice is the identity.
    """
    n, m = arrow.source, arrow.target

    def flip(position: int) -> int:
        return position + m if position < n else position - n

    return GenArrow(m, n, canonical_blocks([map(flip, block) for block in arrow.blocks]))


def all_arrows(source: int, target: int) -> Iterator[GenArrow]:
    """Every arrow ``source -> target``, one per partition of the positions."""
    for blocks in all_partitions(source + target):
        yield GenArrow(source, target, blocks)


def render_arrow(arrow: GenArrow) -> str:
    """Plain-text sketch: a source row, a target row, one line per block."""

    def label(position: int) -> str:
        if position < arrow.source:
            return f"s{position}"
        return f"t{position - arrow.source}"

    lines = [
        " ".join(label(i) for i in range(arrow.source)),
        " ".join(label(arrow.source + j) for j in range(arrow.target)),
    ]
    lines.extend(" ".join(label(p) for p in block) for block in arrow.blocks)
    return "\n".join(lines)
