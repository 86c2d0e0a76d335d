"""Shared helpers for set partitions of {0, ..., size-1}."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

Blocks = tuple[tuple[int, ...], ...]


class UnionFind:
    """Disjoint-set forest over the integers 0..size-1."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        elif self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.parent[rb] = ra

    def blocks(self) -> Blocks:
        """The partition currently represented, in canonical form."""
        by_root: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            by_root.setdefault(self.find(x), []).append(x)
        return canonical_blocks(by_root.values())


def canonical_blocks(blocks: Iterable[Iterable[int]]) -> Blocks:
    """Sort members within each block, then order blocks by least member."""
    cleaned = [tuple(sorted(set(block))) for block in blocks if block]
    cleaned.sort(key=lambda block: block[0])
    return tuple(cleaned)


def all_partitions(size: int) -> Iterator[Blocks]:
    """Yield every set partition of {0, ..., size-1} in canonical form.

    Enumeration is by restricted growth strings: element i may join any
    block already open, or open the next fresh one.  Because block labels
    are opened in order of their least element, the result is already
    canonical.
    """

    def extend(labels: list[int], used: int) -> Iterator[Blocks]:
        if len(labels) == size:
            grouped: list[list[int]] = [[] for _ in range(used)]
            for position, label in enumerate(labels):
                grouped[label].append(position)
            yield tuple(tuple(block) for block in grouped)
            return
        for label in range(used + 1):
            yield from extend(labels + [label], max(used, label + 1))

    yield from extend([], 0)
