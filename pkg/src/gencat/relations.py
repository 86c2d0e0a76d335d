"""Binary relations between finite ordinals and the function-set picture.

A partition arrow can be represented by the set of digit functions that
respect it.  ``fequal_set`` collects the functions constant on each block,
``fs_set`` those that are monotone along the relation, and ``fp_arrow``
turns an arrow ``n -> m`` into the relation between the lexicographic
indices of functions ``n -> p`` and ``m -> p`` whose concatenation is
block-constant.  That assignment is functorial and faithful, which the
test suite exercises exhaustively on small boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from collections.abc import Iterable, Iterator

import numpy as np

from .arrows import GenArrow

__all__ = [
    "DEFAULT_ENUMERATION_LIMIT",
    "EnumerationLimitError",
    "RelArrow",
    "rel_identity",
    "rel_compose",
    "PFun",
    "all_pfuns",
    "join",
    "PairRelation",
    "as_relation",
    "TwoPointOrder",
    "fequal_set",
    "fs_set",
    "fp_arrow",
    "cone_char",
    "PropReport",
    "check_props",
]

DEFAULT_ENUMERATION_LIMIT = 1 << 20


class EnumerationLimitError(ValueError):
    """An enumeration would exceed the configured size limit."""


@dataclass(frozen=True)
class RelArrow:
    """A binary relation from ``src_size`` indices to ``tgt_size`` indices."""

    src_size: int
    tgt_size: int
    pairs: frozenset

    def __post_init__(self) -> None:
        if self.src_size < 0 or self.tgt_size < 0:
            raise ValueError("relation boundaries must be nonnegative")
        normalized = frozenset((int(row), int(col)) for row, col in self.pairs)
        object.__setattr__(self, "pairs", normalized)
        for row, col in normalized:
            if not (0 <= row < self.src_size and 0 <= col < self.tgt_size):
                raise ValueError(f"pair ({row}, {col}) out of range")

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def to_matrix(self) -> np.ndarray:
        """Dense 0-1 matrix, rows indexed by the source side."""
        matrix = np.zeros((self.src_size, self.tgt_size), dtype=np.int64)
        for row, col in self.pairs:
            matrix[row, col] = 1
        return matrix

    def to_dict(self) -> dict:
        return {
            "src": self.src_size,
            "tgt": self.tgt_size,
            "pairs": [list(pair) for pair in self.sorted_pairs()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RelArrow":
        if not isinstance(data, dict):
            raise ValueError("relation payload must be a JSON object")
        try:
            src = data["src"]
            tgt = data["tgt"]
        except KeyError as missing:
            raise ValueError(f"relation payload lacks field {missing}") from None
        pairs = frozenset(tuple(pair) for pair in data.get("pairs", []))
        return cls(src, tgt, pairs)


def rel_identity(size: int) -> RelArrow:
    return RelArrow(size, size, frozenset((i, i) for i in range(size)))


def rel_compose(second: RelArrow, first: RelArrow) -> RelArrow:
    """Relational composition, ``first`` applied first."""
    if first.tgt_size != second.src_size:
        raise ValueError(
            f"cannot compose relations {first.src_size}->{first.tgt_size} "
            f"and {second.src_size}->{second.tgt_size}"
        )
    by_middle: dict[int, list[int]] = {}
    for middle, col in second.pairs:
        by_middle.setdefault(middle, []).append(col)
    pairs = frozenset(
        (row, col)
        for row, middle in first.pairs
        for col in by_middle.get(middle, ())
    )
    return RelArrow(first.src_size, second.tgt_size, pairs)


@dataclass(frozen=True)
class PFun:
    """A function into the ordinal ``base``, stored as its digit sequence.

    Functions of a fixed arity are ordered lexicographically by digits;
    ``index`` is the position in that order.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 1:
            raise ValueError("base must be at least 1")
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        for digit in self.digits:
            if not 0 <= digit < self.base:
                raise ValueError(f"digit {digit} out of range for base {self.base}")

    @property
    def arity(self) -> int:
        return len(self.digits)

    @property
    def index(self) -> int:
        value = 0
        for digit in self.digits:
            value = value * self.base + digit
        return value

    @classmethod
    def from_index(cls, base: int, arity: int, index: int) -> "PFun":
        if not 0 <= index < base**arity:
            raise ValueError(f"index {index} out of range for {base}^{arity} functions")
        digits = []
        for _ in range(arity):
            index, digit = divmod(index, base)
            digits.append(digit)
        return cls(base, tuple(reversed(digits)))


def all_pfuns(base: int, arity: int) -> Iterator[PFun]:
    """All functions of the given arity, in lexicographic (index) order."""
    for digits in product(range(base), repeat=arity):
        yield PFun(base, digits)


def join(first: PFun, second: PFun) -> PFun:
    """Concatenate two digit functions over the same base."""
    if first.base != second.base:
        raise ValueError("cannot join functions over different bases")
    return PFun(first.base, first.digits + second.digits)


@dataclass(frozen=True)
class PairRelation:
    """A raw binary relation on {0, ..., size-1}, kept literally as pairs."""

    size: int
    pairs: frozenset

    def __post_init__(self) -> None:
        normalized = frozenset((int(x), int(y)) for x, y in self.pairs)
        object.__setattr__(self, "pairs", normalized)
        for x, y in normalized:
            if not (0 <= x < self.size and 0 <= y < self.size):
                raise ValueError(f"pair ({x}, {y}) out of range")

    @classmethod
    def from_arrow(cls, arrow: GenArrow) -> "PairRelation":
        pairs = frozenset(
            (x, y) for block in arrow.blocks for x in block for y in block
        )
        return cls(arrow.positions, pairs)

    @classmethod
    def from_blocks(cls, size: int, blocks: Iterable[Iterable[int]]) -> "PairRelation":
        pairs = frozenset(
            (x, y) for block in blocks for x in block for y in block
        )
        return cls(size, pairs)

    def related(self, x: int, y: int) -> bool:
        return (x, y) in self.pairs

    def reflexive_symmetric_closure(self) -> "PairRelation":
        pairs = set(self.pairs)
        pairs.update((y, x) for x, y in self.pairs)
        pairs.update((x, x) for x in range(self.size))
        return PairRelation(self.size, frozenset(pairs))

    def is_reflexive(self) -> bool:
        return all((x, x) in self.pairs for x in range(self.size))

    def is_symmetric(self) -> bool:
        return all((y, x) in self.pairs for x, y in self.pairs)

    def is_transitive(self) -> bool:
        return all(
            (x, z) in self.pairs
            for x, y in self.pairs
            for y2, z in self.pairs
            if y == y2
        )

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()


def as_relation(relation: GenArrow | PairRelation) -> PairRelation:
    """Accept either an arrow or a raw relation; arrows become their pair sets."""
    if isinstance(relation, PairRelation):
        return relation
    if isinstance(relation, GenArrow):
        return PairRelation.from_arrow(relation)
    raise TypeError(f"expected an arrow or a pair relation, got {relation!r}")


@dataclass(frozen=True)
class TwoPointOrder:
    """The order with ``p0`` strictly below ``p1``, extended numerically.

    Restricted to the two distinguished values this is the expected
    two-point order; on larger ordinals ``related`` is plain ``<=``.
    """

    p0: int = 0
    p1: int = 1

    def __post_init__(self) -> None:
        if self.p0 >= self.p1:
            raise ValueError("p0 must lie strictly below p1")

    def related(self, a: int, b: int) -> bool:
        return a <= b


_DEFAULT_ORDER = TwoPointOrder()


def _guard_enumeration(count: int, limit: int) -> None:
    if count > limit:
        raise EnumerationLimitError(
            f"enumeration of {count} functions exceeds the limit of {limit}"
        )


def fequal_set(
    relation: GenArrow | PairRelation,
    base: int,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> set[PFun]:
    """All functions into ``base`` that are constant across related positions."""
    if base < 1:
        raise ValueError("base must be at least 1")
    rel = as_relation(relation)
    _guard_enumeration(base**rel.size, limit)
    return {
        fun
        for fun in all_pfuns(base, rel.size)
        if all(fun.digits[x] == fun.digits[y] for x, y in rel.pairs)
    }


def fs_set(
    relation: GenArrow | PairRelation,
    base: int,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
    order: TwoPointOrder = _DEFAULT_ORDER,
) -> set[PFun]:
    """All functions into ``base`` that are monotone along the relation."""
    if base < 1:
        raise ValueError("base must be at least 1")
    rel = as_relation(relation)
    _guard_enumeration(base**rel.size, limit)
    return {
        fun
        for fun in all_pfuns(base, rel.size)
        if all(order.related(fun.digits[x], fun.digits[y]) for x, y in rel.pairs)
    }


def _respects_blocks(fun: PFun, arrow: GenArrow) -> bool:
    return all(
        all(fun.digits[position] == fun.digits[block[0]] for position in block[1:])
        for block in arrow.blocks
    )


def fp_arrow(
    base: int, arrow: GenArrow, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> RelArrow:
    """Represent an arrow as a relation between function indices.

    A source function ``f1: n -> base`` is related to a target function
    ``f2: m -> base`` exactly when their concatenation is constant on each
    block of the arrow.  Indices are lexicographic.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    n, m = arrow.source, arrow.target
    _guard_enumeration(base**n * base**m, limit)
    pairs = set()
    for row, f1 in enumerate(all_pfuns(base, n)):
        for col, f2 in enumerate(all_pfuns(base, m)):
            if _respects_blocks(join(f1, f2), arrow):
                pairs.add((row, col))
    return RelArrow(base**n, base**m, frozenset(pairs))


def cone_char(
    relation: GenArrow | PairRelation, x: int, order: TwoPointOrder = _DEFAULT_ORDER
) -> PFun:
    """Characteristic function of the cone at ``x``: marks positions related to x."""
    rel = as_relation(relation)
    if not 0 <= x < rel.size:
        raise ValueError(f"position {x} out of range for a relation on {rel.size}")
    digits = tuple(
        order.p1 if rel.related(x, y) else order.p0 for y in range(rel.size)
    )
    return PFun(max(order.p1 + 1, 2), digits)


@dataclass(frozen=True)
class PropReport:
    """Outcome of the three structure-versus-functions checks.

    ``cones``: transitivity holds iff every cone characteristic is monotone
    along the relation.  ``order_sets``: for a symmetric relation the
    constant-on-blocks and monotone function sets coincide.  ``separation``:
    the relation is an equivalence iff two positions are related exactly
    when no constant-on-related-pairs function separates them.
    """

    cones: bool
    order_sets: bool
    separation: bool

    def all_hold(self) -> bool:
        return self.cones and self.order_sets and self.separation


def check_props(
    relation: GenArrow | PairRelation,
    base: int = 2,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> PropReport:
    """Evaluate the three biconditionals literally on both sides."""
    rel = as_relation(relation)
    equal_set = fequal_set(rel, base, limit)
    order_set = fs_set(rel, base, limit)

    cones_monotone = all(
        PFun(base, cone_char(rel, x).digits) in order_set for x in range(rel.size)
    )
    cones = rel.is_transitive() == cones_monotone

    order_sets = (not rel.is_symmetric()) or (equal_set == order_set)

    def inseparable(x: int, y: int) -> bool:
        return all(fun.digits[x] == fun.digits[y] for fun in equal_set)

    agreement = all(
        rel.related(x, y) == inseparable(x, y)
        for x in range(rel.size)
        for y in range(rel.size)
    )
    separation = rel.is_equivalence() == agreement

    return PropReport(cones, order_sets, separation)
