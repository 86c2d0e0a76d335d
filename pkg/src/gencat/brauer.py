"""Diagram algebras over partition arrows with all blocks of size two.

An ``(n, n)`` diagram is a square arrow whose partition is a perfect
matching of its ``2n`` positions.  Diagrams multiply by gluing; every
circle produced contributes one factor of the loop parameter ``c``, so the
span of the diagrams over exact rationals forms an algebra.  Sending a
diagram to its 0-1 matrix over functions into ``p`` turns diagram
multiplication into matrix multiplication with the circle factors showing
up as powers of ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from collections.abc import Iterable, Iterator

import numpy as np

from .arrows import GenArrow, compose, identity, make_arrow
from .relations import DEFAULT_ENUMERATION_LIMIT, EnumerationLimitError, RelArrow

__all__ = [
    "BrauerDiagram",
    "BrauerElement",
    "BrauerAlgebraConfig",
    "identity_diagram",
    "all_diagrams",
    "diagram_mul",
    "algebra_mul",
    "beta_matrix",
    "beta_as_relation",
    "boolean_product",
    "matrix_to_dict",
    "matrix_from_dict",
]


@dataclass(frozen=True)
class BrauerDiagram:
    """A square arrow whose blocks form a perfect matching."""

    arrow: GenArrow

    def __post_init__(self) -> None:
        if self.arrow.source != self.arrow.target:
            raise ValueError("a diagram must have equal boundaries")
        for block in self.arrow.blocks:
            if len(block) != 2:
                raise ValueError(
                    f"block {block} has {len(block)} members; diagrams pair "
                    "positions two by two"
                )

    @property
    def n(self) -> int:
        return self.arrow.source

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "BrauerDiagram":
        return cls(make_arrow(n, n, blocks))


def identity_diagram(n: int) -> BrauerDiagram:
    return BrauerDiagram(identity(n))


def all_diagrams(n: int) -> Iterator[BrauerDiagram]:
    """All perfect matchings of the 2n positions, (2n-1)!! of them.

    Generated by always pairing the least unmatched position with each
    candidate partner in turn.
    """

    def matchings(points: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not points:
            yield ()
            return
        first, rest = points[0], points[1:]
        for index, partner in enumerate(rest):
            for tail in matchings(rest[:index] + rest[index + 1 :]):
                yield ((first, partner),) + tail

    for pairing in matchings(tuple(range(2 * n))):
        yield BrauerDiagram.from_blocks(n, pairing)


def diagram_mul(left: BrauerDiagram, right: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Glue ``left`` then ``right``; returns the diagram and its circle count.

    Matching two perfect matchings end to end again yields a perfect
    matching, with the closed loops through the middle reported separately.
    """
    if left.n != right.n:
        raise ValueError(f"cannot multiply diagrams on {left.n} and {right.n} strands")
    result = compose(right.arrow, left.arrow)
    return BrauerDiagram(result.arrow), result.circles


def _parse_coefficient(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as bad:
        raise ValueError(f"bad rational literal {text!r}") from bad


def _format_coefficient(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class BrauerElement:
    """A rational linear combination of diagrams on a fixed strand count.

    Terms are kept sorted by diagram with zero coefficients dropped, so
    structural equality is linear-combination equality.
    """

    n: int
    terms: tuple[tuple[BrauerDiagram, Fraction], ...]

    @classmethod
    def from_terms(
        cls, n: int, items: Iterable[tuple[BrauerDiagram, Fraction | int]]
    ) -> "BrauerElement":
        accumulated: dict[BrauerDiagram, Fraction] = {}
        for diagram, coefficient in items:
            if diagram.n != n:
                raise ValueError(
                    f"diagram on {diagram.n} strands in an element on {n}"
                )
            accumulated[diagram] = (
                accumulated.get(diagram, Fraction(0)) + Fraction(coefficient)
            )
        kept = [
            (diagram, coefficient)
            for diagram, coefficient in accumulated.items()
            if coefficient != 0
        ]
        kept.sort(key=lambda item: item[0].arrow.blocks)
        return cls(n, tuple(kept))

    @classmethod
    def from_diagram(
        cls, diagram: BrauerDiagram, coefficient: Fraction | int = 1
    ) -> "BrauerElement":
        return cls.from_terms(diagram.n, [(diagram, coefficient)])

    @classmethod
    def zero(cls, n: int) -> "BrauerElement":
        return cls(n, ())

    def coefficient(self, diagram: BrauerDiagram) -> Fraction:
        for candidate, value in self.terms:
            if candidate == diagram:
                return value
        return Fraction(0)

    def __add__(self, other: "BrauerElement") -> "BrauerElement":
        if not isinstance(other, BrauerElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot add elements on different strand counts")
        return BrauerElement.from_terms(self.n, self.terms + other.terms)

    def __rmul__(self, scalar: Fraction | int) -> "BrauerElement":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return BrauerElement.from_terms(
            self.n, [(diagram, scalar * value) for diagram, value in self.terms]
        )

    def __neg__(self) -> "BrauerElement":
        return -1 * self

    def __sub__(self, other: "BrauerElement") -> "BrauerElement":
        return self + (-other)

    def to_dict(self, c: Fraction) -> dict:
        return {
            "n": self.n,
            "c": _format_coefficient(Fraction(c)),
            "terms": [
                {
                    "blocks": [list(block) for block in diagram.arrow.blocks],
                    "coeff": _format_coefficient(value),
                }
                for diagram, value in self.terms
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> tuple["BrauerElement", Fraction]:
        if not isinstance(data, dict):
            raise ValueError("element payload must be a JSON object")
        try:
            n = data["n"]
            c = _parse_coefficient(str(data["c"]))
        except KeyError as missing:
            raise ValueError(f"element payload lacks field {missing}") from None
        if not isinstance(n, int):
            raise ValueError("strand count must be an integer")
        items = [
            (
                BrauerDiagram.from_blocks(n, entry["blocks"]),
                _parse_coefficient(str(entry["coeff"])),
            )
            for entry in data.get("terms", [])
        ]
        return cls.from_terms(n, items), c


@dataclass(frozen=True)
class BrauerAlgebraConfig:
    """Strand count and loop parameter fixing one diagram algebra."""

    n: int
    c: Fraction

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("strand count must be nonnegative")
        object.__setattr__(self, "c", Fraction(self.c))


def algebra_mul(
    left: BrauerElement, right: BrauerElement, config: BrauerAlgebraConfig
) -> BrauerElement:
    """Bilinear product: glue term by term, weighting circles by ``c``."""
    if left.n != config.n or right.n != config.n:
        raise ValueError("elements do not live in the configured algebra")
    accumulated: list[tuple[BrauerDiagram, Fraction]] = []
    for left_diagram, left_coefficient in left.terms:
        for right_diagram, right_coefficient in right.terms:
            diagram, circles = diagram_mul(left_diagram, right_diagram)
            accumulated.append(
                (diagram, left_coefficient * right_coefficient * config.c**circles)
            )
    return BrauerElement.from_terms(config.n, accumulated)


def beta_matrix(
    base: int, diagram: BrauerDiagram, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> np.ndarray:
    """0-1 matrix of a diagram over digit strings.

    Rows are indexed by the lexicographic index of the source digits,
    columns by that of the target digits; an entry is 1 when the combined
    digit string agrees across every matched pair of positions.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    n = diagram.n
    size = base**n
    if size * size > limit:
        raise EnumerationLimitError(
            f"a {size} x {size} matrix exceeds the limit of {limit} entries"
        )
    matrix = np.zeros((size, size), dtype=np.int64)
    for row, row_digits in enumerate(product(range(base), repeat=n)):
        for col, col_digits in enumerate(product(range(base), repeat=n)):
            combined = row_digits + col_digits
            if all(combined[i] == combined[j] for i, j in diagram.arrow.blocks):
                matrix[row, col] = 1
    return matrix


def beta_as_relation(matrix) -> RelArrow:
    """Read a 0-1 matrix back as a relation; rejects other entries."""
    array = np.asarray(matrix)
    if array.ndim != 2:
        raise ValueError("expected a two-dimensional matrix")
    if array.size and not np.isin(array, (0, 1)).all():
        raise ValueError("matrix entries must all be 0 or 1")
    pairs = frozenset(
        (int(row), int(col)) for row, col in zip(*np.nonzero(array))
    )
    return RelArrow(int(array.shape[0]), int(array.shape[1]), pairs)


def boolean_product(left, right) -> np.ndarray:
    """Saturating matrix product of 0-1 matrices: 1 + 1 = 1."""
    return np.minimum(np.asarray(left) @ np.asarray(right), 1)


def matrix_to_dict(matrix) -> dict:
    array = np.asarray(matrix)
    return {
        "rows": int(array.shape[0]),
        "cols": int(array.shape[1]),
        "entries": array.astype(int).tolist(),
    }


def matrix_from_dict(data: dict) -> np.ndarray:
    if not isinstance(data, dict):
        raise ValueError("matrix payload must be a JSON object")
    try:
        rows = data["rows"]
        cols = data["cols"]
        entries = data["entries"]
    except KeyError as missing:
        raise ValueError(f"matrix payload lacks field {missing}") from None
    array = np.array(entries, dtype=np.int64)
    if array.shape != (rows, cols):
        raise ValueError("matrix entries disagree with the declared shape")
    return array
