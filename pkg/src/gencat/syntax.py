"""Abstract syntax for formulas and the arrow terms between them.

Four fragment settings control which connectives and term constructors are
admitted: conjunctive (and, truth), disjunctive (or, falsity), the mixed
conjunction-disjunction fragment (no constants), and the equality fragment
(equations between individual variables, with conjunction and truth).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

__all__ = [
    "PropVar", "Top", "Bot", "Conj", "Disj", "Equation", "Formula",
    "Id", "Proj1", "Proj2", "ToTop", "Pair", "Comp",
    "Inj1", "Inj2", "FromBot", "Copair",
    "Refl", "Sym", "Trans", "Meet", "Join", "ArrowTerm",
    "Fragment", "occurrences", "dual_formula", "dual_term",
]


# ---------------------------------------------------------------- formulas

@dataclass(frozen=True)
class PropVar:
    name: str


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Conj:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Disj:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Equation:
    """An equation between two individual variables, written left=right."""

    left: str
    right: str


Formula = PropVar | Top | Bot | Conj | Disj | Equation


# ------------------------------------------------------------- arrow terms

@dataclass(frozen=True)
class Id:
    formula: Formula


@dataclass(frozen=True)
class Proj1:
    """First projection out of a conjunction: left/\\right -> left."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Proj2:
    """Second projection out of a conjunction: left/\\right -> right."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class ToTop:
    """The unique arrow into truth: formula -> T."""

    formula: Formula


@dataclass(frozen=True)
class Pair:
    """Tupling of two terms sharing a source: C -> A/\\B."""

    left: "ArrowTerm"
    right: "ArrowTerm"


@dataclass(frozen=True)
class Comp:
    """Composition ``after`` of ``before``; ``before`` is applied first."""

    after: "ArrowTerm"
    before: "ArrowTerm"


@dataclass(frozen=True)
class Inj1:
    """First injection into a disjunction: left -> left\\/right."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class Inj2:
    """Second injection into a disjunction: right -> left\\/right."""

    left: Formula
    right: Formula


@dataclass(frozen=True)
class FromBot:
    """The unique arrow out of falsity: F -> formula."""

    formula: Formula


@dataclass(frozen=True)
class Copair:
    """Case split of two terms sharing a target: A\\/B -> C."""

    left: "ArrowTerm"
    right: "ArrowTerm"


@dataclass(frozen=True)
class Refl:
    """Reflexivity axiom: T -> var=var."""

    var: str


@dataclass(frozen=True)
class Sym:
    """Symmetry axiom: left=right -> right=left."""

    left: str
    right: str


@dataclass(frozen=True)
class Trans:
    """Transitivity axiom: (left=middle)/\\(middle=right) -> left=right."""

    left: str
    middle: str
    right: str


@dataclass(frozen=True)
class Meet:
    """Conjunction of terms, an abbreviation for pairing after projections."""

    left: "ArrowTerm"
    right: "ArrowTerm"


@dataclass(frozen=True)
class Join:
    """Disjunction of terms, an abbreviation for case split of injections."""

    left: "ArrowTerm"
    right: "ArrowTerm"


ArrowTerm = (
    Id | Proj1 | Proj2 | ToTop | Pair | Comp
    | Inj1 | Inj2 | FromBot | Copair
    | Refl | Sym | Trans | Meet | Join
)


class Fragment(enum.Enum):
    CONJUNCTIVE = "conj"
    DISJUNCTIVE = "disj"
    CONJ_DISJ = "conjdisj"
    EQUALITY = "equality"


def occurrences(formula: Formula) -> int:
    """Number of variable occurrences, read left to right.

    Propositional variables count one, equations count their two sides,
    the constants count nothing.
    """
    match formula:
        case PropVar():
            return 1
        case Top() | Bot():
            return 0
        case Equation():
            return 2
        case Conj(left, right) | Disj(left, right):
            return occurrences(left) + occurrences(right)
    raise TypeError(f"not a formula: {formula!r}")


def dual_formula(formula: Formula) -> Formula:
    """Swap conjunction with disjunction and truth with falsity."""
    match formula:
        case PropVar():
            return formula
        case Top():
            return Bot()
        case Bot():
            return Top()
        case Conj(left, right):
            return Disj(dual_formula(left), dual_formula(right))
        case Disj(left, right):
            return Conj(dual_formula(left), dual_formula(right))
    raise ValueError(f"formula has no dual: {formula!r}")


def dual_term(term: ArrowTerm) -> ArrowTerm:
    """The mirror term, running backwards through the dual formulas.

    Projections become injections, pairing becomes case split, and the
    order of composition reverses.  Applying this twice gives the term
    back.  Equality axioms have no dual.
    """
    match term:
        case Id(formula):
            return Id(dual_formula(formula))
        case Proj1(left, right):
            return Inj1(dual_formula(left), dual_formula(right))
        case Proj2(left, right):
            return Inj2(dual_formula(left), dual_formula(right))
        case ToTop(formula):
            return FromBot(dual_formula(formula))
        case Pair(left, right):
            return Copair(dual_term(left), dual_term(right))
        case Comp(after, before):
            return Comp(dual_term(before), dual_term(after))
        case Inj1(left, right):
            return Proj1(dual_formula(left), dual_formula(right))
        case Inj2(left, right):
            return Proj2(dual_formula(left), dual_formula(right))
        case FromBot(formula):
            return ToTop(dual_formula(formula))
        case Copair(left, right):
            return Pair(dual_term(left), dual_term(right))
        case Meet(left, right):
            return Join(dual_term(left), dual_term(right))
        case Join(left, right):
            return Meet(dual_term(left), dual_term(right))
    raise ValueError(f"term has no dual: {term!r}")
