"""Typing and the generality of derivations.

Every well-typed term denotes a partition arrow between the variable
occurrences of its source and target formulas: its generality.  Two terms
of the same type are identified exactly when their generalities coincide,
which is what :func:`proof_equal` decides.

The clauses are compositional.  Identities map to identity arrows, the
projections link each source occurrence of the kept conjunct to its copy
in the target, the terminal arrow links nothing, pairing takes the closure
of the two component arrows over a shared source, and composition is
arrow composition with circles discarded.  The disjunctive constructors
are transposes of their conjunctive mirrors.  The equality axioms
contribute fixed small arrows between occurrence counts of equations.
"""

from __future__ import annotations

from .arrows import GenArrow, compose, identity, make_arrow, transpose
from .parsing import format_formula, format_term
from .partitions import UnionFind
from .syntax import (
    ArrowTerm, Bot, Comp, Conj, Copair, Disj, Equation, Formula, Fragment,
    FromBot, Id, Inj1, Inj2, Join, Meet, Pair, Proj1, Proj2, PropVar, Refl,
    Sym, ToTop, Top, Trans, occurrences,
)

__all__ = [
    "TypeCheckError",
    "TypeMismatchError",
    "infer_fragment",
    "type_of",
    "generality",
    "proof_equal",
    "proj1_arrow",
    "proj2_arrow",
    "pair_arrows",
    "copair_arrows",
    "meet_arrows",
    "join_arrows",
]


class TypeCheckError(ValueError):
    """A term is ill-typed or uses material outside the active fragment."""

    def __init__(self, message: str, term: ArrowTerm | None = None):
        super().__init__(message)
        self.term = term


class TypeMismatchError(TypeCheckError):
    """Both terms type-check, but at different types."""


_FORMULA_KINDS: dict[Fragment, tuple[type, ...]] = {
    Fragment.CONJUNCTIVE: (PropVar, Top, Conj),
    Fragment.DISJUNCTIVE: (PropVar, Bot, Disj),
    Fragment.CONJ_DISJ: (PropVar, Conj, Disj),
    Fragment.EQUALITY: (Equation, Top, Conj),
}

_TERM_KINDS: dict[Fragment, tuple[type, ...]] = {
    Fragment.CONJUNCTIVE: (Id, Proj1, Proj2, ToTop, Pair, Comp, Meet),
    Fragment.DISJUNCTIVE: (Id, Inj1, Inj2, FromBot, Copair, Comp, Join),
    Fragment.CONJ_DISJ: (Id, Proj1, Proj2, Pair, Inj1, Inj2, Copair, Comp, Meet, Join),
    Fragment.EQUALITY: (Id, Proj1, Proj2, ToTop, Pair, Comp, Meet, Refl, Sym, Trans),
}


def _check_formula(formula: Formula, fragment: Fragment, context: ArrowTerm) -> None:
    allowed = _FORMULA_KINDS[fragment]
    if not isinstance(formula, allowed):
        raise TypeCheckError(
            f"formula {format_formula(formula)} is outside the {fragment.value} "
            f"fragment (in {format_term(context)})",
            context,
        )
    if isinstance(formula, (Conj, Disj)):
        _check_formula(formula.left, fragment, context)
        _check_formula(formula.right, fragment, context)


def _type_of(term: ArrowTerm, fragment: Fragment) -> tuple[Formula, Formula]:
    if not isinstance(term, _TERM_KINDS[fragment]):
        raise TypeCheckError(
            f"{format_term(term)} is not part of the {fragment.value} fragment", term
        )
    match term:
        case Id(formula):
            _check_formula(formula, fragment, term)
            return formula, formula
        case Proj1(left, right):
            _check_formula(left, fragment, term)
            _check_formula(right, fragment, term)
            return Conj(left, right), left
        case Proj2(left, right):
            _check_formula(left, fragment, term)
            _check_formula(right, fragment, term)
            return Conj(left, right), right
        case ToTop(formula):
            _check_formula(formula, fragment, term)
            return formula, Top()
        case Pair(left, right):
            source_l, target_l = _type_of(left, fragment)
            source_r, target_r = _type_of(right, fragment)
            if source_l != source_r:
                raise TypeCheckError(
                    f"pair components disagree on their source: "
                    f"{format_formula(source_l)} vs {format_formula(source_r)} "
                    f"(in {format_term(term)})",
                    term,
                )
            return source_l, Conj(target_l, target_r)
        case Comp(after, before):
            source_b, target_b = _type_of(before, fragment)
            source_a, target_a = _type_of(after, fragment)
            if target_b != source_a:
                raise TypeCheckError(
                    f"type mismatch in composition: target "
                    f"{format_formula(target_b)} of {format_term(before)} is not "
                    f"source {format_formula(source_a)} of {format_term(after)}",
                    term,
                )
            return source_b, target_a
        case Inj1(left, right):
            _check_formula(left, fragment, term)
            _check_formula(right, fragment, term)
            return left, Disj(left, right)
        case Inj2(left, right):
            _check_formula(left, fragment, term)
            _check_formula(right, fragment, term)
            return right, Disj(left, right)
        case FromBot(formula):
            _check_formula(formula, fragment, term)
            return Bot(), formula
        case Copair(left, right):
            source_l, target_l = _type_of(left, fragment)
            source_r, target_r = _type_of(right, fragment)
            if target_l != target_r:
                raise TypeCheckError(
                    f"case-split components disagree on their target: "
                    f"{format_formula(target_l)} vs {format_formula(target_r)} "
                    f"(in {format_term(term)})",
                    term,
                )
            return Disj(source_l, source_r), target_l
        case Refl(var):
            return Top(), Equation(var, var)
        case Sym(left, right):
            return Equation(left, right), Equation(right, left)
        case Trans(left, middle, right):
            return (
                Conj(Equation(left, middle), Equation(middle, right)),
                Equation(left, right),
            )
        case Meet(left, right):
            source_l, target_l = _type_of(left, fragment)
            source_r, target_r = _type_of(right, fragment)
            return Conj(source_l, source_r), Conj(target_l, target_r)
        case Join(left, right):
            source_l, target_l = _type_of(left, fragment)
            source_r, target_r = _type_of(right, fragment)
            return Disj(source_l, source_r), Disj(target_l, target_r)
    raise TypeCheckError(f"not a term: {term!r}", term)


_FRAGMENT_SEARCH_ORDER = (
    Fragment.CONJUNCTIVE,
    Fragment.DISJUNCTIVE,
    Fragment.EQUALITY,
    Fragment.CONJ_DISJ,
)


def infer_fragment(*terms: ArrowTerm) -> Fragment:
    """First fragment setting that admits every given term."""
    for fragment in _FRAGMENT_SEARCH_ORDER:
        try:
            for term in terms:
                _type_of(term, fragment)
        except TypeCheckError:
            continue
        return fragment
    shown = ", ".join(format_term(term) for term in terms)
    raise TypeCheckError(f"no fragment admits {shown}")


def type_of(term: ArrowTerm, fragment: Fragment | None = None) -> tuple[Formula, Formula]:
    """Source and target formulas of a term; raises on ill-typed input.

    With ``fragment=None`` the first admitting fragment is used.
    """
    if fragment is None:
        fragment = infer_fragment(term)
    return _type_of(term, fragment)


# ------------------------------------------------- arrows under the clauses

def proj1_arrow(left_occurrences: int, right_occurrences: int) -> GenArrow:
    """Generality of a first projection: keep the left block of occurrences."""
    total = left_occurrences + right_occurrences
    return make_arrow(
        total, left_occurrences, [(i, total + i) for i in range(left_occurrences)]
    )


def proj2_arrow(left_occurrences: int, right_occurrences: int) -> GenArrow:
    """Generality of a second projection: keep the right block of occurrences."""
    total = left_occurrences + right_occurrences
    return make_arrow(
        total,
        right_occurrences,
        [(left_occurrences + i, total + i) for i in range(right_occurrences)],
    )


def pair_arrows(left: GenArrow, right: GenArrow) -> GenArrow:
    """Combine two arrows out of a common source into one with joined target.

    The right arrow's target positions are shifted past the left target
    before the union of the two partitions is closed transitively.
    """
    if left.source != right.source:
        raise ValueError("paired arrows must share their source boundary")
    shared, left_target = left.source, left.target
    forest = UnionFind(shared + left_target + right.target)
    for block in left.blocks:
        for position in block[1:]:
            forest.union(block[0], position)

    def shift(position: int) -> int:
        return position if position < shared else position + left_target

    for block in right.blocks:
        for position in block[1:]:
            forest.union(shift(block[0]), shift(position))
    return GenArrow(shared, left_target + right.target, forest.blocks())


def copair_arrows(left: GenArrow, right: GenArrow) -> GenArrow:
    """Dual of :func:`pair_arrows`: combine arrows into a common target."""
    return transpose(pair_arrows(transpose(left), transpose(right)))


def meet_arrows(left: GenArrow, right: GenArrow) -> GenArrow:
    """Side-by-side conjunction: pairing of the components after projections."""
    first = compose(left, proj1_arrow(left.source, right.source)).arrow
    second = compose(right, proj2_arrow(left.source, right.source)).arrow
    return pair_arrows(first, second)


def join_arrows(left: GenArrow, right: GenArrow) -> GenArrow:
    """Side-by-side disjunction: case split of injections after the components."""
    first = compose(transpose(proj1_arrow(left.target, right.target)), left).arrow
    second = compose(transpose(proj2_arrow(left.target, right.target)), right).arrow
    return copair_arrows(first, second)


def _axiom_arrow(source: int, target: int, links: tuple[tuple[int, int], ...]) -> GenArrow:
    # Reflexive-symmetric-transitive closure of the linked pairs; the given
    # links are disjoint, so only singleton completion actually happens.
    forest = UnionFind(source + target)
    for a, b in links:
        forest.union(a, b)
    return GenArrow(source, target, forest.blocks())


def _generality(term: ArrowTerm) -> GenArrow:
    match term:
        case Id(formula):
            return identity(occurrences(formula))
        case Proj1(left, right):
            return proj1_arrow(occurrences(left), occurrences(right))
        case Proj2(left, right):
            return proj2_arrow(occurrences(left), occurrences(right))
        case ToTop(formula):
            return make_arrow(occurrences(formula), 0)
        case Pair(left, right):
            return pair_arrows(_generality(left), _generality(right))
        case Comp(after, before):
            return compose(_generality(after), _generality(before)).arrow
        case Inj1(left, right):
            return transpose(proj1_arrow(occurrences(left), occurrences(right)))
        case Inj2(left, right):
            return transpose(proj2_arrow(occurrences(left), occurrences(right)))
        case FromBot(formula):
            return make_arrow(0, occurrences(formula))
        case Copair(left, right):
            return copair_arrows(_generality(left), _generality(right))
        case Refl(_):
            return _axiom_arrow(0, 2, ((0, 1),))
        case Sym(_, _):
            return _axiom_arrow(2, 2, ((0, 3), (1, 2)))
        case Trans(_, _, _):
            return _axiom_arrow(4, 2, ((0, 4), (1, 2), (3, 5)))
        case Meet(left, right):
            return meet_arrows(_generality(left), _generality(right))
        case Join(left, right):
            return join_arrows(_generality(left), _generality(right))
    raise TypeCheckError(f"not a term: {term!r}", term)


def generality(term: ArrowTerm, fragment: Fragment | None = None) -> GenArrow:
    """The partition arrow a term denotes between its occurrence counts.

    The term is type-checked first; its generality runs from the occurrence
    count of its source formula to that of its target formula.
    """
    type_of(term, fragment)
    return _generality(term)


def proof_equal(
    left: ArrowTerm, right: ArrowTerm, fragment: Fragment | None = None
) -> bool:
    """Decide whether two terms of the same type denote the same arrow.

    Raises :class:`TypeMismatchError` when both terms type-check but at
    different types, so that the outcome is never confused with a plain
    inequality of generalities.
    """
    if fragment is None:
        fragment = infer_fragment(left, right)
    left_type = _type_of(left, fragment)
    right_type = _type_of(right, fragment)
    if left_type != right_type:
        raise TypeMismatchError(
            "terms have different types: "
            f"{format_formula(left_type[0])} -> {format_formula(left_type[1])} vs "
            f"{format_formula(right_type[0])} -> {format_formula(right_type[1])}"
        )
    return _generality(left) == _generality(right)
