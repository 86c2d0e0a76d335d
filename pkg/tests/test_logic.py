"""Typing, generality, and proof identity across the four fragments."""

from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gencat.arrows import compose, identity, make_arrow, transpose
from gencat.logic import (
    TypeCheckError, TypeMismatchError, generality, infer_fragment, pair_arrows,
    proof_equal, type_of,
)
from gencat.syntax import (
    Bot, Comp, Conj, Copair, Disj, Equation, Fragment, FromBot, Id, Inj1,
    Inj2, Meet, Pair, Proj1, Proj2, PropVar, Refl, Sym, ToTop, Top, Trans,
    dual_term, occurrences,
)
from generators import random_term

P = PropVar("p")
Q = PropVar("q")


# ---------------------------------------------------------------- occurrences

def test_occurrences():
    assert occurrences(P) == 1
    assert occurrences(Top()) == 0
    assert occurrences(Bot()) == 0
    assert occurrences(Equation("x", "y")) == 2
    assert occurrences(Conj(P, Disj(Q, Top()))) == 2
    assert occurrences(Conj(Equation("x", "y"), Equation("y", "z"))) == 4


# --------------------------------------------------------------------- typing

def test_type_of_pair_of_projections():
    term = Pair(Proj1(P, P), Proj2(P, P))
    assert type_of(term, Fragment.CONJUNCTIVE) == (Conj(P, P), Conj(P, P))


def test_type_of_transitivity_instance():
    source, target = type_of(Trans("x", "y", "y"), Fragment.EQUALITY)
    assert source == Conj(Equation("x", "y"), Equation("y", "y"))
    assert target == Equation("x", "y")


def test_type_of_rejects_bad_composition():
    with pytest.raises(TypeCheckError):
        type_of(Comp(Proj1(P, Q), Id(P)), Fragment.CONJUNCTIVE)


def test_fragment_gating():
    with pytest.raises(TypeCheckError):
        type_of(Inj1(P, Q), Fragment.CONJUNCTIVE)
    with pytest.raises(TypeCheckError):
        type_of(Id(Top()), Fragment.CONJ_DISJ)
    with pytest.raises(TypeCheckError):
        type_of(Id(P), Fragment.EQUALITY)
    with pytest.raises(TypeCheckError):
        type_of(Refl("x"), Fragment.CONJUNCTIVE)
    # well-formed in the right fragment
    assert type_of(Inj1(P, Q), Fragment.DISJUNCTIVE) == (P, Disj(P, Q))


def test_infer_fragment():
    assert infer_fragment(Id(P)) is Fragment.CONJUNCTIVE
    assert infer_fragment(Copair(Id(P), Id(P))) is Fragment.DISJUNCTIVE
    assert infer_fragment(Refl("x")) is Fragment.EQUALITY
    mixed = Comp(Proj1(P, Q), Meet(Id(P), Copair(Id(Q), Id(Q))))
    assert infer_fragment(mixed) is Fragment.CONJ_DISJ
    with pytest.raises(TypeCheckError):
        infer_fragment(Meet(Id(P), Id(Top())), Copair(Id(P), Id(P)))


# ----------------------------------------------------------------- generality

def test_generality_of_projections():
    assert generality(Proj1(P, P)) == make_arrow(2, 1, [{0, 2}])
    assert generality(Proj2(P, P)) == make_arrow(2, 1, [{1, 2}])


def test_generality_of_pairing():
    # closure of {{0,2},{1}} with the shifted {{0},{1,3}} is the identity
    term = Pair(Proj1(P, P), Proj2(P, P))
    assert generality(term) == identity(2)


def test_generality_of_terminal_and_initial():
    assert generality(ToTop(Conj(P, Q))) == make_arrow(2, 0)
    assert generality(FromBot(Disj(P, Q))) == make_arrow(0, 2)


def test_generality_of_equality_axioms():
    assert generality(Refl("x")) == make_arrow(0, 2, [{0, 1}])
    assert generality(Sym("x", "y")) == make_arrow(2, 2, [{0, 3}, {1, 2}])
    assert generality(Trans("x", "y", "z")) == make_arrow(
        4, 2, [{0, 4}, {1, 2}, {3, 5}]
    )


def test_generality_of_case_split_collapses():
    # both branches identity on p: all three occurrences fall together
    term = Copair(Id(P), Id(P))
    assert generality(term) == make_arrow(2, 1, [{0, 1, 2}])


def test_pair_arrows_requires_shared_source():
    with pytest.raises(ValueError):
        pair_arrows(make_arrow(1, 1), make_arrow(2, 1))


# -------------------------------------------------------------- proof identity

def test_pairing_of_projections_is_identity_proof():
    assert proof_equal(Pair(Proj1(P, P), Proj2(P, P)), Id(Conj(P, P)))


def test_projections_differ():
    assert not proof_equal(Proj1(P, P), Proj2(P, P))


def test_equality_fragment_equations():
    x_eq_y = Equation("x", "y")
    assert proof_equal(
        Comp(Trans("x", "y", "y"), Meet(Id(x_eq_y), Refl("y"))),
        Proj1(x_eq_y, Top()),
    )
    assert proof_equal(
        Comp(Trans("x", "x", "y"), Meet(Refl("x"), Id(x_eq_y))),
        Proj2(Top(), x_eq_y),
    )
    assert proof_equal(Comp(Sym("y", "x"), Sym("x", "y")), Id(x_eq_y))
    assert proof_equal(Comp(Sym("x", "x"), Refl("x")), Refl("x"))


def test_mixed_fragment_counterexample():
    left = Comp(Proj1(P, Q), Meet(Id(P), Copair(Id(Q), Id(Q))))
    right = Proj1(P, Disj(Q, Q))
    assert not proof_equal(left, right)
    assert generality(left) == make_arrow(3, 1, [{0, 3}, {1, 2}])
    assert generality(right) == make_arrow(3, 1, [{0, 3}])


def test_type_mismatch_is_distinct_outcome():
    with pytest.raises(TypeMismatchError):
        proof_equal(Id(P), Id(Q))


# ------------------------------------------------------------------ properties

FRAGMENTS = tuple(Fragment)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from(FRAGMENTS))
def test_generality_boundaries_are_occurrence_counts(seed, fragment):
    term = random_term(Random(seed), fragment, 4)
    source, target = type_of(term, fragment)
    arrow = generality(term, fragment)
    assert arrow.source == occurrences(source)
    assert arrow.target == occurrences(target)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from(FRAGMENTS))
def test_generality_respects_composition(seed, fragment):
    rng = Random(seed)
    inner = random_term(rng, fragment, 3)
    _, middle = type_of(inner, fragment)
    from generators import random_term_from

    outer = random_term_from(rng, fragment, middle, 3)
    composite = generality(Comp(outer, inner), fragment)
    assert composite == compose(generality(outer, fragment),
                                generality(inner, fragment)).arrow


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_duality_mirrors_transposition(seed):
    term = random_term(Random(seed), Fragment.CONJUNCTIVE, 4)
    mirrored = dual_term(term)
    type_of(mirrored, Fragment.DISJUNCTIVE)
    assert generality(mirrored, Fragment.DISJUNCTIVE) == transpose(
        generality(term, Fragment.CONJUNCTIVE)
    )
    assert dual_term(mirrored) == term
