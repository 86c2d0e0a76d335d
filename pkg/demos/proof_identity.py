"""
When do two derivations count as the same proof?
================================================

Each derivation term gets a generality: a partition arrow linking the
variable occurrences of its premise and conclusion that must stay equal
however the variables are diversified.  Two derivations of the same
sequent count as the same proof exactly when their generalities agree.
"""

from gencat import (
    Comp, Conj, Copair, Disj, Equation, Id, Meet, Pair, Proj1, Proj2,
    PropVar, Refl, Sym, Top, Trans, format_formula, format_term, generality,
    parse_term, proof_equal, render_arrow, type_of,
)

p = PropVar("p")
q = PropVar("q")

# Pairing the two projections out of p /\ p reconstructs the identity.
pairing = Pair(Proj1(p, p), Proj2(p, p))
premise, conclusion = type_of(pairing)
print("term:      ", format_term(pairing))
print("type:      ", format_formula(premise), "|-", format_formula(conclusion))
print("generality:", generality(pairing))
print("same proof as id? ", proof_equal(pairing, Id(Conj(p, p))))

# The two projections themselves keep different occurrences, so they are
# different proofs of the same sequent.
print("\nfirst vs second projection:",
      proof_equal(Proj1(p, p), Proj2(p, p)))
print(render_arrow(generality(Proj1(p, p))))

# Equation proofs: reflexivity, symmetry and transitivity compose the way
# the familiar equational laws say they should.
x_eq_y = Equation("x", "y")
laws = [
    (Comp(Trans("x", "y", "y"), Meet(Id(x_eq_y), Refl("y"))),
     Proj1(x_eq_y, Top())),
    (Comp(Trans("x", "x", "y"), Meet(Refl("x"), Id(x_eq_y))),
     Proj2(Top(), x_eq_y)),
    (Comp(Sym("y", "x"), Sym("x", "y")), Id(x_eq_y)),
    (Comp(Sym("x", "x"), Refl("x")), Refl("x")),
]
print("\nequation-proof laws:")
for left, right in laws:
    verdict = "EQUAL" if proof_equal(left, right) else "NOT-EQUAL"
    print(f"  {format_term(left)}  vs  {format_term(right)}:  {verdict}")

# Mixing conjunction with disjunction separates proofs that a purely
# conjunctive reading would conflate: collapsing q \/ q first forces the
# two q occurrences together.
left = Comp(Proj1(p, q), Meet(Id(p), Copair(Id(q), Id(q))))
right = Proj1(p, Disj(q, q))
print("\nmixed counterexample:")
print("  left  =", format_term(left), "  generality", generality(left))
print("  right =", format_term(right), "  generality", generality(right))
print("  same proof?", proof_equal(left, right))

# Terms round-trip through their concrete syntax.
assert parse_term(format_term(left)) == left
