"""
Diagram algebras and their matrix picture
=========================================

An (n, n)-diagram is a square arrow whose blocks all have two elements: a
perfect matching on 2n points.  There are (2n - 1)!! of them.  Multiplying
two diagrams composes them and counts the circles that close up; weighting
each circle by a loop parameter c turns rational combinations of diagrams
into an algebra.  Replacing each diagram by a 0-1 matrix over a base p
turns that product into ordinary matrix multiplication, with every circle
contributing a factor p.
"""

from fractions import Fraction

from gencat import (
    BrauerAlgebraConfig, BrauerDiagram, BrauerElement, algebra_mul,
    all_diagrams, beta_as_relation, beta_matrix, boolean_product,
    diagram_mul, fp_arrow, identity_diagram,
)

for n in range(4):
    print(f"diagrams on {n} strands:", len(list(all_diagrams(n))))

# Two diagrams on 2 strands: the cup-cap e and the crossing s.
e = BrauerDiagram.from_blocks(2, [(0, 1), (2, 3)])
s = BrauerDiagram.from_blocks(2, [(0, 3), (1, 2)])

print("\ne * e:", diagram_mul(e, e))   # e again, one circle closes
print("s * s:", diagram_mul(s, s))     # the identity, no circles

# In the algebra with loop parameter c the circle becomes a scalar:
# e * e = c e, the defining Temperley-Lieb relation.
config = BrauerAlgebraConfig(2, Fraction(2))
element = BrauerElement.from_diagram(e)
print("\nwith c = 2, e * e =", algebra_mul(element, element, config).terms)

# Rational coefficients stay exact.
half_e = Fraction(1, 2) * element
print("(1/2)e * (1/2)e =", algebra_mul(half_e, half_e, config).terms)

# The matrix of a diagram at base p: rows and columns list the digit
# functions lexicographically, with a 1 wherever all blocks agree.
print("\nbeta_2(e) =")
print(beta_matrix(2, e))
print("beta_2(s) =")
print(beta_matrix(2, s))

# Multiplying matrices matches multiplying diagrams, with p^circles as
# the price of each closed loop: beta(e) beta(e) = 2 beta(e) at p = 2.
print("\nbeta_2(e) @ beta_2(e) =")
print(beta_matrix(2, e) @ beta_matrix(2, e))

product, circles = diagram_mul(e, s)
print("\ne * s closes", circles, "circles; matrices agree:",
      (beta_matrix(2, e) @ beta_matrix(2, s)
       == 2**circles * beta_matrix(2, product)).all())

# The nonzero entries of beta recover the relation picture, and capping
# matrix entries at 1 tracks composition of relations.
print("\nbeta entries = relation picture:",
      beta_as_relation(beta_matrix(2, e)) == fp_arrow(2, e.arrow))
print("boolean product matches composite relation:",
      (boolean_product(beta_matrix(2, e), beta_matrix(2, s))
       == fp_arrow(2, product.arrow).to_matrix()).all())

assert diagram_mul(identity_diagram(2), e) == (e, 0)
