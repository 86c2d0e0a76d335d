"""
Arrows as relations between digit functions
===========================================

Fix a base p.  An arrow n -> m becomes a relation between functions
n -> p and m -> p (listed lexicographically): two functions are related
when their concatenation is constant on every block.  This assignment
preserves identities and composition and never conflates two arrows, so
the partition picture embeds into ordinary relations.
"""

from gencat import (
    PairRelation, all_arrows, check_props, compose, fequal_set, fp_arrow,
    fs_set, identity, make_arrow, rel_compose, rel_identity,
)

# The identity on 1 becomes the identity relation on 2 indices.
print("F_2(identity):", sorted(fp_arrow(2, identity(1)).pairs))

# A 2 -> 1 arrow linking source 0 with the target keeps exactly the
# function pairs that agree there.
arrow = make_arrow(2, 1, [{0, 2}])
relation = fp_arrow(2, arrow)
print("F_2(2 -> 1 arrow):", relation.sorted_pairs())
print("as a 0-1 matrix:")
print(relation.to_matrix())

# Functor laws on a sample pair.
r1 = make_arrow(2, 2, [{0, 2}, {1, 3}])
r2 = make_arrow(2, 1, [{0, 1, 2}])
lhs = fp_arrow(2, compose(r2, r1).arrow)
rhs = rel_compose(fp_arrow(2, r2), fp_arrow(2, r1))
print("\nidentity preserved:", fp_arrow(2, identity(2)) == rel_identity(4))
print("composition preserved:", lhs == rhs)

# Faithfulness: different arrows 2 -> 2 get different relations.
images = {fp_arrow(2, r) for r in all_arrows(2, 2)}
print("distinct images for all 15 arrows 2 -> 2:", len(images) == 15)

# The function sets behind the relation: constant-on-blocks functions and
# order-monotone functions.  For an equivalence they coincide.
print("\nconstant functions for the 2 -> 1 arrow:",
      sorted(f.digits for f in fequal_set(arrow, 2)))
print("monotone functions for the same arrow:  ",
      sorted(f.digits for f in fs_set(arrow, 2)))

# Three biconditionals tie relation structure to these function sets:
# transitivity to cone characteristics being monotone, symmetry to the
# two function sets agreeing, and being an equivalence to relatedness
# matching inseparability.  A non-transitive relation fails the cone
# test on both sides at once, so its report still holds.
path = PairRelation(3, frozenset(
    {(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (2, 1)}
))
print("\nnon-transitive path relation:", check_props(path))
print("an equivalence:", check_props(PairRelation.from_blocks(3, [(0, 1, 2)])))
