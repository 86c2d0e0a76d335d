"""
Partition arrows and their composition
======================================

An arrow n -> m is a partition of the n + m positions 0..n+m-1, where the
first n positions form the source row and the rest form the target row.
Composing two arrows glues them along the shared middle row, closes the
union transitively, and keeps only the outer positions.  Blocks that live
entirely in the middle row disappear; they are returned as a circle count.
"""

from gencat import compose, identity, make_arrow, render_arrow, transpose

# A 3 -> 9 arrow followed by a 9 -> 1 arrow.  Position k < n is source
# occurrence k; position n + j is target occurrence j.
r1 = make_arrow(3, 9, [{0, 3}, {4, 5}, {1, 6}, {7, 8}, {2, 9}, {10, 11}])
r2 = make_arrow(9, 1, [{0, 1}, {2, 9}, {3, 4}, {5, 6}, {7, 8}])

print("r1 =", r1)
print("r2 =", r2)

result = compose(r2, r1)
print("\nr2 * r1 =", result.arrow)
print("circles dropped:", result.circles)

# The sketch lists the source row, the target row, then one line per block.
print("\nsketch of the composite:")
print(render_arrow(result.arrow))

# Identities compose away on either side.
assert compose(result.arrow, identity(3)).arrow == result.arrow
assert compose(identity(1), result.arrow).arrow == result.arrow

# Transposition swaps the two rows and reverses composition order.
flipped = transpose(result.arrow)
print("\ntranspose:", flipped)
assert transpose(flipped) == result.arrow
assert flipped == compose(transpose(r1), transpose(r2)).arrow

# Composition is associative, so chains like this are unambiguous.
r3 = make_arrow(1, 2, [{0, 1}])
left = compose(r3, compose(r2, r1).arrow).arrow
right = compose(compose(r3, r2).arrow, r1).arrow
print("\nassociativity on a chain 3 -> 9 -> 1 -> 2:", left == right)
