"""Solving the word problem in a right-angled Coxeter group.

A defining graph presents the group: every vertex is an order-two
generator and every edge makes its two endpoints commute.  Elements are
handled through shortlex normal forms, and an exact integer matrix
representation provides a second, independent route to deciding equality.
"""

from rcoxeter import (
    inverse,
    multiply,
    normal_form,
    parse_graph,
    parse_word,
    preset,
    tits_matrix,
    word_to_text,
)

# The infinite dihedral group: two generators, no edge, so no relation
# beyond a^2 = b^2 = 1.
dinfty = preset("dinfty")
print("generators:", dinfty.labels, "edges:", dinfty.edges)

# Words multiply by concatenation followed by normalization.
a = parse_word("a", dinfty)
ab = parse_word("ab", dinfty)
print("a * a =", repr(word_to_text(multiply(a, a, dinfty), dinfty)))
print("ab * ab =", word_to_text(multiply(ab, ab, dinfty), dinfty))
print("(ab)^-1 =", word_to_text(inverse(ab, dinfty), dinfty))

# Adding the edge collapses the group to Z/2 x Z/2: the same word abab
# now spells the identity.
square = preset("square")
print("\nwith the edge a-b, abab normalizes to:",
      repr(word_to_text(normal_form((0, 1, 0, 1), square), square)))

# Shortlex normal forms prefer small generators early.  On the pentagon
# (a 5-cycle), v1 commutes with both v0 and v2, so it can slide to the
# front of v2 v0 v1 even though it first has to pass the smaller v0.
pentagon = preset("pentagon")
word = parse_word("v2 v0 v1", pentagon)
print("\npentagon normal form of v2 v0 v1:", word_to_text(word, pentagon))

# The matrix oracle agrees: two words are equal in the group exactly when
# their reflection matrices are equal.
lhs = tits_matrix((2, 0, 1), pentagon)
rhs = tits_matrix((1, 2, 0), pentagon)
print("matrices of v2 v0 v1 and v1 v2 v0 agree:", lhs == rhs)

# Graphs can come from JSON or plain text descriptions too.
custom = parse_graph('{"vertices": ["x", "y", "z"], "edges": [["x", "z"]]}')
print("\ncustom graph:", custom)
print("zx normalizes to:", word_to_text(parse_word("zx", custom), custom))
