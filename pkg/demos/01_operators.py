"""
Simplicial operators and their normal form
==========================================

Faces delete a vertex, degeneracies repeat one.  Any word in them reduces to a
unique normal form, so operator equality is decidable.
"""

from szczarba.simplicial_ops import apply, compose, normalize, parse_operator, parse_word, shift

# A word is read right to left.  This one comes out of the inductive
# construction for the k = 1 component of Sz on the sequence (2, 1).
word = parse_word("d_2^2 s_1^2 d_1 s_0")
op = normalize(word, 2)
print("normal form of", " ".join(map(str, word)), "->", op.to_dict())
print("identity?", op.is_identity())

# Operators act on vertex lists of simplices.
print("s_0 d_1 on [0,1,2]:", apply(parse_operator("s_0 d_1", 2), (0, 1, 2)))
print("s_0^2 on [0]:", apply(parse_operator("s_0^2", 0), (0,)))

# The normal form sorts degeneracies decreasingly (s_1 s_0); printing uses
# the hand-calculation presentation (s_0^2).
sq = parse_operator("s_0^2", 0)
print("stored:", sq.degeneracies, " printed:", sq.pretty("g_3"))

# Shifting adds one to every index: the result ignores the first vertex.
base = parse_operator("d_1 d_0", 2)
print("shift(d_1 d_0) =", shift(base, 1).pretty())

# Composition is concatenation followed by normalization.
print("d_0 after s_0:", compose(parse_operator("d_0", 1), parse_operator("s_0", 0)).to_dict())
