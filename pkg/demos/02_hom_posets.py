"""
Hom posets on both sides
========================

Morphisms p -> q of the rigidification side are subsets containing p and q,
ordered by reverse inclusion.  On the loop-group side they are tuples of
positions in the chains <g_k>^{n-k}.
"""

from szczarba.categories import HomPoset, category_dot, compose_c, compose_g, enumerate_nerve
from szczarba.categories import SubsetMorphism, GHomElement

# The two pictures of Delta^2, as Graphviz source.
print(category_dot("c", 2))
print(category_dot("g", 2))

# Sizes: 2^(q-p-1) on one side, prod(n-k+1) on the other.
for kind in "cg":
    poset = HomPoset(kind, 3, 0, 3)
    print(poset.label(), "has", poset.size(), "elements")

# The nerve of C(Delta^3)(0,3): five nondegenerate edges, two triangles.
c = HomPoset("c", 3, 0, 3)
for ell in (1, 2):
    chains = enumerate_nerve(c, ell, nondegenerate_only=True)
    print(f"{ell}-simplices:", [" <= ".join(map(str, ch)) for ch in chains])

# Composition is union on one side and concatenation on the other.
print(compose_c(SubsetMorphism.from_members(5, (0, 2)), SubsetMorphism.from_members(5, (2, 4))))
print(compose_g(GHomElement(5, 0, 2, (0, 1)), GHomElement(5, 2, 4, (0, 1))))
