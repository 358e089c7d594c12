"""
The Szczarba map on C(Delta^3)(0,3)
===================================

Both routes on the two maximal sequence simplices (2,1) and (1,2): the
operator formula built from the alpha recursion, and Hin applied entry by
entry along the chain.
"""

from szczarba.categories import SubsetMorphism, seq_to_chain
from szczarba.core import alpha_table, build_operator, hin_vertex, sz_elementwise, sz_operator_route

# Hin on a decomposable subset of Delta^5.
print("Hin({0,2,4}) =", hin_vertex(SubsetMorphism.from_members(5, (0, 2, 4))))

n, p, q = 3, 0, 3
for seq in [(2, 1), (1, 2)]:
    table = alpha_table(n, p, q, seq)
    print(f"\nsequence {seq}")
    for ell in range(len(seq) + 1):
        print(f"  alpha(prefix of length {ell}) for k=3,2,1:", table.row(ell))
    print("  omegas:", table.omegas)

    for k in range(q, p, -1):
        op = build_operator(seq, k, n, p, q)
        print(f"  E_{{{seq},{k}}} normal form: s{list(op.degeneracies)} d{list(op.faces)}")

    result = sz_operator_route(seq, n, p, q)
    print("  Sz =", result.pretty())
    print("  operator route vertices:    ", result.vertices)
    print("  element-wise route vertices:", sz_elementwise(seq_to_chain(seq, n, p, q)))
