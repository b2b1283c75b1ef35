"""The 4x4 rank-2 example: minors, compounds and the order-2 cofactor matrix."""

from compoundmat import adjugate, adjugate_compound, cofactor_matrix_order2, compound, rank
from compoundmat.golden import EXAMPLE_A as a

print("a =")
print(a)
print("rank", rank(a))  # 2, so every 3x3 minor vanishes

# the classical adjugate is built from 3x3 minors: all zero here
print("adjugate is zero:", adjugate(a).is_zero())

m2 = compound(a, 2)
print("\nm_2(a), rows and columns in lex order", [c.indices for c in m2.combos()])
print(m2.body)

mt2 = adjugate_compound(a, 2)
print("\nadjugate compound of order 2")
print(mt2.body)
print("m_2(a) @ it == 0:", (m2.body @ mt2.body).is_zero())

# rank 2 means the columns of K on rows (1, 2) span the kernel
k = cofactor_matrix_order2(a, 1, 2)
print("\nK =")
print(k)
print("a @ K == 0:", (a @ k).is_zero())
