"""Cauchy-Binet, the compound adjugate law and the determinant of a compound."""

import math
import random

from compoundmat import RMatrix, adjugate_compound, compound, det_bareiss
from compoundmat.sampling import random_matrix

rng = random.Random(1)
n = 5
a, b = random_matrix(rng, n), random_matrix(rng, n)

for p in range(1, n + 1):
    mult = compound(a @ b, p).body == compound(a, p).body @ compound(b, p).body
    law = compound(a, p).body @ adjugate_compound(a, p).body == det_bareiss(a) * RMatrix.identity(math.comb(n, p))
    dm = det_bareiss(compound(a, p).body)
    e = math.comb(n - 1, p - 1)
    print(f"p={p}: m_p(ab) = m_p(a)m_p(b) {mult}; m_p m~_p = det I {law}; "
          f"det m_p(a) = det(a)^{e} {dm == det_bareiss(a) ** e}")

# the exponent is C(n-1, p-1), so p=3 in order 5 gives 6, not 3
print("\nC(4, 2) =", math.comb(4, 2))
