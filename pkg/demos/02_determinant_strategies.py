"""Every determinant route gives the same exact rational."""

import random

from compoundmat import DetStrategy, determinant
from compoundmat.exact_core import counting_ops
from compoundmat.sampling import random_matrix

a = random_matrix(random.Random(6), 6)
print(a)
print()

for text in ["permutation", "bareiss", "cofactor:1", "cofactor:6", "pair-rows:1,2",
             "pair-rows:3,5", "general-rows:1,2,3", "general-rows:2,4,5,6"]:
    with counting_ops() as ops:
        d = determinant(a, DetStrategy.parse(text))
    print(f"{text:<22} {str(d):>10}   scalar ops {ops.scalar_ops:>6}   minors {ops.minor_evals}")
