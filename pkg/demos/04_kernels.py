"""Kernels straight from cofactor data, checked against elimination."""

import random
from pathlib import Path

from compoundmat import kernel, nullspace_oracle, span_equal
from compoundmat.golden import EXAMPLE_A
from compoundmat.matrix_io import read_matrix
from compoundmat.sampling import random_rank_matrix

here = Path(__file__).parent
a, _ = read_matrix(here / "data" / "rank3_5x5.json")

for m in (a, EXAMPLE_A, random_rank_matrix(random.Random(3), 4, 2)):
    res = kernel(m)
    print(f"corank {res.corank} via {res.source_label}")
    for v in res.basis:
        print("   ", [str(x) for x in v.col(1)])
    print("    same span as elimination:", span_equal(list(res.basis), nullspace_oracle(m)))
