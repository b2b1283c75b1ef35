"""Exact compound matrices, generalized Laplace expansions and cofactor kernels."""

from .compounds import (
    Combo,
    CompoundMatrix,
    adjugate_compound,
    complement,
    complementary_compound,
    compound,
    lex_rank,
    minor,
    subset_at,
)
from .errors import (
    CompoundMatError,
    CorankMismatchError,
    DegenerateInputError,
    DimensionError,
    MembershipError,
    OracleSizeError,
    ParseError,
    RankError,
    SingularError,
)
from .exact_core import (
    RMatrix,
    Rational,
    det_bareiss,
    det_permutation,
    format_rational,
    mat_mul,
    nullspace_oracle,
    parse_rational,
    rank,
    span_equal,
)
from .kernel import KernelResult, cofactor_matrix_order2, kernel, kernel_corank1, kernel_corank2_4x4
from .laplace import (
    DetStrategy,
    adjugate,
    det_cofactor,
    det_laplace_general,
    det_laplace_pair,
    determinant,
)

__version__ = "0.1.0"
