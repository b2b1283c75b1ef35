"""Nullspace extraction from cofactor data.

Corank 1: every column of the adjugate lies in the kernel and at least one
is nonzero.  Corank 2 in order 4: for any row pair ``(i1, i2)`` the matrix
:func:`cofactor_matrix_order2` built from the ``2 x 2`` minors on those rows
is annihilated by ``a``; a pair with a nonzero minor gives two independent
kernel vectors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .compounds import MinorEvaluator
from .errors import CorankMismatchError, DimensionError
from .exact_core import RMatrix, nullspace_oracle, rank
from .laplace import adjugate


class KernelSource(enum.Enum):
    ADJUGATE = "Adjugate"
    ORDER2_COFACTORS = "Order2Cofactors"
    ELIMINATION_FALLBACK = "EliminationFallback"


@dataclass(frozen=True)
class KernelResult:
    corank: int
    basis: tuple[RMatrix, ...]
    source: KernelSource
    pair: tuple[int, int] | None = None

    @property
    def source_label(self) -> str:
        if self.source is KernelSource.ORDER2_COFACTORS and self.pair:
            return f"{self.source.value}({self.pair[0]},{self.pair[1]})"
        return self.source.value


def _require_annihilated(a: RMatrix, vectors) -> None:
    for v in vectors:
        if not (a @ v).is_zero():
            raise AssertionError(f"extracted vector {v.col(1)} is not in the kernel")


def kernel_corank1(a: RMatrix) -> KernelResult:
    """Kernel of a rank ``n - 1`` matrix from the first nonzero adjugate column."""
    if not a.is_square:
        raise DimensionError(f"expected a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    r = rank(a)
    if r != n - 1:
        raise CorankMismatchError(f"corank-1 extraction needs rank {n - 1}, got {r}")
    if n == 1:
        basis = (RMatrix.column([1]),)
    else:
        adj = adjugate(a)
        col = next(c for c in adj.columns() if not c.is_zero())
        basis = (col,)
    _require_annihilated(a, basis)
    return KernelResult(1, basis, KernelSource.ADJUGATE)


def cofactor_matrix_order2(a: RMatrix, i1: int, i2: int) -> RMatrix:
    """The 4x4 matrix of signed ``2 x 2`` minors on rows ``i1 < i2``.

    With ``M^{jk}`` the minor on rows ``(i1, i2)`` and columns ``(j, k)``::

        [[ M23,  M24,  M34,    0],
         [-M13, -M14,    0,  M34],
         [ M12,    0, -M14, -M24],
         [   0,  M12,  M13,  M23]]
    """
    if a.shape != (4, 4):
        raise DimensionError(f"order-2 cofactor matrix is defined for 4x4 input, got {a.rows}x{a.cols}")
    if not 1 <= i1 < i2 <= 4:
        raise DimensionError(f"row pair ({i1}, {i2}) invalid")
    ev = MinorEvaluator(a)
    m = {cols: ev((i1, i2), cols) for cols in combinations(range(1, 5), 2)}
    return RMatrix.from_rows(
        [
            [m[2, 3], m[2, 4], m[3, 4], 0],
            [-m[1, 3], -m[1, 4], 0, m[3, 4]],
            [m[1, 2], 0, -m[1, 4], -m[2, 4]],
            [0, m[1, 2], m[1, 3], m[2, 3]],
        ]
    )


# For each column pair (j, k), the two template columns in which M^{jk} appears.
_COLUMNS_HOLDING = {
    (1, 2): (1, 2),
    (1, 3): (1, 3),
    (1, 4): (2, 3),
    (2, 3): (1, 4),
    (2, 4): (2, 4),
    (3, 4): (3, 4),
}


def kernel_corank2_4x4(a: RMatrix) -> KernelResult:
    """Kernel of a rank-2 4x4 matrix from its order-2 cofactor matrix.

    Uses the first row pair (lex order) carrying a nonzero ``2 x 2`` minor and
    the two template columns holding the first nonzero minor of that pair.
    """
    if a.shape != (4, 4):
        raise DimensionError(f"expected a 4x4 matrix, got {a.rows}x{a.cols}")
    r = rank(a)
    if r != 2:
        raise CorankMismatchError(f"corank-2 extraction needs rank 2, got {r}")
    ev = MinorEvaluator(a)
    for pair in combinations(range(1, 5), 2):
        nonzero = [cols for cols in combinations(range(1, 5), 2) if ev(pair, cols) != 0]
        if nonzero:
            break
    else:  # pragma: no cover - rank 2 guarantees a nonzero 2x2 minor
        raise AssertionError("rank-2 matrix without a nonzero 2x2 minor")
    k = cofactor_matrix_order2(a, *pair)
    j1, j2 = _COLUMNS_HOLDING[nonzero[0]]
    basis = (RMatrix.column(k.col(j1)), RMatrix.column(k.col(j2)))
    if rank(RMatrix.hstack(list(basis))) != 2:
        fallback = tuple(nullspace_oracle(a))
        return KernelResult(2, fallback, KernelSource.ELIMINATION_FALLBACK)
    _require_annihilated(a, basis)
    return KernelResult(2, basis, KernelSource.ORDER2_COFACTORS, pair)


def kernel(a: RMatrix) -> KernelResult:
    """Kernel by the cheapest cofactor route that applies, else elimination."""
    if not a.is_square:
        raise DimensionError(f"expected a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    corank = n - rank(a)
    if corank == 1:
        return kernel_corank1(a)
    if corank == 2 and n == 4:
        return kernel_corank2_4x4(a)
    return KernelResult(corank, tuple(nullspace_oracle(a)), KernelSource.ELIMINATION_FALLBACK)
