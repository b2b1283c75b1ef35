"""Index combinations and compound matrices.

A :class:`Combo` is a strictly increasing subset of ``1..n``.  Combos of a
fixed size are ordered lexicographically, which fixes the row and column
order of every compound matrix built here.

For an ``n x n`` matrix ``a`` and ``1 <= p <= n``:

* ``compound(a, p)`` -- all ``p x p`` minors ``M_R^S``;
* ``complementary_compound(a, p)`` -- entry ``(R, S)`` is ``M_{R'}^{S'}``,
  the minor on the complementary rows and columns;
* ``adjugate_compound(a, p)`` -- entry ``(S, R)`` is
  ``eps(R) * eps(S) * M_{R'}^{S'}`` with ``eps(X) = (-1)**sum(X)``.

The last one satisfies ``compound(a, p) @ adjugate_compound(a, p) == det(a) * I``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DimensionError, RankError
from .exact_core import RMatrix, integer_det, integer_rows, tally_minor


@dataclass(frozen=True, order=True)
class Combo:
    """Strictly increasing index subset of ``1..n``.

    >>> Combo(4, (1, 3)).complement()
    Combo(n=4, indices=(2, 4))
    >>> Combo(4, (2, 3)).lex_rank()
    4
    """

    n: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", idx)
        if self.n < 0:
            raise RankError(f"ambient size must be non-negative, got {self.n}")
        if any(not 1 <= i <= self.n for i in idx):
            raise RankError(f"indices {idx} not inside 1..{self.n}")
        if any(x >= y for x, y in zip(idx, idx[1:])):
            raise RankError(f"indices {idx} are not strictly increasing")

    @property
    def p(self) -> int:
        return len(self.indices)

    @property
    def sigma(self) -> int:
        """Sum of the indices."""
        return sum(self.indices)

    @property
    def sign(self) -> int:
        return -1 if self.sigma & 1 else 1

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def complement(self) -> "Combo":
        return complement(self)

    def lex_rank(self) -> int:
        return lex_rank(self)


def n_choose(n: int, p: int) -> int:
    return math.comb(n, p)


def lex_rank(c: Combo) -> int:
    """1-based position of ``c`` among all ``c.p``-subsets of ``1..c.n``."""
    n, p = c.n, c.p
    r = 1
    prev = 0
    for k, idx in enumerate(c.indices):
        for v in range(prev + 1, idx):
            r += math.comb(n - v, p - k - 1)
        prev = idx
    return r


def subset_at(n: int, p: int, r: int) -> Combo:
    """Inverse of :func:`lex_rank`."""
    total = math.comb(n, p)
    if not 0 <= p <= n or not 1 <= r <= total:
        raise RankError(f"rank {r} outside 1..{total} for n={n}, p={p}")
    remaining = r - 1
    out = []
    v = 1
    for k in range(p):
        while True:
            block = math.comb(n - v, p - k - 1)
            if remaining < block:
                break
            remaining -= block
            v += 1
        out.append(v)
        v += 1
    return Combo(n, tuple(out))


def combos(n: int, p: int) -> list[Combo]:
    """All ``p``-subsets of ``1..n`` in lexicographic order."""
    return [Combo(n, c) for c in combinations(range(1, n + 1), p)]


def complement(c: Combo) -> Combo:
    chosen = set(c.indices)
    return Combo(c.n, tuple(i for i in range(1, c.n + 1) if i not in chosen))


def _as_indices(x: Combo | Sequence[int]) -> tuple[int, ...]:
    return x.indices if isinstance(x, Combo) else tuple(x)


# ---------------------------------------------------------------------------
# minors


class MinorEvaluator:
    """Evaluates many minors of one matrix, clearing denominators once."""

    def __init__(self, a: RMatrix) -> None:
        if not a.is_square:
            raise DimensionError(f"minors need a square matrix, got {a.rows}x{a.cols}")
        self.n = a.rows
        self._rows, self._scales = integer_rows(a)

    def __call__(self, rowset: Sequence[int], colset: Sequence[int]) -> Fraction:
        if len(rowset) != len(colset):
            raise DimensionError(
                f"row set of size {len(rowset)} vs column set of size {len(colset)}"
            )
        if not rowset:
            return Fraction(1)
        tally_minor(len(rowset))
        rows = self._rows
        sub = [[rows[i - 1][j - 1] for j in colset] for i in rowset]
        scale = math.prod(self._scales[i - 1] for i in rowset)
        return Fraction(integer_det(sub), scale)


def minor(a: RMatrix, rowset: Combo | Sequence[int], colset: Combo | Sequence[int]) -> Fraction:
    """Determinant of the submatrix on the given (1-based) rows and columns."""
    rs, cs = _as_indices(rowset), _as_indices(colset)
    if len(rs) != len(cs):
        raise DimensionError(f"row set {rs} and column set {cs} differ in size")
    if len(rs) > a.rows:
        raise DimensionError(f"minor of order {len(rs)} in a {a.rows}x{a.cols} matrix")
    for i in rs:
        if not 1 <= i <= a.rows:
            raise RankError(f"row {i} out of range")
    for j in cs:
        if not 1 <= j <= a.cols:
            raise RankError(f"column {j} out of range")
    return MinorEvaluator(a)(rs, cs)


# ---------------------------------------------------------------------------
# compound matrices


@dataclass(frozen=True)
class CompoundMatrix:
    """A matrix indexed by ``p``-subsets of ``1..n`` in lex order."""

    n: int
    p: int
    body: RMatrix

    @property
    def order(self) -> int:
        return self.body.rows

    def combos(self) -> list[Combo]:
        return combos(self.n, self.p)

    def entry(self, row: Combo | Sequence[int], col: Combo | Sequence[int]) -> Fraction:
        r = lex_rank(row if isinstance(row, Combo) else Combo(self.n, tuple(row)))
        s = lex_rank(col if isinstance(col, Combo) else Combo(self.n, tuple(col)))
        return self.body[r, s]


def _check_order(a: RMatrix, p: int) -> int:
    if not a.is_square:
        raise DimensionError(f"compound needs a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    if not 1 <= p <= n:
        raise RankError(f"compound order p={p} outside 1..{n}")
    return n


def compound(a: RMatrix, p: int) -> CompoundMatrix:
    """The ``p``-th compound: all ``p x p`` minors, rows and columns in lex order.

    >>> compound(RMatrix.diag([1, 2, 3]), 2).body == RMatrix.diag([2, 3, 6])
    True
    """
    n = _check_order(a, p)
    ev = MinorEvaluator(a)
    cs = list(combinations(range(1, n + 1), p))
    return CompoundMatrix(n, p, RMatrix(len(cs), len(cs), (ev(r, s) for r in cs for s in cs)))


def complementary_compound(a: RMatrix, p: int) -> CompoundMatrix:
    n = _check_order(a, p)
    ev = MinorEvaluator(a)
    cs = combos(n, p)
    comp = [c.complement().indices for c in cs]
    return CompoundMatrix(n, p, RMatrix(len(cs), len(cs), (ev(r, s) for r in comp for s in comp)))


def adjugate_compound(a: RMatrix, p: int) -> CompoundMatrix:
    """Signed, transposed complementary compound.

    Entry ``(S, R)`` is ``eps(R) eps(S) M_{R'}^{S'}``.  For ``p = n - 1`` this
    is the classical adjugate conjugated by the reversal and sign matrices;
    for ``p = 1`` it is the adjugate itself.
    """
    n = _check_order(a, p)
    ev = MinorEvaluator(a)
    cs = combos(n, p)
    comp = [c.complement().indices for c in cs]
    signs = [c.sign for c in cs]
    N = len(cs)
    entries = []
    for s in range(N):
        for r in range(N):
            m = ev(comp[r], comp[s])
            entries.append(m if signs[r] == signs[s] else -m)
    return CompoundMatrix(n, p, RMatrix(N, N, entries))


def sign_diagonal(n: int, p: int) -> RMatrix:
    """Diagonal of ``(-1)**sum(R)`` over the ``p``-subsets ``R`` in lex order."""
    return RMatrix.diag([c.sign for c in combos(n, p)])


def alternating_diagonal(order: int) -> RMatrix:
    """``Diag(1, -1, 1, ...)`` of the given order."""
    return RMatrix.diag([(-1) ** k for k in range(order)])


def reversal_matrix(order: int) -> RMatrix:
    """Anti-diagonal permutation matrix: entry ``(r, N + 1 - r)`` is 1."""
    return RMatrix(
        order, order, (1 if i + j == order - 1 else 0 for i in range(order) for j in range(order))
    )

