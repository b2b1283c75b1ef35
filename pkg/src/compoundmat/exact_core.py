"""Exact rational scalars, dense matrices and the reference oracles.

Scalars are :class:`fractions.Fraction` values.  ``Fraction`` already keeps
itself in canonical form (positive denominator, reduced, zero as ``0/1``),
so it is used directly as the package's rational type.

Public indexing of :class:`RMatrix` is 1-based: ``a[1, 1]`` is the top-left
entry.  Storage is a flat, row-major tuple.

Two determinant oracles live here and nowhere else:

* :func:`det_permutation` -- the Leibniz sum over all permutations (n <= 8).
* :func:`det_bareiss` -- fraction-free elimination, any size.

Every formula elsewhere in the package is checked against one of them.
"""

from __future__ import annotations

import math
import operator
import re
from collections import Counter
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, OracleSizeError, ParseError

Rational = Fraction

PERMUTATION_ORACLE_MAX = 8

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    >>> parse_rational("-7/2")
    Fraction(-7, 2)
    >>> parse_rational("6/4")
    Fraction(3, 2)
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    """Canonical text form; the denominator is omitted when it is 1."""
    return str(Fraction(x))


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


# ---------------------------------------------------------------------------
# operation counting (used by the benchmark harness)


@dataclass
class OpCounter:
    """Tallies scalar arithmetic and minor evaluations inside a
    :func:`counting_ops` block.

    ``scalar_ops`` counts multiplications, additions, subtractions and exact
    divisions performed by the determinant cores.  Denominator clearing is
    not counted.
    """

    scalar_ops: int = 0
    minor_evals: int = 0
    minor_orders: Counter = field(default_factory=Counter)


_ACTIVE_COUNTER: ContextVar[OpCounter | None] = ContextVar("compoundmat_ops", default=None)


@contextmanager
def counting_ops() -> Iterator[OpCounter]:
    counter = OpCounter()
    token = _ACTIVE_COUNTER.set(counter)
    try:
        yield counter
    finally:
        _ACTIVE_COUNTER.reset(token)


def tally(ops: int) -> None:
    counter = _ACTIVE_COUNTER.get()
    if counter is not None:
        counter.scalar_ops += ops


def tally_minor(order: int) -> None:
    counter = _ACTIVE_COUNTER.get()
    if counter is not None:
        counter.minor_evals += 1
        counter.minor_orders[order] += 1


# ---------------------------------------------------------------------------
# matrices


class RMatrix:
    """Immutable dense matrix of exact rationals with 1-based indexing.

    >>> a = RMatrix.from_rows([[1, 2], [3, 4]])
    >>> a[2, 1]
    Fraction(3, 1)
    >>> (a @ RMatrix.from_rows([[0, 1], [1, 0]])).to_rows()
    [[Fraction(2, 1), Fraction(1, 1)], [Fraction(4, 1), Fraction(3, 1)]]
    """

    __slots__ = ("_rows", "_cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        data = tuple(as_rational(x) for x in entries)
        if rows < 0 or cols < 0 or len(data) != rows * cols:
            raise DimensionError(
                f"{len(data)} entries cannot fill a {rows}x{cols} matrix"
            )
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_cols", cols)
        object.__setattr__(self, "_entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("RMatrix is immutable")

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence) -> "RMatrix":
        values = list(values)
        n = len(values)
        return cls(n, n, (values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Sequence) -> "RMatrix":
        values = list(values)
        return cls(len(values), 1, values)

    @classmethod
    def hstack(cls, blocks: Sequence["RMatrix"]) -> "RMatrix":
        if not blocks:
            raise DimensionError("hstack needs at least one block")
        nrows = blocks[0].rows
        if any(b.rows != nrows for b in blocks):
            raise DimensionError("hstack blocks differ in row count")
        rows = [[x for b in blocks for x in b.row(i)] for i in range(1, nrows + 1)]
        return cls(nrows, sum(b.cols for b in blocks), (x for r in rows for x in r))

    @classmethod
    def block_diag(cls, *blocks: "RMatrix") -> "RMatrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.to_rows()):
                out[r0 + i][c0 : c0 + b.cols] = row
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(out) if n else cls(0, 0, ())

    # access -------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._entries

    @property
    def shape(self) -> tuple[int, int]:
        return self._rows, self._cols

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (1 <= i <= self._rows and 1 <= j <= self._cols):
            raise IndexError(f"({i}, {j}) outside a {self._rows}x{self._cols} matrix")
        return self._entries[(i - 1) * self._cols + (j - 1)]

    def row(self, i: int) -> tuple[Fraction, ...]:
        if not 1 <= i <= self._rows:
            raise IndexError(f"row {i} out of range")
        start = (i - 1) * self._cols
        return self._entries[start : start + self._cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        if not 1 <= j <= self._cols:
            raise IndexError(f"column {j} out of range")
        return self._entries[j - 1 :: self._cols] if self._cols else ()

    def columns(self) -> list["RMatrix"]:
        """Columns as ``n x 1`` matrices."""
        return [RMatrix.column(self.col(j)) for j in range(1, self._cols + 1)]

    def to_rows(self) -> list[list[Fraction]]:
        c = self._cols
        return [list(self._entries[i * c : (i + 1) * c]) for i in range(self._rows)]

    def submatrix(self, rowset: Iterable[int], colset: Iterable[int]) -> "RMatrix":
        """Keep the listed (1-based) rows and columns, in the given order."""
        rowset, colset = list(rowset), list(colset)
        return RMatrix(
            len(rowset), len(colset), (self[i, j] for i in rowset for j in colset)
        )

    def is_zero(self) -> bool:
        return not any(self._entries)

    # algebra ------------------------------------------------------------

    def transpose(self) -> "RMatrix":
        return RMatrix(
            self._cols,
            self._rows,
            (self._entries[i * self._cols + j] for j in range(self._cols) for i in range(self._rows)),
        )

    @property
    def T(self) -> "RMatrix":
        return self.transpose()

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        return mat_mul(self, other)

    def __mul__(self, scalar) -> "RMatrix":
        if isinstance(scalar, RMatrix):
            return NotImplemented
        s = as_rational(scalar)
        return RMatrix(self._rows, self._cols, (s * x for x in self._entries))

    __rmul__ = __mul__

    def __neg__(self) -> "RMatrix":
        return RMatrix(self._rows, self._cols, (-x for x in self._entries))

    def __add__(self, other: "RMatrix") -> "RMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return RMatrix(self._rows, self._cols, map(operator.add, self._entries, other._entries))

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {other.shape} from {self.shape}")
        return RMatrix(self._rows, self._cols, map(operator.sub, self._entries, other._entries))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._entries))

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(repr(format_rational(x)) for x in row) + "]"
            for row in self.to_rows()
        )
        return f"RMatrix.from_rows([{body}])"

    def __str__(self) -> str:
        cells = [[format_rational(x) for x in row] for row in self.to_rows()]
        if not cells:
            return "[]"
        width = max(len(c) for row in cells for c in row) if self._cols else 0
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def mat_mul(a: RMatrix, b: RMatrix) -> RMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    arows = a.to_rows()
    bcols = [b.col(j) for j in range(1, b.cols + 1)]
    return RMatrix(
        a.rows,
        b.cols,
        (sum(map(operator.mul, r, c), Fraction(0)) for r in arows for c in bcols),
    )


# ---------------------------------------------------------------------------
# integer kernels shared by the determinant routines


def integer_rows(a: RMatrix) -> tuple[list[list[int]], list[int]]:
    """Scale each row by the lcm of its denominators.

    Returns the integer rows and the per-row scale factors, so that any
    minor of ``a`` on row set R equals the integer minor divided by the
    product of the scales of R.
    """
    rows, scales = [], []
    for r in a.to_rows():
        d = math.lcm(*(x.denominator for x in r)) if r else 1
        rows.append([x.numerator * (d // x.denominator) for x in r])
        scales.append(d)
    return rows, scales


@lru_cache(maxsize=None)
def _signed_permutations(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    out = []
    for perm in permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        out.append((-1 if inversions & 1 else 1, perm))
    return tuple(out)


def leibniz_int(rows: Sequence[Sequence[int]]) -> int:
    """Signed sum over all permutations of an integer square matrix."""
    n = len(rows)
    if n == 0:
        return 1
    terms = _signed_permutations(n)
    tally(len(terms) * n - 1)
    getitem = operator.getitem
    total = 0
    for sign, perm in terms:
        term = math.prod(map(getitem, rows, perm))
        total += term if sign > 0 else -term
    return total


def bareiss_int(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination determinant of an integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        updates = (n - k - 1) ** 2
        tally(updates * (4 if k else 3))
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            lead = mi[k]
            for j in range(k + 1, n):
                mi[j] = (pivot * mi[j] - lead * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix: Leibniz up to order 8, Bareiss above."""
    if len(rows) <= PERMUTATION_ORACLE_MAX:
        return leibniz_int(rows)
    return bareiss_int(rows)


def _require_square(a: RMatrix) -> None:
    if not a.is_square:
        raise DimensionError(f"expected a square matrix, got {a.rows}x{a.cols}")


# ---------------------------------------------------------------------------
# oracles


def det_permutation(a: RMatrix) -> Fraction:
    """Determinant as the signed sum over all n! permutations.

    Capped at n = 8 (40320 terms).
    """
    _require_square(a)
    if a.rows > PERMUTATION_ORACLE_MAX:
        raise OracleSizeError(
            f"permutation oracle is capped at n={PERMUTATION_ORACLE_MAX}, got n={a.rows}"
        )
    rows, scales = integer_rows(a)
    return Fraction(leibniz_int(rows), math.prod(scales))


def det_bareiss(a: RMatrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    _require_square(a)
    rows, scales = integer_rows(a)
    return Fraction(bareiss_int(rows), math.prod(scales))


def _echelon_rank(rows: list[list[int]]) -> int:
    # fraction-free elimination with column skipping
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            mi, mr = m[i], m[r]
            lead = mi[c]
            for j in range(c + 1, ncols):
                mi[j] = (pivot * mi[j] - lead * mr[j]) // prev
            mi[c] = 0
        prev = pivot
        r += 1
    return r


def rank(a: RMatrix) -> int:
    """Exact rank over the rationals."""
    rows, _ = integer_rows(a)
    return _echelon_rank(rows)


def reduced_row_echelon(a: RMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan reduced row echelon form; pivot columns are 0-based."""
    m = a.to_rows()
    nrows, ncols = a.rows, a.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace_oracle(a: RMatrix) -> list[RMatrix]:
    """Basis of the right nullspace, one ``n x 1`` integer vector per free column.

    Vectors come from the reduced echelon form (free variable set to 1,
    the others solved for), then multiplied by the lcm of their denominators.
    """
    red, pivots = reduced_row_echelon(a)
    basis = []
    for free in (c for c in range(a.cols) if c not in pivots):
        v = [Fraction(0)] * a.cols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][free]
        d = math.lcm(*(x.denominator for x in v))
        basis.append(RMatrix.column(x * d for x in v))
    return basis


def span_equal(us: Sequence[RMatrix], vs: Sequence[RMatrix]) -> bool:
    """True iff two lists of column vectors span the same subspace."""
    if not us and not vs:
        return True
    if not us or not vs:
        return rank(RMatrix.hstack(list(us) or list(vs))) == 0
    ru = rank(RMatrix.hstack(list(us)))
    rv = rank(RMatrix.hstack(list(vs)))
    return ru == rv and rank(RMatrix.hstack(list(us) + list(vs))) == ru
