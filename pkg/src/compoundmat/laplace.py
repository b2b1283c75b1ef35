"""Determinant expansions and the classical adjugate.

Every expansion here is an exact alternative to the two oracles in
:mod:`compoundmat.exact_core`:

* :func:`det_cofactor` -- expansion along one row into order ``n - 1`` minors;
* :func:`det_laplace_pair` -- expansion along two rows into products of a
  ``2 x 2`` minor and its complementary ``(n - 2)``-minor;
* :func:`det_laplace_general` -- expansion along any row set ``R`` with
  sign ``(-1)**(sum(R) + sum(S))``.

:func:`det_laplace_alt_sign` keeps the alternative exponent
``sum(S) + p - 1`` for the leading ``p`` rows.  It is correct only when
``p * (p + 1) / 2`` and ``p - 1`` have the same parity (p = 2, 3, 6, 7, ...)
and returns ``-det(a)`` otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .compounds import Combo, MinorEvaluator
from .errors import DimensionError, ParseError, RankError
from .exact_core import RMatrix, det_bareiss, det_permutation, integer_rows, tally


def _require_square(a: RMatrix) -> int:
    if not a.is_square:
        raise DimensionError(f"expected a square matrix, got {a.rows}x{a.cols}")
    return a.rows


def det_cofactor(a: RMatrix, i: int = 1) -> Fraction:
    """Cofactor expansion along row ``i``, recursing on the first remaining row.

    Sub-determinants are cached by their column set, so the recursion visits
    each of the ``2**(n-1)`` column subsets at most once.
    """
    n = _require_square(a)
    if not 1 <= i <= n:
        raise RankError(f"row {i} out of range 1..{n}")
    if n == 1:
        return a[1, 1]
    rows, scales = integer_rows(a)
    rest = rows[: i - 1] + rows[i:]

    @lru_cache(maxsize=None)
    def sub(cols: tuple[int, ...]) -> int:
        k = len(cols)
        if k == 1:
            return rest[-1][cols[0]]
        row = rest[n - 1 - k]
        tally(2 * k - 1)
        total = 0
        for pos, c in enumerate(cols):
            if row[c]:
                term = row[c] * sub(cols[:pos] + cols[pos + 1 :])
                total += -term if pos & 1 else term
        return total

    top = rows[i - 1]
    every = tuple(range(n))
    tally(2 * n - 1)
    total = 0
    for j in range(n):
        if top[j]:
            term = top[j] * sub(every[:j] + every[j + 1 :])
            total += -term if (i - 1 + j) & 1 else term
    return Fraction(total, math.prod(scales))


def adjugate(a: RMatrix) -> RMatrix:
    """Transpose of the cofactor matrix ``((-1)**(i+j) M_ij)``.

    ``a @ adjugate(a) == det(a) * I`` holds whether or not ``a`` is invertible.
    """
    n = _require_square(a)
    if n < 2:
        raise DimensionError("the adjugate needs n >= 2")
    ev = MinorEvaluator(a)
    idx = range(1, n + 1)
    cof = {}
    for i in idx:
        for j in idx:
            m = ev([r for r in idx if r != i], [c for c in idx if c != j])
            cof[i, j] = -m if (i + j) & 1 else m
    return RMatrix(n, n, (cof[j, i] for i in idx for j in idx))


def _expand(a: RMatrix, rows: Sequence[int], exponent) -> Fraction:
    # sum over column sets S of (-1)**exponent(S) * M_rows^S * M_{rows'}^{S'}
    n = a.rows
    ev = MinorEvaluator(a)
    taken = set(rows)
    other_rows = [r for r in range(1, n + 1) if r not in taken]
    terms = 0
    total = Fraction(0)
    for cols in combinations(range(1, n + 1), len(rows)):
        chosen = set(cols)
        other_cols = [c for c in range(1, n + 1) if c not in chosen]
        term = ev(rows, cols) * ev(other_rows, other_cols)
        total += -term if exponent(cols) & 1 else term
        terms += 1
    tally(2 * terms - 1)
    return total


def det_laplace_pair(a: RMatrix, i1: int, i2: int) -> Fraction:
    """Expansion along rows ``i1 < i2`` over all ``C(n, 2)`` column pairs."""
    n = _require_square(a)
    if n < 2 or not 1 <= i1 < i2 <= n:
        raise RankError(f"row pair ({i1}, {i2}) invalid for n={n}")
    return _expand(a, (i1, i2), lambda cols: i1 + i2 + cols[0] + cols[1])


def det_laplace_general(a: RMatrix, rows: Combo | Sequence[int]) -> Fraction:
    """Generalized Laplace expansion along an arbitrary row set."""
    n = _require_square(a)
    combo = rows if isinstance(rows, Combo) else Combo(n, tuple(rows))
    if combo.n != n:
        raise RankError(f"row set lives in 1..{combo.n}, matrix has order {n}")
    if combo.p == 0:
        raise RankError("row set must be non-empty")
    base = combo.sigma
    return _expand(a, combo.indices, lambda cols: base + sum(cols))


def det_laplace_alt_sign(a: RMatrix, p: int) -> Fraction:
    """Expansion along rows ``1..p`` with sign ``(-1)**(sum(S) + p - 1)``."""
    n = _require_square(a)
    if not 1 <= p <= n:
        raise RankError(f"p={p} outside 1..{n}")
    return _expand(a, tuple(range(1, p + 1)), lambda cols: sum(cols) + p - 1)


def alt_sign_agrees(p: int) -> bool:
    """Whether the ``sum(S) + p - 1`` exponent has the right parity for ``p`` leading rows."""
    return (p * (p + 1) // 2 - (p - 1)) % 2 == 0


# ---------------------------------------------------------------------------
# strategy selection

STRATEGY_KINDS = ("permutation", "bareiss", "cofactor", "pair-rows", "general-rows")


@dataclass(frozen=True)
class DetStrategy:
    """A determinant method plus its row choice.

    Text form: ``bareiss``, ``permutation``, ``cofactor:3``,
    ``pair-rows:1,2``, ``general-rows:1,2,3``.  Without a row list the
    defaults are row 1, rows (1, 2) and the leading ``ceil(n/2)`` rows.
    """

    kind: str
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in STRATEGY_KINDS:
            raise ParseError(f"unknown strategy {self.kind!r}")
        expected = {"cofactor": 1, "pair-rows": 2}.get(self.kind)
        if self.kind in ("permutation", "bareiss") and self.rows:
            raise ParseError(f"strategy {self.kind} takes no rows")
        if expected is not None and self.rows and len(self.rows) != expected:
            raise ParseError(f"strategy {self.kind} takes {expected} row(s)")

    @classmethod
    def parse(cls, text: str) -> "DetStrategy":
        kind, _, tail = text.strip().partition(":")
        rows: tuple[int, ...] = ()
        if tail:
            try:
                rows = tuple(int(x) for x in tail.split(","))
            except ValueError:
                raise ParseError(f"bad row list in strategy {text!r}") from None
        return cls(kind, rows)

    def __str__(self) -> str:
        if not self.rows:
            return self.kind
        return f"{self.kind}:" + ",".join(map(str, self.rows))

    def resolve_rows(self, n: int) -> tuple[int, ...]:
        if self.rows:
            return self.rows
        if self.kind == "cofactor":
            return (1,)
        if self.kind == "pair-rows":
            return (1, 2)
        if self.kind == "general-rows":
            return tuple(range(1, (n + 1) // 2 + 1))
        return ()


def determinant(a: RMatrix, strategy: DetStrategy | str | None = None) -> Fraction:
    """Determinant by the requested strategy (Bareiss by default).

    A ``1 x 1`` matrix returns its entry under every strategy.
    """
    if strategy is None:
        strategy = DetStrategy("bareiss")
    elif isinstance(strategy, str):
        strategy = DetStrategy.parse(strategy)
    n = _require_square(a)
    if n == 1:
        return a[1, 1]
    rows = strategy.resolve_rows(n)
    if strategy.kind == "permutation":
        return det_permutation(a)
    if strategy.kind == "bareiss":
        return det_bareiss(a)
    if strategy.kind == "cofactor":
        return det_cofactor(a, rows[0])
    if strategy.kind == "pair-rows":
        return det_laplace_pair(a, *rows)
    return det_laplace_general(a, rows)
