"""Seeded generators of exact test matrices.

All generators take a :class:`random.Random` instance so that suites and
benchmarks are reproducible from a single seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exact_core import RMatrix, det_bareiss, rank

DEFAULT_DENOMINATORS = (1, 1, 1, 2, 3)

PYTHAGOREAN_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29))


def random_rational(rng: random.Random, bound: int = 5, dens=DEFAULT_DENOMINATORS) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.choice(dens))


def random_matrix(
    rng: random.Random, n: int, m: int | None = None, bound: int = 5, dens=DEFAULT_DENOMINATORS
) -> RMatrix:
    m = n if m is None else m
    return RMatrix(n, m, [random_rational(rng, bound, dens) for _ in range(n * m)])


def random_invertible(rng: random.Random, n: int, **kw) -> RMatrix:
    while True:
        a = random_matrix(rng, n, **kw)
        if det_bareiss(a) != 0:
            return a


def random_singular(rng: random.Random, n: int, **kw) -> RMatrix:
    """A random matrix with a zero determinant and otherwise arbitrary rank."""
    r = rng.randint(0, n - 1)
    return random_rank_matrix(rng, n, r, **kw)


def random_rank_matrix(rng: random.Random, n: int, r: int, **kw) -> RMatrix:
    """``n x n`` matrix of rank exactly ``r``: a product of ``n x r`` and ``r x n`` factors."""
    if r == 0:
        return RMatrix.zeros(n)
    while True:
        a = random_matrix(rng, n, r, **kw) @ random_matrix(rng, r, n, **kw)
        if rank(a) == r:
            return a


def shear(n: int, i: int, j: int, t) -> RMatrix:
    """``I + t E_ij`` (1-based, ``i != j``); determinant exactly 1."""
    rows = RMatrix.identity(n).to_rows()
    rows[i - 1][j - 1] = Fraction(t)
    return RMatrix.from_rows(rows)


def random_sl(rng: random.Random, n: int, steps: int | None = None, bound: int = 3) -> RMatrix:
    """Product of random elementary shears, so ``det == 1`` by construction."""
    a = RMatrix.identity(n)
    if n < 2:
        return a
    for _ in range(steps if steps is not None else 3 * n):
        i, j = rng.sample(range(1, n + 1), 2)
        t = Fraction(rng.choice([k for k in range(-bound, bound + 1) if k]), rng.choice((1, 2)))
        a = a @ shear(n, i, j, t)
    return a


def givens(n: int, i: int, j: int, c, s) -> RMatrix:
    """Rotation by (c, s) in the (i, j) coordinate plane, 1-based, ``c**2 + s**2 == 1``."""
    rows = RMatrix.identity(n).to_rows()
    c, s = Fraction(c), Fraction(s)
    rows[i - 1][i - 1] = c
    rows[j - 1][j - 1] = c
    rows[i - 1][j - 1] = -s
    rows[j - 1][i - 1] = s
    return RMatrix.from_rows(rows)


def pythagorean_rotation(x: int, y: int, z: int) -> RMatrix:
    """2x2 rotation ``[[x/z, -y/z], [y/z, x/z]]``."""
    return givens(2, 1, 2, Fraction(x, z), Fraction(y, z))


def random_signed_permutation_so(rng: random.Random, n: int) -> RMatrix:
    """Signed permutation matrix with determinant 1."""
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    a = RMatrix(n, n, (signs[i] if perm[i] == j else 0 for i in range(n) for j in range(n)))
    if det_bareiss(a) != 1:
        signs[0] = -signs[0]
        a = RMatrix(n, n, (signs[i] if perm[i] == j else 0 for i in range(n) for j in range(n)))
    return a


def random_so(rng: random.Random, n: int, rotations: int | None = None) -> RMatrix:
    """Rational special orthogonal matrix.

    A signed permutation of determinant 1 followed by a product of Givens
    rotations whose cosines and sines come from Pythagorean triples.
    """
    a = random_signed_permutation_so(rng, n)
    if n < 2:
        return a
    for _ in range(rotations if rotations is not None else n):
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        x, y, z = rng.choice(PYTHAGOREAN_TRIPLES)
        if rng.random() < 0.5:
            x, y = y, x
        s = y if rng.random() < 0.5 else -y
        a = a @ givens(n, i, j, Fraction(x, z), Fraction(s, z))
    return a
