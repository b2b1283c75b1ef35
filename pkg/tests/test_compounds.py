import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compoundmat import (
    Combo,
    DimensionError,
    RankError,
    RMatrix,
    adjugate_compound,
    complement,
    complementary_compound,
    compound,
    det_bareiss,
    lex_rank,
    minor,
    subset_at,
)
from compoundmat.compounds import (
    alternating_diagonal,
    combos,
    reversal_matrix,
    sign_diagonal,
)
from compoundmat.golden import (
    EXAMPLE_A,
    EXAMPLE_A_ADJUGATE_COMPOUND2,
    EXAMPLE_A_COMPOUND2,
    SIGN_DIAGONAL_4_2,
)
from compoundmat.laplace import adjugate
from compoundmat.sampling import random_matrix

from helpers import square_matrices


# --- combinations -----------------------------------------------------------


def test_lex_order_n4_p2():
    expected = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert [subset_at(4, 2, r).indices for r in range(1, 7)] == expected
    assert [lex_rank(Combo(4, c)) for c in expected] == list(range(1, 7))


def test_lex_order_n4_p3():
    expected = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert [subset_at(4, 3, r).indices for r in range(1, 5)] == expected


def test_lex_order_p1():
    assert [subset_at(5, 1, k).indices for k in range(1, 6)] == [(k,) for k in range(1, 6)]


@pytest.mark.parametrize("n", range(0, 9))
def test_lex_rank_matches_enumeration_and_roundtrips(n):
    for p in range(n + 1):
        for r, c in enumerate(combinations(range(1, n + 1), p), start=1):
            assert lex_rank(Combo(n, c)) == r
            assert subset_at(n, p, r) == Combo(n, c)


def test_subset_at_range_errors():
    with pytest.raises(RankError):
        subset_at(4, 2, 0)
    with pytest.raises(RankError):
        subset_at(4, 2, 7)


def test_combo_validation():
    with pytest.raises(RankError):
        Combo(4, (2, 1))
    with pytest.raises(RankError):
        Combo(4, (1, 5))
    with pytest.raises(RankError):
        Combo(4, (2, 2))


def test_complement_examples():
    assert complement(Combo(4, (1, 2))) == Combo(4, (3, 4))
    assert complement(Combo(4, (1, 3))) == Combo(4, (2, 4))
    assert complement(Combo(5, (1, 2, 3, 4, 5))) == Combo(5, ())


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n)))))
def test_complement_is_an_involution_and_reverses_lex_order(data):
    n, chosen = data
    c = Combo(n, tuple(sorted(chosen)))
    assert complement(complement(c)) == c
    total = math.comb(n, c.p)
    assert lex_rank(complement(c)) == total + 1 - lex_rank(c)


# --- minors and compounds ----------------------------------------------------


def test_minor_examples():
    assert minor(EXAMPLE_A, Combo(4, (1, 2)), Combo(4, (2, 3))) == -2
    assert minor(EXAMPLE_A, (2, 4), (1, 2)) == -1
    a = random_matrix(random.Random(0), 5)
    for i in range(1, 6):
        assert minor(a, (i,), (i,)) == a[i, i]
    with pytest.raises(DimensionError):
        minor(a, (1, 2), (1,))


def test_minor_agrees_with_bareiss_on_submatrix():
    rng = random.Random(5)
    a = random_matrix(rng, 10)
    for p in (2, 5, 9, 10):
        rows = sorted(rng.sample(range(1, 11), p))
        cols = sorted(rng.sample(range(1, 11), p))
        assert minor(a, rows, cols) == det_bareiss(a.submatrix(rows, cols))


def test_compound_of_example_matches_display():
    assert compound(EXAMPLE_A, 2).body == EXAMPLE_A_COMPOUND2


def test_compound_identity():
    for n in range(1, 6):
        for p in range(1, n + 1):
            assert compound(RMatrix.identity(n), p).body == RMatrix.identity(math.comb(n, p))


def test_compound_of_diagonal():
    d = [1, 2, 3, 4]
    expected = [d[i - 1] * d[j - 1] for i, j in combinations(range(1, 5), 2)]
    assert expected == [2, 3, 4, 6, 8, 12]
    assert compound(RMatrix.diag(d), 2).body == RMatrix.diag(expected)


def test_complementary_compound_examples():
    assert complementary_compound(RMatrix.identity(4), 2).body == RMatrix.identity(6)
    cc = complementary_compound(EXAMPLE_A, 2)
    assert cc.entry((1, 2), (1, 2)) == 0
    d = [1, 2, 3, 4]
    expected = [math.prod(d[k - 1] for k in range(1, 5) if k not in c) for c in combinations(range(1, 5), 2)]
    assert expected == [12, 8, 6, 4, 3, 2]
    assert complementary_compound(RMatrix.diag(d), 2).body == RMatrix.diag(expected)


def test_adjugate_compound_of_example_matches_display():
    assert adjugate_compound(EXAMPLE_A, 2).body == EXAMPLE_A_ADJUGATE_COMPOUND2
    assert (compound(EXAMPLE_A, 2).body @ adjugate_compound(EXAMPLE_A, 2).body).is_zero()


def test_adjugate_compound_identity():
    for n in range(1, 6):
        for p in range(1, n + 1):
            assert adjugate_compound(RMatrix.identity(n), p).body == RMatrix.identity(math.comb(n, p))


def test_order3_compounds_of_example():
    # every 3x3 minor of a rank-2 matrix vanishes
    assert compound(EXAMPLE_A, 3).body.is_zero()
    # order-3 minors with the alternating sign pattern form the classical adjugate
    n1 = adjugate_compound(EXAMPLE_A, 1).body
    assert n1.is_zero()
    a = random_matrix(random.Random(11), 4)
    m1 = adjugate_compound(a, 1).body
    assert m1[1, 1] == minor(a, (2, 3, 4), (2, 3, 4))
    assert m1[1, 2] == -minor(a, (1, 3, 4), (2, 3, 4))
    assert m1[1, 3] == minor(a, (1, 2, 4), (2, 3, 4))
    assert m1[1, 4] == -minor(a, (1, 2, 3), (2, 3, 4))
    assert m1[2, 1] == -minor(a, (2, 3, 4), (1, 3, 4))
    assert m1 == adjugate(a)
    # p = 3 pairs the order-3 compound with signed, reversed entries of a
    m3t = adjugate_compound(EXAMPLE_A, 3).body
    d, j = sign_diagonal(4, 3), reversal_matrix(4)
    assert m3t == d @ j @ EXAMPLE_A.T @ j @ d


def test_compound_order_errors():
    with pytest.raises(RankError):
        compound(RMatrix.identity(3), 0)
    with pytest.raises(RankError):
        compound(RMatrix.identity(3), 4)
    with pytest.raises(DimensionError):
        compound(RMatrix.zeros(2, 3), 1)


# --- sign and reversal matrices ---------------------------------------------


def test_sign_diagonal_n4_p2_matches_display_up_to_global_sign():
    signs = [sign_diagonal(4, 2)[k, k] for k in range(1, 7)]
    assert signs == [-s for s in SIGN_DIAGONAL_4_2]


def test_sign_diagonal_n5_p2_is_not_alternating():
    signs = [sign_diagonal(5, 2)[k, k] for k in range(1, 11)]
    alternating = [(-1) ** k for k in range(10)]
    assert signs != alternating and signs != [-s for s in alternating]


def test_strictly_alternating_signs_break_the_identity_at_n5_p2():
    a = random_matrix(random.Random(2), 5)
    n = math.comb(5, 2)
    d = alternating_diagonal(n)
    j = reversal_matrix(n)
    candidate = d @ j @ compound(a, 3).body.T @ j @ d
    assert compound(a, 2).body @ candidate != det_bareiss(a) * RMatrix.identity(n)


def test_reversal_matrix():
    j = reversal_matrix(6)
    for r in range(1, 7):
        for s in range(1, 7):
            assert j[r, s] == (1 if s == 7 - r else 0)
    assert j @ j == RMatrix.identity(6)


# --- properties -------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(square_matrices(max_n=5), st.data())
def test_compound_times_adjugate_compound_is_det_identity(a, data):
    p = data.draw(st.integers(1, a.rows))
    n_p = math.comb(a.rows, p)
    assert compound(a, p).body @ adjugate_compound(a, p).body == det_bareiss(a) * RMatrix.identity(n_p)


@settings(max_examples=40, deadline=None)
@given(square_matrices(max_n=5))
def test_compound_extremes(a):
    assert compound(a, 1).body == a
    assert compound(a, a.rows).body == RMatrix.from_rows([[det_bareiss(a)]])


@settings(max_examples=40, deadline=None)
@given(square_matrices(max_n=5), st.data())
def test_compound_commutes_with_transpose_and_negation(a, data):
    p = data.draw(st.integers(1, a.rows))
    m = compound(a, p).body
    assert compound(a.T, p).body == m.T
    assert compound(-a, p).body == (-1) ** p * m


@settings(max_examples=40, deadline=None)
@given(square_matrices(min_n=2, max_n=5), st.data())
def test_adjugate_compound_is_reversal_conjugate_of_complementary_order(a, data):
    n = a.rows
    p = data.draw(st.integers(1, n - 1))
    d, j = sign_diagonal(n, p), reversal_matrix(math.comb(n, p))
    assert adjugate_compound(a, p).body == d @ j @ compound(a, n - p).body.T @ j @ d


def test_compound_entry_lookup():
    m = compound(EXAMPLE_A, 2)
    assert m.order == 6 and len(m.combos()) == 6
    assert m.entry((1, 2), (2, 3)) == -2
    assert m.entry(Combo(4, (2, 4)), Combo(4, (1, 2))) == -1
    assert [c.indices for c in combos(4, 2)][4] == (2, 4)
