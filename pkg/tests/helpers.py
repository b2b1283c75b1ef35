from fractions import Fraction

from hypothesis import strategies as st

from compoundmat import RMatrix


def rationals(bound=6, max_den=3):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den))


@st.composite
def square_matrices(draw, min_n=1, max_n=4, bound=6, max_den=3):
    n = draw(st.integers(min_n, max_n))
    entries = draw(st.lists(rationals(bound, max_den), min_size=n * n, max_size=n * n))
    return RMatrix(n, n, entries)
