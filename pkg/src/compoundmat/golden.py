"""Golden fixtures: the worked 4x4 example and the matrices derived from it.

Each matrix is stored exactly as displayed in the worked example; the
``paper-examples`` verification suite recomputes all of them.
"""

from .exact_core import RMatrix

# singular, rank 2, third row zero
EXAMPLE_A = RMatrix.from_rows(
    [
        [1, -1, 1, 0],
        [0, 1, 1, 1],
        [0, 0, 0, 0],
        [1, 1, 3, 2],
    ]
)

EXAMPLE_A_RANK = 2

EXAMPLE_A_COMPOUND2 = RMatrix.from_rows(
    [
        [1, 1, 1, -2, -1, 1],
        [0, 0, 0, 0, 0, 0],
        [2, 2, 2, -4, -2, 2],
        [0, 0, 0, 0, 0, 0],
        [-1, -1, -1, 2, 1, -1],
        [0, 0, 0, 0, 0, 0],
    ]
)

EXAMPLE_A_ADJUGATE_COMPOUND2 = RMatrix.from_rows(
    [
        [0, 1, 0, 2, 0, 1],
        [0, 1, 0, 2, 0, 1],
        [0, -2, 0, -4, 0, -2],
        [0, 1, 0, 2, 0, 1],
        [0, -1, 0, -2, 0, -1],
        [0, 1, 0, 2, 0, 1],
    ]
)

# order-2 cofactor matrix on rows (1, 2)
EXAMPLE_A_COFACTOR2_12 = RMatrix.from_rows(
    [
        [-2, -1, 1, 0],
        [-1, -1, 0, 1],
        [1, 0, -1, 1],
        [0, 1, 1, -2],
    ]
)

# the sign pattern of the 6x6 sign/reversal conjugation used for n = 4, p = 2
SIGN_DIAGONAL_4_2 = (1, -1, 1, 1, -1, 1)
