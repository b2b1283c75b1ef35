"""When is diag(mu) the second compound of a diagonal 4x4 matrix?"""

from compoundmat.homlab import diagonal_preimage

for mu in [(2, 3, 4, 6, 8, 12), (1, 1, 1, 1, 1, 2), (2, 2, 2, 2, 2, 2), (1, 1, 1, -1, -1, -1)]:
    res = diagonal_preimage(mu)
    print(mu, "->", res.message)
    if res.matrix is not None:
        print("    a = diag", tuple(str(res.matrix[i, i]) for i in range(1, 5)))
