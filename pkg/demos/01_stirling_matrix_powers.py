"""
Powers of the Stirling matrix
=============================

The lower-triangular matrix of set numbers S(n, m) can be raised to any
integer power exactly.  Negative powers come from the signed cycle numbers.
"""

from stirling_powers import matrix_power
from stirling_powers import exact_series as es

# the square of the Stirling matrix; column 1 holds the Bell numbers
sq = matrix_power(2, 7)
for row in sq.to_square():
    print(" ".join(f"{v:5d}" for v in row))

# S^2 @ S^-2 is the identity, and S^1 @ S^2 == S^3
print((matrix_power(2, 20) @ matrix_power(-2, 20)).rows == matrix_power(0, 20).rows)
print(matrix_power(1, 12) @ matrix_power(2, 12) == matrix_power(3, 12))

# column m of S^p has EGF sigma^p(x)^m / m!, with sigma^p the p-fold e^x - 1
sig3 = es.sigma(3, 8)
print("EGF of column 1 of S^3:", [int(a) for a in sig3.egf()])
print("column 1 of S^3:       ", matrix_power(3, 8).column(1))
