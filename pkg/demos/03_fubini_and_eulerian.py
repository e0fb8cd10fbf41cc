"""
Higher order Fubini and Eulerian numbers
========================================

F_n^p(x) weights S^p_{n,m} by m!.  The Eulerian triangle of order p is the
change of basis that writes F_n^p(x) in powers of (x+1)/x.
"""

from fractions import Fraction

from stirling_powers import eulerian_matrix, fubini_geometric_sum, fubini_number
from stirling_powers.higher_eulerian import check_identity_3, eulerian_egf_check
from stirling_powers.higher_fubini import fubini_egf_check

for p in range(1, 6):
    print(p, [fubini_number(p, n) for n in range(1, 8)])

# sum_k B_n^{p-1}(k) / 2^(k+1) reproduces F_n^p; weights B_n^p(k) do not
print(fubini_geometric_sum(2, 5, 1e-12).value, fubini_number(2, 5))
print(fubini_geometric_sum(2, 5, 1e-12, bell_order=2).value)

print("EGF 1/(1 - x sigma^2):", fubini_egf_check(2, Fraction(1, 2), 10))

for p in (1, 2):
    print(f"Eulerian triangle, order {p}")
    for row in eulerian_matrix(p, 5).rows:
        print("  ", row)

print(check_identity_3(3, Fraction(-2), 12), eulerian_egf_check(3, 2, 6))
