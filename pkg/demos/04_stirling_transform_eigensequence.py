"""
The eigensequence of the Stirling transform
===========================================

C_{n+1} = sum_k C_k S(n, k) with seeds C_0 = 0, C_1 = 1.  Two further
recurrences, one through S^2, regenerate the same sequence.
"""

from stirling_powers import eigensequence, stirling_transform
from stirling_powers.stirling_transform import (
    check_binomial_identity,
    check_egf_ode,
    check_shift_recurrence,
    eigensequence_via_binomial,
)

c = eigensequence(12)
print(c)
print(stirling_transform(list(c[:-1]))[1:] == list(c[2:]))
print(eigensequence_via_binomial(12) == c)
print(check_binomial_identity(20), check_shift_recurrence(20))
print(check_egf_ode(20), check_egf_ode(20, derivative=2))
