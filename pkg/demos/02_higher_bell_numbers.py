"""
Higher order Bell numbers, three ways
=====================================

Exact row sums of S^p, a Poisson-weighted infinite sum and a contour-style
integral on [0, pi] all give the same numbers.
"""

from stirling_powers import bell_number, bell_polynomial, cesaro_integral, dobinski_sum

print("B_n^p, p = 1..5, n = 1..7")
for p in range(1, 6):
    print(p, [bell_number(p, n) for n in range(1, 8)])

print("B_4^2(x) =", bell_polynomial(2, 4))

for p, n in [(1, 6), (2, 5), (2, 7)]:
    exact = bell_number(p, n)
    series = dobinski_sum(p, n, 1.0, 1e-12)
    integral = cesaro_integral(p, n, 1.0, 512)
    print(f"p={p} n={n}: exact {exact}, sum {series.value:.10f}, integral {integral.value:.10f}")

# the integrand grows like a tower of exponentials; p=5 is refused
try:
    cesaro_integral(5, 3, 1.0, 512)
except OverflowError as exc:
    print("p=5:", exc)
