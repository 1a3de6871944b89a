"""
Minimal projector norms on the ball
===================================

For every dimension n the least possible norm of a linear interpolation
projector on the unit ball has a closed form, psi evaluated at an integer
k_n next to (n + 1)/2 - sqrt(n + 1)/2.  This script prints the first rows
and checks the two-sided bound sqrt(n) <= theta_n <= sqrt(n + 1).
"""

import math

from simplexnorm import psi, theta

# psi is concave on [0, n+1]; on integers it peaks at a_n or a_n + 1
n = 10
print("psi(10, t) for t = 0..11:")
print("  " + "  ".join(f"{psi(n, t):.4f}" for t in range(n + 2)))

print()
print(f"{'n':>5} {'a_n':>4} {'k_n':>4} {'theta_n':>10} {'sqrt(n)':>9} {'sqrt(n+1)':>9}")
for n in list(range(1, 16)) + [50, 100, 1000]:
    r = theta(n)
    print(f"{n:>5} {r.a_n:>4} {r.k_n:>4} {r.theta:>10.6f} {math.sqrt(n):>9.4f} {math.sqrt(n + 1):>9.4f}")

# the upper bound is attained exactly when n + 1 is a perfect square
hits = [n for n in range(1, 200) if abs(theta(n).theta - math.sqrt(n + 1)) < 1e-12]
print("\ntheta_n = sqrt(n+1) for n =", hits)
