"""
Points of the minimal ellipsoid opposite a face centroid
========================================================

Pick m vertices of a simplex, take the centroid g of those vertices and
walk from g through the simplex centroid c until the boundary of the
minimal enclosing ellipsoid.  For a simplex inside the unit ball at least
one of these points y_J also lies in the ball.
"""

import numpy as np

from simplexnorm import Ball, minimal_ellipsoid, regular_simplex, theta, verify_theorem1
from simplexnorm.extremal import mean_square_identity, y_points
from simplexnorm.sampling import random_simplex, stream

n = 4
S = random_simplex(stream(2024), Ball.unit(n))
E = minimal_ellipsoid(S)
print("ellipsoid semi-axes:", np.round(E.semi_axes(), 4))

for m in range(1, n + 1):
    rep = verify_theorem1(S, Ball.unit(n), m)
    lhs, rhs = mean_square_identity(S, m)
    print(f"m={m}: {len(rep.points):>2} points, min ||y_J|| = {rep.min_norm:.6f} at J={rep.witness},"
          f" mean square {lhs:.6f} vs {rhs:.6f}")

# for the regular simplex every y_J sits on the unit sphere, and for m = k_n
# the Lebesgue function there equals theta_n: these are the extremal points
for n in (3, 6, 9):
    R = regular_simplex(n)
    k = theta(n).k_n
    _, Y = y_points(R, k)
    values = np.abs(R.lambdas(Y)).sum(axis=1)
    print(f"n={n}: {len(Y)} points, radii in [{np.linalg.norm(Y, axis=1).min():.12f},"
          f" {np.linalg.norm(Y, axis=1).max():.12f}], sum|lambda| = {values.max():.10f},"
          f" theta = {theta(n).theta:.10f}")
