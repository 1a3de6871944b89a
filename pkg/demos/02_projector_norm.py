"""
Exact norm of an interpolation projector
========================================

The norm of the projector with nodes at the vertices of a simplex S is the
maximum of sum_j |lambda_j(x)| over the ball.  On a ball this maximum has a
closed form as a maximum over sign vectors, which we compare with plain
Monte Carlo sampling of the boundary sphere.
"""

import numpy as np

from simplexnorm import Ball, Simplex, lebesgue_function, norm_ball, norm_oracle

# a lopsided triangle inside the unit disc
S = Simplex([[0.9, 0.1], [-0.5, 0.6], [-0.2, -0.95]])
B = Ball.unit(2)

rep = norm_ball(S, B)
print("exact norm        :", rep.norm)
print("maximizing signs  :", rep.argmax_signs)
print("attained at       :", rep.argmax_point)
print("Lebesgue function there:", lebesgue_function(S, rep.argmax_point[None, :])[0])

# sampling can only approach the maximum from below
for samples in (100, 1_000, 10_000, 100_000):
    est = norm_oracle(S, B, samples=samples, seed=1)
    print(f"  {samples:>7} boundary samples -> {est:.8f}  (gap {rep.norm - est:.2e})")

# moving the ball changes the norm; translating both leaves it alone
shift = np.array([4.0, -2.0])
print("\nshifted ball       :", norm_ball(S, Ball(shift, 1.0)).norm)
print("shifted ball + S   :", norm_ball(S.transformed(b=shift), Ball(shift, 1.0)).norm)
