"""
Searching for the best nodes
============================

Start from random simplices in the unit ball and move one vertex at a time
while the projector norm keeps dropping.  The winner should approach the
regular simplex inscribed in the sphere, whose norm is theta_n.
"""

import numpy as np

from simplexnorm import OptimizeConfig, minimize_norm

for n in (2, 3, 4):
    r = minimize_norm(OptimizeConfig(n=n, seed=42))
    finals = [h[-1] for h in r.trace]
    print(f"n={n}: best {r.best_norm:.10f}  theta {r.theta:.10f}  gap {r.theta_gap:.1e}")
    print(f"      start {r.best_start} won; per-start finals range"
          f" [{min(finals):.4f}, {max(finals):.4f}], polished={r.polished}")
    print(f"      inscribed deviation {r.regularity[0]:.1e}, distance spread {r.regularity[1]:.1e}")

# without the minimax polish, local search alone stalls a little short
r = minimize_norm(OptimizeConfig(n=3, seed=42, polish=False))
print(f"\nn=3 without polish: gap {r.theta_gap:.1e}")
print(np.round(r.best_simplex.vertices, 4))
