"""Closed form of the minimal projector norm on a ball, and regular simplices.

For the unit ball in ``R^n``

    psi(t) = 2 sqrt(n)/(n+1) * sqrt(t (n+1-t)) + |1 - 2t/(n+1)|,  0 <= t <= n+1
    a_n    = floor((n+1)/2 - sqrt(n+1)/2)
    theta  = max(psi(a_n), psi(a_n + 1)) = psi(k_n)

and theta is attained by the projector whose nodes are the vertices of a
regular simplex inscribed in the boundary sphere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .geometry import Ball, Simplex

TIE_TOL = 1e-12


@dataclass(frozen=True)
class ThetaRecord:
    n: int
    a_n: int
    psi_at_a: float
    psi_at_a_plus_1: float
    k_n: int
    theta: float

    def as_row(self):
        return (self.n, self.a_n, self.psi_at_a, self.psi_at_a_plus_1, self.k_n, self.theta)


def _check_n(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return int(n)


def psi(n: int, t: float) -> float:
    n = _check_n(n)
    if not 0 <= t <= n + 1:
        raise DomainError(f"t = {t!r} outside [0, {n + 1}]")
    return (2.0 * math.sqrt(n) / (n + 1) * math.sqrt(t * (n + 1 - t))
            + abs(1.0 - 2.0 * t / (n + 1)))


def a_n(n: int) -> int:
    """``floor((n+1)/2 - sqrt(n+1)/2)``, computed exactly in integers."""
    n = _check_n(n)
    m = n + 1
    # a is admissible iff 2a <= m - sqrt(m), i.e. m - 2a >= 0 and (m - 2a)**2 >= m
    a = int(math.floor((m - math.sqrt(m)) / 2))
    while m - 2 * (a + 1) >= 0 and (m - 2 * (a + 1)) ** 2 >= m:
        a += 1
    while a > 0 and not (m - 2 * a >= 0 and (m - 2 * a) ** 2 >= m):
        a -= 1
    return a


@lru_cache(maxsize=None)
def theta(n: int) -> ThetaRecord:
    """Minimal projector norm on the n-ball; ``k_n`` ties resolve to ``a_n + 1``."""
    n = _check_n(n)
    a = a_n(n)
    p0 = psi(n, a)
    p1 = psi(n, a + 1)
    k = a if p0 > p1 + TIE_TOL else a + 1
    return ThetaRecord(n, a, p0, p1, k, max(p0, p1))


def theta_value(n: int) -> float:
    return theta(n).theta


@lru_cache(maxsize=64)
def _unit_regular(n: int) -> np.ndarray:
    # Helmert basis of {sum = 0}: Gram-Schmidt applied to e1-e2, e1+e2-2e3, ...
    H = np.zeros((n, n + 1))
    for k in range(1, n + 1):
        H[k - 1, :k] = 1.0
        H[k - 1, k] = -float(k)
        H[k - 1] /= math.sqrt(k * (k + 1))
    # coordinates of e_j - 1/(n+1) in that basis, rescaled to unit length
    U = H.T * math.sqrt((n + 1) / n)
    U.setflags(write=False)
    return U


def regular_vertices(n: int) -> np.ndarray:
    """Vertices (rows) of the regular simplex inscribed in the unit sphere of ``R^n``."""
    return np.array(_unit_regular(_check_n(n)))


def regular_simplex(n: int, B: Ball | None = None) -> Simplex:
    """Regular simplex inscribed in the boundary sphere of ``B`` (unit ball by default).

    The orientation is fixed: no randomness is involved.
    """
    U = regular_vertices(n)
    if B is None:
        return Simplex(U)
    if B.n != n:
        raise DomainError(f"ball dimension {B.n} != n = {n}")
    return Simplex(B.center + B.radius * U)
