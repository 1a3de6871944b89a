"""Reproducible random streams and geometric samplers.

Every stream is a Philox (counter-based) generator keyed by a tuple of
non-negative integers, e.g. ``(seed, trial)``, so independent tasks never
share state and results do not depend on evaluation order.
"""
from __future__ import annotations

import numpy as np

from .errors import DegenerateSimplex
from .geometry import DEGENERACY_EPS, Ball, Simplex


def stream(*key: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(list(key))))


def sphere_points(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    """``count`` points uniform on the unit sphere in ``R^n`` (normalized Gaussians)."""
    G = rng.standard_normal((count, n))
    norms = np.linalg.norm(G, axis=1)
    # a zero Gaussian draw has probability 0 but would poison the division
    bad = norms == 0
    while np.any(bad):
        G[bad] = rng.standard_normal((int(bad.sum()), n))
        norms = np.linalg.norm(G, axis=1)
        bad = norms == 0
    return G / norms[:, None]


def ball_points(rng: np.random.Generator, count: int, ball: Ball) -> np.ndarray:
    """``count`` points uniform in ``ball``: direction times ``R * U**(1/n)``."""
    n = ball.n
    U = sphere_points(rng, count, n)
    radii = ball.radius * rng.random(count) ** (1.0 / n)
    return ball.center + U * radii[:, None]


def random_simplex(rng: np.random.Generator, ball: Ball,
                   eps: float = DEGENERACY_EPS, max_tries: int = 1000) -> Simplex:
    """Simplex with ``n+1`` vertices drawn uniformly in ``ball``; degenerate draws are redrawn."""
    for _ in range(max_tries):
        try:
            return Simplex(ball_points(rng, ball.n + 1, ball), eps)
        except DegenerateSimplex:
            continue
    raise RuntimeError("could not draw a nondegenerate simplex")
