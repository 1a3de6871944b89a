"""Linear interpolation projector on a simplex and its norm over a ball.

For nodes ``x_j`` with Lagrange basis ``lambda_j`` the projector is
``Pf(x) = sum_j f(x_j) lambda_j(x)`` and its norm on ``C(K)`` is the maximum
of ``sum_j |lambda_j(x)|`` over ``K``.  On a ball ``B(x0, R)`` the maximum
has the closed form

    max over f in {-1, +1}^(n+1) of
        R * || sum_j f_j l_j || + | sum_j f_j lambda_j(x0) |

where ``l_j`` is the linear part (first ``n`` entries of column ``j`` of
``S^{-1}``).  :func:`norm_ball` evaluates this exactly by enumerating sign
vectors; :func:`norm_oracle` is an independent Monte Carlo lower bound.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .geometry import Ball, Simplex, as_point
from .sampling import sphere_points, stream

# sign vectors handled per vectorized block: 2**LOW_BITS rows
LOW_BITS = 14


@dataclass(frozen=True)
class ProjectorReport:
    norm: float
    argmax_signs: np.ndarray
    argmax_point: np.ndarray
    gray_index: int = 0


def lambda_eval(S: Simplex, x) -> np.ndarray:
    """Barycentric coordinates ``(lambda_1(x), ..., lambda_{n+1}(x))``."""
    return S.lambdas(as_point(x, S.n))


def interpolate(S: Simplex, fvals, x) -> float:
    """Value at ``x`` of the affine function taking ``fvals[j]`` at vertex ``j``."""
    f = np.asarray(fvals, dtype=float).reshape(-1)
    if f.shape[0] != S.n + 1:
        raise DimensionMismatch(f"need {S.n + 1} node values, got {f.shape[0]}")
    return float(f @ lambda_eval(S, x))


def lebesgue_function(S: Simplex, X) -> np.ndarray:
    """``sum_j |lambda_j(x)|`` for each row of ``X``."""
    return np.abs(S.lambdas(X)).sum(axis=-1)


def gray_signs(index: int, n: int) -> np.ndarray:
    """Sign vector visited at step ``index`` of the enumeration (last sign fixed +1)."""
    g = index ^ (index >> 1)
    f = np.ones(n + 1)
    for j in range(n):
        if (g >> j) & 1:
            f[j] = -1.0
    return f


def _reflected_table(cols: np.ndarray) -> np.ndarray:
    """Rows ``sum_j f_j cols[:, j]`` for all sign patterns, in reflected Gray order.

    Row ``i`` corresponds to Gray code ``i ^ (i >> 1)``, bit ``j`` set meaning
    ``f_j = -1``.  Consecutive rows differ by one flipped sign.
    """
    T = np.zeros((1, cols.shape[0]))
    for j in range(cols.shape[1]):
        c = cols[:, j]
        T = np.vstack([T + c, T[::-1] - c])
    return T


def _block_best(T, high, center, radius, n):
    W = T + high
    lin = W[:, :n]
    const = lin @ center + W[:, n]
    vals = radius * np.sqrt(np.einsum("ij,ij->i", lin, lin)) + np.abs(const)
    i = int(np.argmax(vals))
    return float(vals[i]), i


def _norm_search(L: np.ndarray, center: np.ndarray, radius: float, workers=None):
    """Return ``(value, gray_index)`` of the best sign vector.

    Ties go to the smallest Gray-code step index.
    """
    n = L.shape[0] - 1
    k = min(n, LOW_BITS)
    T = _reflected_table(L[:, :k])
    Trev = T[::-1]
    n_blocks = 1 << (n - k)

    def run(hi):
        gh = hi ^ (hi >> 1)
        f_high = np.array([-1.0 if (gh >> b) & 1 else 1.0 for b in range(n - k)])
        high = L[:, k:n] @ f_high + L[:, n]
        # odd high index: the low half of the Gray sequence runs reversed
        return _block_best(Trev if hi & 1 else T, high, center, radius, n)

    if workers and workers > 1 and n_blocks > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(run, range(n_blocks)))
    else:
        results = [run(hi) for hi in range(n_blocks)]

    best_val, best_idx = -np.inf, 0
    for hi, (val, i) in enumerate(results):
        if val > best_val:
            best_val, best_idx = val, (hi << k) + i
    return best_val, best_idx


def norm_value(S: Simplex, B: Ball, workers=None) -> float:
    """Exact ``||P||_B``, without building the full report."""
    _check(S, B)
    return _norm_search(S.inverse, B.center, B.radius, workers)[0]


def _check(S, B):
    if S.n != B.n:
        raise DimensionMismatch(f"simplex dimension {S.n} != ball dimension {B.n}")


def norm_ball(S: Simplex, B: Ball, workers: int | None = None) -> ProjectorReport:
    """Exact norm of the interpolation projector of ``S`` as an operator on ``C(B)``.

    Enumerates the ``2**n`` sign vectors with the last sign fixed to +1 (the
    maximized expression is even in ``f``).  The maximizing point is
    ``x0 +/- R v/||v||`` with ``v = sum_j f_j l_j``, whichever side gives the
    larger ``sum_j |lambda_j|``; the center if ``v = 0``.

    Parameters
    ----------
    S : Simplex
        Interpolation nodes.  They need not lie in ``B``.
    B : Ball
    workers : int, optional
        Thread count for the enumeration.  The result does not depend on it.
    """
    _check(S, B)
    L = S.inverse
    n = S.n
    value, idx = _norm_search(L, B.center, B.radius, workers)
    f = gray_signs(idx, n)
    v = L[:n] @ f
    nv = np.linalg.norm(v)
    if nv == 0.0:
        point = B.center.copy()
    else:
        d = B.radius * v / nv
        cands = np.vstack([B.center + d, B.center - d])
        point = cands[int(np.argmax(lebesgue_function(S, cands)))]
    return ProjectorReport(norm=value, argmax_signs=f, argmax_point=point, gray_index=idx)


def norm_oracle(S: Simplex, B: Ball, samples: int = 100_000, seed: int = 0,
                chunk: int = 65536) -> float:
    """Max of ``sum_j |lambda_j|`` over ``samples`` random points on the sphere of ``B``.

    The Lebesgue function is convex, so its maximum over the ball sits on the
    boundary sphere; this is a lower bound for :func:`norm_ball` that
    converges to it as ``samples`` grows.  Deterministic for a fixed seed.
    """
    _check(S, B)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = stream(seed)
    best = -np.inf
    done = 0
    while done < samples:
        m = min(chunk, samples - done)
        X = B.center + B.radius * sphere_points(rng, m, S.n)
        best = max(best, float(lebesgue_function(S, X).max()))
        done += m
    return best
