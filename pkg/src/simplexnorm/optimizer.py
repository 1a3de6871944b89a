"""Multi-start search for the node placement of least projector norm.

Stage one is a stochastic local search.  Each start draws a random simplex
in the unit ball, then sweeps over its vertices: a vertex moves by ``step``
along a random direction (the opposite direction is tried if the first one
fails), is radially projected back into the ball, and the move is kept only
if the norm strictly decreases.  A sweep with no accepted move shrinks the
step.

One-vertex moves stall where several sign patterns attain the norm
simultaneously.  Stage two therefore polishes the best start by solving the
minimax problem in epigraph form,

    minimize t  subject to  t >= piece_f(V) for every sign vector f,
                            ||x_j||^2 <= 1,

with SLSQP and finite-difference gradients.  The polished simplex replaces
the stage-one result only if its exact norm is strictly lower.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
from scipy.optimize import minimize

from .errors import ConfigError, DegenerateSimplex
from .geometry import Ball, Simplex, vertex_matrix
from .projector import _norm_search
from .regular import theta_value
from .sampling import random_simplex, sphere_points, stream

MAX_N = 12
MIN_STEP = 1e-7


@dataclass(frozen=True)
class OptimizeConfig:
    n: int
    starts: int = 16
    iters: int = 20000
    initial_step: float = 0.3
    shrink: float = 0.7
    seed: int = 0
    min_step: float = MIN_STEP
    polish: bool = True

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or not 1 <= self.n <= MAX_N:
            raise ConfigError(f"n must be an integer in [1, {MAX_N}], got {self.n!r}")
        if self.starts < 1:
            raise ConfigError("starts must be >= 1")
        if self.iters < 1:
            raise ConfigError("iters must be >= 1")
        if not self.initial_step > 0:
            raise ConfigError("initial_step must be > 0")
        if not 0 < self.shrink < 1:
            raise ConfigError("shrink must lie in (0, 1)")


@dataclass(frozen=True, eq=False)
class OptimizeResult:
    best_simplex: Simplex
    best_norm: float
    theta: float
    theta_gap: float
    regularity: tuple
    best_start: int
    polished: bool
    trace: list = field(repr=False)


def regularity_metrics(S: Simplex, B: Ball | None = None) -> tuple[float, float]:
    """``(max_j | ||x_j - center|| - R |, (max - min)/mean of pairwise distances)``."""
    B = Ball.unit(S.n) if B is None else B
    V = S.vertices
    inscribed = float(np.max(np.abs(np.linalg.norm(V - B.center, axis=1) - B.radius)))
    d = np.array([np.linalg.norm(V[i] - V[j]) for i, j in combinations(range(len(V)), 2)])
    return inscribed, float((d.max() - d.min()) / d.mean())


def _norm_of(V: np.ndarray) -> float:
    try:
        S = Simplex(V)
    except DegenerateSimplex:
        return np.inf
    return _norm_search(S.inverse, np.zeros(S.n), 1.0)[0]


def _into_ball(V: np.ndarray) -> np.ndarray:
    r = np.linalg.norm(V, axis=1)
    out = r > 1.0
    V[out] /= r[out, None]
    return V


def _run_start(cfg: OptimizeConfig, start: int):
    n = cfg.n
    rng = stream(cfg.seed, start)
    V = np.array(random_simplex(rng, Ball.unit(n)).vertices)
    cur = _norm_of(V)
    step = cfg.initial_step
    history = [cur]
    it = 0
    while it < cfg.iters and step >= cfg.min_step:
        moved = False
        for j in range(n + 1):
            d = sphere_points(rng, 1, n)[0]
            for sign in (1.0, -1.0):
                if it >= cfg.iters:
                    break
                it += 1
                cand = V.copy()
                cand[j] += sign * step * d
                _into_ball(cand)
                val = _norm_of(cand)
                if val < cur:
                    V, cur, moved = cand, val, True
                    break
        history.append(cur)
        if not moved:
            step *= cfg.shrink
    return V, cur, history


def _pieces(x: np.ndarray, n: int, F: np.ndarray) -> np.ndarray:
    try:
        L = np.linalg.inv(vertex_matrix(x.reshape(n + 1, n)))
    except np.linalg.LinAlgError:
        return np.full(len(F), 1e6)
    W = F @ L.T
    return np.linalg.norm(W[:, :n], axis=1) + np.abs(W[:, n])


def polish(V: np.ndarray, cur: float, rounds: int = 5):
    """Minimax refinement of a simplex in the unit ball; returns ``(V, norm)``."""
    n = V.shape[1]
    F = np.array([s + (1.0,) for s in itertools.product((1.0, -1.0), repeat=n)])
    dim = V.size
    e_t = np.zeros(dim + 1)
    e_t[-1] = 1.0
    cons = [
        {"type": "ineq", "fun": lambda z: z[-1] - _pieces(z[:-1], n, F)},
        {"type": "ineq", "fun": lambda z: 1.0 - np.sum(z[:-1].reshape(n + 1, n) ** 2, axis=1)},
    ]
    for _ in range(rounds):
        z0 = np.append(V.ravel(), cur)
        res = minimize(lambda z: z[-1], z0, jac=lambda z: e_t, method="SLSQP",
                       constraints=cons, options={"maxiter": 1000, "ftol": 1e-15})
        cand = _into_ball(res.x[:-1].reshape(n + 1, n).copy())
        val = _norm_of(cand)
        if not val < cur:
            break
        V, cur = cand, val
    return V, cur


def minimize_norm(config: OptimizeConfig, workers: int | None = None) -> OptimizeResult:
    """Search for the simplex in the unit ball whose projector has least norm.

    Deterministic for a fixed config: start ``s`` uses the stream keyed by
    ``(seed, s)``; the best start wins, ties going to the lower index.
    ``trace[s]`` lists the best value of start ``s`` after each sweep (plus
    the polished value for the winning start).
    """
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            runs = list(ex.map(lambda s: _run_start(config, s), range(config.starts)))
    else:
        runs = [_run_start(config, s) for s in range(config.starts)]
    best = None
    trace = []
    for s, (V, val, hist) in enumerate(runs):
        trace.append(hist)
        if best is None or val < best[1]:
            best = (V, val, s)
    V, val, s = best
    polished = False
    if config.polish and config.n > 1:
        V2, val2 = polish(V, val)
        if val2 < val:
            V, val, polished = V2, val2, True
            trace[s].append(val)
    S = Simplex(V)
    th = theta_value(config.n)
    return OptimizeResult(best_simplex=S, best_norm=float(val), theta=th,
                          theta_gap=float(val - th), regularity=regularity_metrics(S),
                          best_start=s, polished=polished, trace=trace)
