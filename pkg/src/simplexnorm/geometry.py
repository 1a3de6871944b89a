"""Simplices, balls and ellipsoids in R^n.

A :class:`Simplex` owns its vertex matrix ``S`` (rows ``(x_j, 1)``) and the
inverse ``L = S^{-1}``.  Column ``j`` of ``L`` holds the coefficients of the
j-th Lagrange polynomial, so ``lambda(x) = (x, 1) @ L``.

Vertex indices are 0-based and kept in input order.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DegenerateSimplex, DimensionMismatch

DEGENERACY_EPS = 1e-12
MEMBERSHIP_TOL = 1e-9
IDENTITY_TOL = 1e-10


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=float)
    arr.setflags(write=False)
    return arr


def as_point(x, n: int | None = None) -> np.ndarray:
    """Coerce ``x`` to a finite 1-d float array, optionally of length ``n``."""
    p = np.asarray(x, dtype=float)
    if p.ndim == 0:
        p = p.reshape(1)
    if p.ndim != 1:
        raise DimensionMismatch(f"point must be 1-d, got shape {p.shape}")
    if n is not None and p.shape[0] != n:
        raise DimensionMismatch(f"point has dimension {p.shape[0]}, expected {n}")
    if not np.all(np.isfinite(p)):
        raise ValueError("point has non-finite coordinates")
    return p


def vertex_matrix(vertices) -> np.ndarray:
    """Return the ``(n+1, n+1)`` matrix whose row j is ``(x_j, 1)``."""
    V = np.asarray(vertices, dtype=float)
    return np.hstack([V, np.ones((V.shape[0], 1))])


def degeneracy_measure(vertices) -> float:
    """``|det S| / (max |coord| + 1)**n`` with coordinates taken relative to the centroid.

    ``det S`` does not change under translation, so neither does the gauge.
    """
    V = np.asarray(vertices, dtype=float)
    n = V.shape[1]
    sign, logdet = np.linalg.slogdet(vertex_matrix(V))
    if sign == 0:
        return 0.0
    scale = float(np.max(np.abs(V - V.mean(axis=0)))) + 1.0
    return math.exp(logdet - n * math.log(scale))


@dataclass(frozen=True)
class Ball:
    """Closed Euclidean ball ``||x - center|| <= radius``."""

    center: np.ndarray
    radius: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "center", _frozen(as_point(self.center)))
        r = float(self.radius)
        if not (r > 0 and math.isfinite(r)):
            raise ValueError(f"radius must be positive, got {self.radius!r}")
        object.__setattr__(self, "radius", r)

    @classmethod
    def unit(cls, n: int) -> "Ball":
        return cls(np.zeros(n), 1.0)

    @property
    def n(self) -> int:
        return self.center.shape[0]

    def contains(self, x, tol: float = MEMBERSHIP_TOL) -> bool:
        return contains(self, x, tol)


@dataclass(frozen=True, eq=False)
class Simplex:
    """Nondegenerate simplex with ``n+1`` vertices in ``R^n``.

    Construction computes the vertex matrix and its inverse once and raises
    :class:`DegenerateSimplex` when :func:`degeneracy_measure` falls below
    ``eps``.
    """

    vertices: np.ndarray
    eps: float = DEGENERACY_EPS
    matrix: np.ndarray = field(init=False, repr=False)
    inverse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        V = np.array(self.vertices, dtype=float)
        if V.ndim == 1:
            V = V.reshape(-1, 1)
        if V.ndim != 2 or V.shape[0] != V.shape[1] + 1:
            raise DimensionMismatch(
                f"a simplex in R^n needs n+1 vertices of length n, got shape {V.shape}")
        if not np.all(np.isfinite(V)):
            raise ValueError("vertices must be finite")
        S = vertex_matrix(V)
        measure = degeneracy_measure(V)
        if measure <= self.eps:
            det = abs(np.linalg.det(S))
            raise DegenerateSimplex(
                f"degenerate simplex: |det S| = {det:.3e} "
                f"(scaled {measure:.3e} <= {self.eps:g})", det=det)
        # LAPACK gesv: LU with partial pivoting
        L = np.linalg.inv(S)
        V.setflags(write=False)
        S.setflags(write=False)
        L.setflags(write=False)
        object.__setattr__(self, "vertices", V)
        object.__setattr__(self, "matrix", S)
        object.__setattr__(self, "inverse", L)

    @property
    def n(self) -> int:
        return self.vertices.shape[1]

    def lambdas(self, x) -> np.ndarray:
        """Barycentric coordinates of ``x`` (or of each row of a 2-d ``x``)."""
        X = np.asarray(x, dtype=float)
        if X.shape[-1] != self.n:
            raise DimensionMismatch(
                f"point dimension {X.shape[-1]} does not match simplex dimension {self.n}")
        return X @ self.inverse[:-1] + self.inverse[-1]

    def transformed(self, A=None, b=None) -> "Simplex":
        """Image under ``x -> A x + b``."""
        V = self.vertices
        if A is not None:
            V = V @ np.asarray(A, dtype=float).T
        if b is not None:
            V = V + np.asarray(b, dtype=float)
        return Simplex(V, self.eps)


@dataclass(frozen=True, eq=False)
class Ellipsoid:
    """Image of the closed unit ball under ``u -> center + M u``."""

    center: np.ndarray
    M: np.ndarray

    def __post_init__(self):
        c = as_point(self.center)
        M = np.array(self.M, dtype=float)
        if M.shape != (c.shape[0], c.shape[0]):
            raise DimensionMismatch(f"map shape {M.shape} does not match center dimension")
        if abs(np.linalg.det(M)) == 0.0:
            raise ValueError("ellipsoid map must be invertible")
        M.setflags(write=False)
        object.__setattr__(self, "center", _frozen(c))
        object.__setattr__(self, "M", M)

    @property
    def n(self) -> int:
        return self.center.shape[0]

    def gauge(self, x) -> np.ndarray:
        """``||M^{-1}(x - center)||``; equals 1 exactly on the boundary."""
        X = np.asarray(x, dtype=float) - self.center
        U = np.linalg.solve(self.M, X.T).T
        return np.linalg.norm(U, axis=-1)

    def contains(self, x, tol: float = MEMBERSHIP_TOL) -> bool:
        return bool(self.gauge(as_point(x, self.n)) <= 1.0 + tol)

    def boundary_point(self, u) -> np.ndarray:
        u = as_point(u, self.n)
        return self.center + self.M @ (u / np.linalg.norm(u))

    def semi_axes(self) -> np.ndarray:
        return np.sort(np.linalg.svd(self.M, compute_uv=False))[::-1]

    def volume(self) -> float:
        return abs(float(np.linalg.det(self.M))) * unit_ball_volume(self.n)


def unit_ball_volume(n: int) -> float:
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1)


def lagrange_coefficients(S: Simplex) -> np.ndarray:
    """Return ``L = S^{-1}``; ``lambda_j(x) = sum_i L[i, j] x_i + L[n, j]``."""
    return np.array(S.inverse)


def centroid(S: Simplex) -> np.ndarray:
    return S.vertices.mean(axis=0)


def contains(B: Ball, x, tol: float = MEMBERSHIP_TOL) -> bool:
    """True iff ``||x - center|| <= R + tol``."""
    x = as_point(x)
    if x.shape[0] != B.n:
        raise DimensionMismatch(f"point dimension {x.shape[0]} != ball dimension {B.n}")
    return bool(np.linalg.norm(x - B.center) <= B.radius + tol)


def circumball(S: Simplex) -> Ball:
    """The ball whose boundary sphere passes through every vertex."""
    V = S.vertices
    A = 2.0 * (V[1:] - V[0])
    b = np.sum(V[1:] ** 2, axis=1) - np.sum(V[0] ** 2)
    c = np.linalg.solve(A, b)
    return Ball(c, float(np.linalg.norm(V[0] - c)))


# --- JSON -------------------------------------------------------------------

def _strict_number(v, what):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValueError(f"{what}: expected a number, got {v!r}")
    return float(v)


def simplex_from_dict(d: dict, eps: float = DEGENERACY_EPS) -> Simplex:
    """Parse ``{"n": int, "vertices": [[...], ...]}``; counts must match exactly."""
    if not isinstance(d, dict) or "n" not in d or "vertices" not in d:
        raise ValueError('simplex JSON must be an object with keys "n" and "vertices"')
    n = d["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f'"n" must be a positive integer, got {n!r}')
    rows = d["vertices"]
    if not isinstance(rows, list) or len(rows) != n + 1:
        raise DimensionMismatch(f"expected {n + 1} vertices for n={n}")
    V = []
    for j, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise DimensionMismatch(f"vertex {j} must have exactly {n} coordinates")
        V.append([_strict_number(v, f"vertex {j}") for v in row])
    return Simplex(np.array(V), eps)


def ball_from_dict(d: dict) -> Ball:
    """Parse ``{"center": [...], "radius": number}``."""
    if not isinstance(d, dict) or "center" not in d or "radius" not in d:
        raise ValueError('ball JSON must be an object with keys "center" and "radius"')
    center = d["center"]
    if not isinstance(center, list) or not center:
        raise ValueError('"center" must be a non-empty list')
    c = [_strict_number(v, "center") for v in center]
    return Ball(np.array(c), _strict_number(d["radius"], "radius"))


def simplex_to_dict(S: Simplex) -> dict:
    return {"n": S.n, "vertices": S.vertices.tolist()}


def ball_to_dict(B: Ball) -> dict:
    return {"center": B.center.tolist(), "radius": B.radius}


def load_simplex(path) -> Simplex:
    return simplex_from_dict(json.loads(Path(path).read_text()))


def load_ball(path) -> Ball:
    return ball_from_dict(json.loads(Path(path).read_text()))
