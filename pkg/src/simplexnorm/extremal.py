"""Face centroids, the minimal ellipsoid of a simplex and its extremal points.

For a vertex subset ``J`` of size ``m`` (``1 <= m <= n``) let ``g_J`` be the
centroid of the face spanned by ``J`` and ``h_J`` the centroid of the
complementary face.  The line through ``g_J`` and ``h_J`` passes through the
simplex centroid ``c`` and meets the boundary of the minimal-volume
enclosing ellipsoid beyond ``h_J`` at

    y_J = c + (c - g_J) / r,    r = sqrt(m - m(m-1)/n) / m.

Among the ``C(n+1, m)`` points ``y_J`` the mean of ``||y_J||**2`` equals the
mean of ``||x_j||**2``, so for a simplex inside a ball some ``y_J`` lies in
that ball.

Subsets are tuples of 0-based vertex indices, enumerated lexicographically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import DomainError, IndexOutOfRange, NodesOutsideBall
from .geometry import MEMBERSHIP_TOL, Ball, Ellipsoid, Simplex, centroid
from .regular import regular_vertices


@dataclass(frozen=True)
class FaceSelection:
    """Sorted tuple of distinct 0-based vertex indices, ``1 <= m <= n``."""

    indices: tuple
    n: int

    def __post_init__(self):
        idx = tuple(sorted(int(i) for i in self.indices))
        if len(set(idx)) != len(idx):
            raise IndexOutOfRange(f"repeated vertex index in {self.indices}")
        if not 1 <= len(idx) <= self.n:
            raise IndexOutOfRange(f"face size {len(idx)} outside [1, {self.n}]")
        if idx[0] < 0 or idx[-1] > self.n:
            raise IndexOutOfRange(f"vertex index outside [0, {self.n}] in {self.indices}")
        object.__setattr__(self, "indices", idx)

    @property
    def m(self) -> int:
        return len(self.indices)

    def complement(self) -> tuple:
        return tuple(j for j in range(self.n + 1) if j not in self.indices)


@dataclass(frozen=True)
class ExtremalPoint:
    J: tuple
    y: np.ndarray
    norm: float


@dataclass(frozen=True)
class ExtremalReport:
    m: int
    points: list
    min_norm: float
    mean_square: float
    witness: tuple


def _check_m(n, m):
    if isinstance(m, bool) or int(m) != m or not 1 <= m <= n:
        raise DomainError(f"m = {m!r} outside [1, {n}]")
    return int(m)


def ratio_r(n: int, m: int) -> float:
    """Centroid-to-face-centroid distance over circumradius for a regular simplex."""
    m = _check_m(n, m)
    return math.sqrt(m - m * (m - 1) / n) / m


@lru_cache(maxsize=None)
def subsets(n: int, m: int) -> np.ndarray:
    """All ``m``-subsets of ``range(n+1)`` as rows, lexicographic."""
    out = np.array(list(combinations(range(n + 1), m)), dtype=np.intp).reshape(-1, m)
    out.setflags(write=False)
    return out


def _selection(S, J):
    return J if isinstance(J, FaceSelection) else FaceSelection(tuple(J), S.n)


def face_centroid(S: Simplex, J) -> np.ndarray:
    J = _selection(S, J)
    return S.vertices[list(J.indices)].mean(axis=0)


def complementary_centroid(S: Simplex, J) -> np.ndarray:
    J = _selection(S, J)
    return S.vertices[list(J.complement())].mean(axis=0)


def y_point(S: Simplex, J) -> np.ndarray:
    J = _selection(S, J)
    c = centroid(S)
    return c + (c - face_centroid(S, J)) / ratio_r(S.n, J.m)


def y_points(S: Simplex, m: int) -> tuple[np.ndarray, np.ndarray]:
    """``(subsets, Y)`` with ``Y[i] = y_J`` for ``J = subsets[i]``."""
    m = _check_m(S.n, m)
    idx = subsets(S.n, m)
    c = centroid(S)
    G = S.vertices[idx].mean(axis=1)
    return idx, c + (c - G) / ratio_r(S.n, m)


def minimal_ellipsoid(S: Simplex) -> Ellipsoid:
    """Minimum-volume ellipsoid containing ``S``.

    It is the image of the unit ball under the affine map that sends the
    regular simplex inscribed in the unit sphere onto ``S`` (vertex ``j`` to
    vertex ``j``).  With ``U`` the regular vertices, ``U^T U = (n+1)/n I``,
    so the linear part is ``n/(n+1) (X - c)^T U``.
    """
    n = S.n
    U = regular_vertices(n)
    c = centroid(S)
    M = (n / (n + 1)) * (S.vertices - c).T @ U
    return Ellipsoid(c, M)


def mean_square_identity(S: Simplex, m: int) -> tuple[float, float]:
    """``(mean_J ||y_J||^2, mean_j ||x_j||^2)``; the two agree for every simplex."""
    _, Y = y_points(S, m)
    lhs = float(np.mean(np.einsum("ij,ij->i", Y, Y)))
    rhs = float(np.mean(np.einsum("ij,ij->i", S.vertices, S.vertices)))
    return lhs, rhs


def face_sum_identity(S: Simplex, m: int) -> tuple[float, float]:
    """``sum_J ||g_J||^2`` by direct summation, and by the closed form

    ``C(n, m)/(m n) * sum_j ||x_j||^2 + (m-1)(n+1)/(m n) * C(n+1, m) * ||c||^2``.
    """
    n = S.n
    m = _check_m(n, m)
    G = S.vertices[subsets(n, m)].mean(axis=1)
    lhs = float(np.sum(G * G))
    c = centroid(S)
    rhs = (math.comb(n, m) / (m * n) * float(np.sum(S.vertices ** 2))
           + (m - 1) * (n + 1) / (m * n) * math.comb(n + 1, m) * float(c @ c))
    return lhs, rhs


def relative_residual(pair) -> float:
    lhs, rhs = pair
    return abs(lhs - rhs) / (1.0 + abs(rhs))


def verify_theorem1(S: Simplex, B: Ball, m: int,
                    tol: float = MEMBERSHIP_TOL) -> ExtremalReport:
    """Extremal points ``y_J`` for all ``m``-subsets, with distances to the ball center.

    ``min_norm <= R`` whenever every vertex of ``S`` lies in ``B``; ``witness``
    is the first subset (lexicographically) attaining ``min_norm``.
    """
    if B.n != S.n:
        raise DomainError(f"ball dimension {B.n} != simplex dimension {S.n}")
    dist = np.linalg.norm(S.vertices - B.center, axis=1)
    if np.any(dist > B.radius + tol):
        j = int(np.argmax(dist))
        raise NodesOutsideBall(f"vertex {j} at distance {dist[j]:.6g} > R = {B.radius:g}")
    idx, Y = y_points(S, m)
    D = Y - B.center
    norms = np.sqrt(np.einsum("ij,ij->i", D, D))
    points = [ExtremalPoint(tuple(int(i) for i in J), y, float(r))
              for J, y, r in zip(idx, Y, norms)]
    w = int(np.argmin(norms))
    return ExtremalReport(m=int(m), points=points, min_norm=float(norms[w]),
                          mean_square=float(np.mean(norms ** 2)), witness=points[w].J)


def collinearity_residuals(S: Simplex, J) -> tuple[float, float]:
    """Self-check of the ``y_J`` construction.

    Returns ``(angle between y_J - c and c - g_J, ||h_J - h_formula||)`` where
    ``h_formula = c + m/(n+1-m) (c - g_J)``; both vanish for a correct ``y_J``.
    """
    J = _selection(S, J)
    c = centroid(S)
    g = face_centroid(S, J)
    y = y_point(S, J)
    u = (y - c) / np.linalg.norm(y - c)
    w = (c - g) / np.linalg.norm(c - g)
    angle = 2.0 * math.atan2(np.linalg.norm(u - w), np.linalg.norm(u + w))
    h = complementary_centroid(S, J)
    h_formula = c + J.m / (S.n + 1 - J.m) * (c - g)
    return angle, float(np.linalg.norm(h - h_formula))


@dataclass(frozen=True)
class SweepRecord:
    trial: int
    m: int
    min_norm: float
    witness: tuple
    mean_square_residual: float
    face_sum_residual: float


def extremal_sweep(n: int, trials: int, ms=None, seed: int = 0,
                   workers: int | None = None) -> list[SweepRecord]:
    """Random simplices in the unit ball, one record per ``(trial, m)``.

    Trial ``t`` draws its simplex from the stream keyed by ``(seed, t)``, so a
    record does not depend on which other trials were run.
    """
    from .sampling import random_simplex, stream

    ms = range(1, n + 1) if ms is None else [_check_m(n, m) for m in ms]
    B = Ball.unit(n)

    def one(t):
        S = random_simplex(stream(seed, t), B)
        recs = []
        for m in ms:
            rep = verify_theorem1(S, B, m)
            recs.append(SweepRecord(
                trial=t, m=m, min_norm=rep.min_norm, witness=rep.witness,
                mean_square_residual=relative_residual(mean_square_identity(S, m)),
                face_sum_residual=relative_residual(face_sum_identity(S, m))))
        return recs

    if workers and workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(one, range(trials)))
    else:
        chunks = [one(t) for t in range(trials)]
    return [r for c in chunks for r in c]
