import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from simplexnorm import (Ball, DegenerateSimplex, DimensionMismatch, Ellipsoid, Simplex,
                         centroid, contains, lagrange_coefficients, vertex_matrix)
from simplexnorm.geometry import (ball_from_dict, circumball, degeneracy_measure,
                                  simplex_from_dict, simplex_to_dict)
from simplexnorm.regular import regular_simplex
from simplexnorm.sampling import stream

from conftest import random_simplices


def test_vertex_matrix_triangle(triangle):
    np.testing.assert_array_equal(vertex_matrix(triangle.vertices),
                                  [[0, 0, 1], [1, 0, 1], [0, 1, 1]])


def test_vertex_matrix_segment(segment):
    np.testing.assert_array_equal(segment.matrix, [[-1, 1], [1, 1]])


def test_vertex_matrix_last_column_ones():
    for S in random_simplices(4, 5):
        assert np.all(S.matrix[:, -1] == 1.0)


def test_lagrange_triangle(triangle):
    L = lagrange_coefficients(triangle)
    # lambda_1 = 1 - x1 - x2, lambda_2 = x1, lambda_3 = x2
    np.testing.assert_allclose(L, [[-1, 1, 0], [-1, 0, 1], [1, 0, 0]], atol=1e-12)


def test_lagrange_segment(segment):
    for x in (-1.0, -0.3, 0.0, 0.7, 2.0):
        np.testing.assert_allclose(segment.lambdas([x]), [(1 - x) / 2, (1 + x) / 2], atol=1e-12)


def test_lagrange_inverse_residual():
    S = random_simplices(3, 1, seed=7)[0]
    np.testing.assert_allclose(S.matrix @ lagrange_coefficients(S), np.eye(4), atol=1e-10)


def test_lagrange_returns_copy(triangle):
    L = lagrange_coefficients(triangle)
    L[0, 0] = 99.0
    assert triangle.inverse[0, 0] == -1.0


def test_simplex_is_immutable(triangle):
    with pytest.raises(ValueError):
        triangle.vertices[0, 0] = 5.0


@pytest.mark.parametrize("verts", [
    [[0, 0], [1, 1], [2, 2]],
    [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]],
    [[3.0], [3.0]],
])
def test_degenerate_rejected(verts):
    with pytest.raises(DegenerateSimplex) as exc:
        Simplex(verts)
    assert "det" in str(exc.value)


def test_degeneracy_scale_invariant():
    S = random_simplices(3, 1)[0]
    V = S.vertices
    assert degeneracy_measure(V) > 1e-6
    # tiny but perfectly shaped simplex is still accepted in relative terms
    # only when its det clears the threshold; a 1e-6 scaling drops det by 1e-18
    with pytest.raises(DegenerateSimplex):
        Simplex(V * 1e-6)


def test_wrong_vertex_count():
    with pytest.raises(DimensionMismatch):
        Simplex([[0, 0], [1, 0]])


def test_centroid(triangle, segment):
    np.testing.assert_allclose(centroid(triangle), [1 / 3, 1 / 3])
    np.testing.assert_allclose(centroid(segment), [0.0])
    for n in (2, 5, 9):
        np.testing.assert_allclose(centroid(regular_simplex(n)), np.zeros(n), atol=1e-12)


def test_contains():
    B = Ball.unit(2)
    assert contains(B, [1.0, 0.0], tol=0)
    assert not contains(B, [1.1, 0.0], tol=0)
    assert contains(B, [1 + 5e-10, 0.0], tol=1e-9)
    with pytest.raises(DimensionMismatch):
        contains(B, [0.0, 0.0, 0.0])


def test_ball_rejects_bad_radius():
    with pytest.raises(ValueError):
        Ball([0.0], 0.0)
    with pytest.raises(ValueError):
        Ball([0.0], -1.0)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_partition_of_unity_and_reconstruction(n):
    rng = stream(99, n)
    for S in random_simplices(n, 5, seed=3):
        X = rng.uniform(-2, 2, size=(100, n))
        lam = S.lambdas(X)
        np.testing.assert_allclose(lam.sum(axis=1), 1.0, atol=1e-10)
        np.testing.assert_allclose(lam @ S.vertices, X, atol=1e-10)


@pytest.mark.parametrize("n", [1, 2, 4, 7])
def test_kronecker_at_vertices_and_column_sums(n):
    for S in random_simplices(n, 5, seed=5):
        np.testing.assert_allclose(S.lambdas(S.vertices), np.eye(n + 1), atol=1e-10)
        L = S.inverse
        np.testing.assert_allclose(L[:n].sum(axis=1), 0.0, atol=1e-10)
        assert abs(L[n].sum() - 1.0) <= 1e-10


@given(st.lists(st.floats(-3, 3), min_size=6, max_size=6), st.floats(-2, 2), st.floats(-2, 2))
def test_barycentric_properties_hypothesis(coords, px, py):
    V = np.array(coords).reshape(3, 2)
    try:
        S = Simplex(V, eps=1e-6)
    except DegenerateSimplex:
        return
    lam = S.lambdas([px, py])
    scale = 1.0 + np.abs(lam).sum()
    assert abs(lam.sum() - 1.0) <= 1e-10 * scale
    np.testing.assert_allclose(lam @ V, [px, py], atol=1e-9 * scale)


def test_ellipsoid_round_trip():
    rng = stream(11)
    for n in (2, 3, 5):
        A = rng.standard_normal((n, n)) + 2 * np.eye(n)
        c = rng.standard_normal(n)
        E = Ellipsoid(c, A)
        shrunk = Ellipsoid(c, A * (1 - 1e-6))
        for _ in range(50):
            u = rng.standard_normal(n)
            u /= np.linalg.norm(u)
            x = c + A @ u
            assert E.contains(x, tol=1e-10)
            assert abs(E.gauge(x) - 1.0) <= 1e-10
            assert not shrunk.contains(x, tol=1e-10)


def test_ellipsoid_boundary_point():
    E = Ellipsoid([1.0, 2.0], np.diag([2.0, 1.0]))
    np.testing.assert_allclose(E.boundary_point([3.0, 0.0]), [3.0, 2.0])
    np.testing.assert_allclose(E.semi_axes(), [2.0, 1.0])


def test_circumball(triangle):
    B = circumball(triangle)
    np.testing.assert_allclose(B.center, [0.5, 0.5])
    assert abs(B.radius - np.sqrt(0.5)) < 1e-12


def test_json_round_trip():
    S = random_simplices(3, 1)[0]
    S2 = simplex_from_dict(json.loads(json.dumps(simplex_to_dict(S))))
    np.testing.assert_array_equal(S.vertices, S2.vertices)


@pytest.mark.parametrize("doc", [
    {"n": 2, "vertices": [[0, 0], [1, 0]]},
    {"n": 2, "vertices": [[0, 0], [1, 0], [0, 1, 2]]},
    {"n": 2, "vertices": [[0, 0], [1, 0], [0]]},
])
def test_json_strict_counts(doc):
    with pytest.raises(DimensionMismatch):
        simplex_from_dict(doc)


@pytest.mark.parametrize("doc", [
    {"vertices": [[0], [1]]},
    {"n": "1", "vertices": [[0], [1]]},
    {"n": 1, "vertices": [["a"], [1]]},
    {"n": 1, "vertices": [[True], [1]]},
])
def test_json_malformed(doc):
    with pytest.raises(ValueError):
        simplex_from_dict(doc)


def test_ball_json():
    B = ball_from_dict({"center": [3, -1], "radius": 2.5})
    np.testing.assert_array_equal(B.center, [3.0, -1.0])
    assert B.radius == 2.5
    with pytest.raises(ValueError):
        ball_from_dict({"center": [0.0]})


def test_degeneracy_translation_invariant():
    S = regular_simplex(20)
    far = S.transformed(b=np.full(20, 1e3))
    assert degeneracy_measure(far.vertices) == pytest.approx(degeneracy_measure(S.vertices))
