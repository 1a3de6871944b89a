import numpy as np
import pytest
from hypothesis import settings

from simplexnorm.geometry import Ball, Simplex
from simplexnorm.sampling import random_simplex, stream

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def triangle():
    return Simplex([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])


@pytest.fixture
def segment():
    return Simplex([[-1.0], [1.0]])


def random_simplices(n, count, seed=1234, ball=None):
    B = Ball.unit(n) if ball is None else ball
    return [random_simplex(stream(seed, n, t), B) for t in range(count)]


def random_orthogonal(rng, n):
    Q, R = np.linalg.qr(rng.standard_normal((n, n)))
    return Q * np.sign(np.diag(R))
