"""Acceptance criteria, each run at its stated tolerance.

Every test appends one ``PASS``/``FAIL`` line to the acceptance summary that
is printed at the end of the pytest session, then asserts.
"""
import json
import math
import time

import numpy as np
import pytest

from simplexnorm import (Ball, OptimizeConfig, minimize_norm, norm_ball, norm_oracle,
                         regular_simplex, theta)
from simplexnorm.cli import run
from simplexnorm.extremal import extremal_sweep, y_points

from conftest import ACCEPTANCE_LINES, random_simplices
from table1 import TABLE1


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def test_criterion_1_table():
    t0 = time.perf_counter()
    code, out, _ = run(["table", "--max-n", "15", "--extra", "50,100,1000", "--format", "json"])
    elapsed = time.perf_counter() - t0
    rows = json.loads(out)["result"]["rows"]
    keys = ["n", "a_n", "psi_a", "psi_a1", "k_n", "theta"]
    worst = max(abs(row[k] - ref[i]) for row, ref in zip(rows, TABLE1) for i, k in enumerate(keys))
    ok = (code == 0 and len(rows) == len(TABLE1) and worst <= 1e-9 and elapsed < 1.0)
    assert record(1, "minimal-norm table", ok,
                  f"{len(rows)} rows, max |delta| = {worst:.2e}, {elapsed:.2f} s")


def test_criterion_2_oracle():
    t0 = time.perf_counter()
    worst_low, worst_high, count = 0.0, -np.inf, 0
    for n in (2, 3):
        B = Ball.unit(n)
        for i, S in enumerate(random_simplices(n, 20, seed=2024)):
            exact = norm_ball(S, B).norm
            sampled = norm_oracle(S, B, samples=100_000, seed=i)
            worst_low = max(worst_low, (exact - sampled) / exact)
            worst_high = max(worst_high, sampled - exact)
            count += 1
    elapsed = time.perf_counter() - t0
    ok = worst_low <= 5e-3 and worst_high <= 1e-9 and elapsed < 30
    assert record(2, "closed-form norm vs sampled oracle", ok,
                  f"{count} simplices, max relative shortfall {worst_low:.2e}, "
                  f"max excess {worst_high:.2e}, {elapsed:.1f} s")


def test_criterion_3_extremal_sweep():
    t0 = time.perf_counter()
    worst_norm, worst_ms, worst_fs, count = 0.0, 0.0, 0.0, 0
    for n in range(2, 7):
        for r in extremal_sweep(n, 1000, seed=0):
            worst_norm = max(worst_norm, r.min_norm)
            worst_ms = max(worst_ms, r.mean_square_residual)
            worst_fs = max(worst_fs, r.face_sum_residual)
            count += 1
    elapsed = time.perf_counter() - t0
    ok = worst_norm <= 1 + 1e-9 and worst_ms <= 1e-9 and worst_fs <= 1e-9 and elapsed < 60
    assert record(3, "extremal points of the minimal ellipsoid", ok,
                  f"{count} (trial, m) records, max min ||y_J|| = {worst_norm:.6f}, "
                  f"mean-square residual {worst_ms:.1e}, face-sum residual {worst_fs:.1e}, "
                  f"{elapsed:.1f} s")


def test_criterion_4_regular_norm():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(1, 21):
        center = np.where(np.arange(n) % 2 == 0, 3.0, -1.0)
        for B in (Ball.unit(n), Ball(center, 2.5)):
            worst = max(worst, abs(norm_ball(regular_simplex(n, B), B).norm - theta(n).theta))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed < 10
    assert record(4, "regular simplex attains theta_n", ok,
                  f"n = 1..20, unit and shifted balls, max |delta| = {worst:.2e}, {elapsed:.2f} s")


def test_criterion_5_lower_bound():
    worst, count = np.inf, 0
    for n in range(2, 7):
        th = theta(n).theta
        for S in random_simplices(n, 500, seed=5):
            worst = min(worst, norm_ball(S, Ball.unit(n)).norm - th)
            count += 1
    ok = worst >= -1e-9
    assert record(5, "random simplices never beat theta_n", ok,
                  f"{count} simplices, min (norm - theta) = {worst:.4f}")


@pytest.mark.parametrize("n", [2, 3])
def test_criterion_6_optimizer(n):
    t0 = time.perf_counter()
    r = minimize_norm(OptimizeConfig(n=n, seed=42))
    elapsed = time.perf_counter() - t0
    ins, spread = r.regularity
    ok = r.theta_gap <= 1e-3 and ins <= 1e-2 and spread <= 1e-2 and elapsed < 60
    assert record(6, f"optimizer converges at n={n}", ok,
                  f"gap {r.theta_gap:.1e}, inscribed {ins:.1e}, spread {spread:.1e}, "
                  f"{elapsed:.1f} s")


def test_criterion_7_bounds():
    squares = {k * k - 1 for k in range(2, 33) if k * k - 1 <= 1000}
    bad = []
    for n in range(1, 1001):
        rec = theta(n)
        t = rec.theta
        if not math.sqrt(n) - 1e-9 <= t <= math.sqrt(n + 1) + 1e-9:
            bad.append((n, "range"))
        if (abs(t - math.sqrt(n + 1)) <= 1e-9) != (n in squares):
            bad.append((n, "upper equality"))
        if (abs(t - math.sqrt(n)) <= 1e-9) != (n == 1):
            bad.append((n, "lower equality"))
        if n >= 2 and rec.k_n > n / 2:
            bad.append((n, "k_n"))
    ok = not bad
    assert record(7, "bounds sqrt(n) <= theta_n <= sqrt(n+1)", ok,
                  f"n = 1..1000, {len(squares)} upper-equality cases, violations: {bad[:5]}")


def test_criterion_8_regular_extremal_points():
    worst_r, worst_t, points = 0.0, 0.0, 0
    for n in range(2, 11):
        S = regular_simplex(n)
        rec = theta(n)
        idx, Y = y_points(S, rec.k_n)
        assert len(idx) == math.comb(n + 1, rec.k_n)
        worst_r = max(worst_r, np.max(np.abs(np.linalg.norm(Y, axis=1) - 1.0)))
        worst_t = max(worst_t, np.max(np.abs(np.abs(S.lambdas(Y)).sum(axis=1) - rec.theta)))
        points += len(idx)
    ok = worst_r <= 1e-10 and worst_t <= 1e-9
    assert record(8, "extremal points of the regular simplex", ok,
                  f"{points} points for n = 2..10, max | ||y|| - 1 | = {worst_r:.1e}, "
                  f"max |sum |lambda| - theta| = {worst_t:.1e}")
