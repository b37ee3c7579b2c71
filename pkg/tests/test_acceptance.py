"""Acceptance gate: one test per criterion, each printing a PASS line
with the measured quantity at the pinned tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see every line.
"""

import math
import random
import time

import pytest

from betamedian import (
    ONE_THIRD,
    BetaParams,
    GridSpec,
    approx_median,
    beta_mean,
    beta_median_exact,
    beta_mode,
    default_shape_grid,
    gamma_median_exact,
    log_spaced,
    rate_fit,
    reg_inc_beta,
    relative_error_curves,
    tail_probability_grid,
)

FIG_P_VALUES = (0.001, 0.25, 0.35, 0.45, 0.49, 0.499)


@pytest.fixture(scope="module")
def relerr_grid():
    """Six-mean relative-error grid, a log-spaced on [1, 1024] at 25/decade."""
    t0 = time.perf_counter()
    records = relative_error_curves(
        GridSpec(
            p_values=FIG_P_VALUES,
            shape_values=tuple(default_shape_grid(1.0, 1024.0)),
            d_values=(ONE_THIRD,),
        )
    )
    elapsed = time.perf_counter() - t0
    return records, elapsed


@pytest.fixture(scope="module")
def tail_grid():
    shapes = log_spaced(1.0, 64.0, 25)
    means = [0.02 + 0.96 * i / 20 for i in range(21)]
    return tail_probability_grid(shapes, means)


def test_a1_relative_error_below_four_percent(relerr_grid):
    records, elapsed = relerr_grid
    worst = max(abs(r.rel_err) for r in records)
    assert len(records) == 6 * 76
    assert worst < 0.04
    assert elapsed < 10.0
    print(f"\nA1 four-percent bound: PASS (max |rel_err| = {worst:.5f} "
          f"over {len(records)} points, grid runtime {elapsed:.2f}s < 10s)")


def test_a2_relative_error_below_one_percent_from_shape_two(relerr_grid):
    records, _ = relerr_grid
    worst = max(abs(r.rel_err) for r in records if r.a >= 2.0)
    assert worst < 0.01
    print(f"\nA2 one-percent bound (a >= 2): PASS (max |rel_err| = {worst:.5f})")


def test_a3_tail_probability_band(tail_grid):
    assert len(tail_grid) >= 500
    lo = min(r.tail_prob for r in tail_grid)
    hi = max(r.tail_prob for r in tail_grid)
    assert 0.4865 <= lo and hi <= 0.5135
    tight = [r for r in tail_grid if min(r.a, r.b) >= 16.0 * (1.0 - 1e-12)]
    assert tight, "grid must reach the large-shape region"
    worst_tight = max(abs(r.tail_prob - 0.5) for r in tight)
    assert worst_tight < 0.002
    print(f"\nA3 tail band: PASS ({len(tail_grid)} points in [{lo:.5f}, {hi:.5f}] "
          f"within [0.4865, 0.5135]; min-shape>=16 max |tail-0.5| = {worst_tight:.5f} < 0.002)")


def test_a4_convergence_rates():
    fit_third = rate_fit(0.01, 8.0, 4096.0, 10, ONE_THIRD)
    fit_mean = rate_fit(0.01, 8.0, 4096.0, 10, 0.0)
    assert -1.7 <= fit_third.slope <= -1.3
    assert -0.65 <= fit_mean.slope <= -0.35

    a, p = 4096.0, 0.01
    params = BetaParams(a, a * (1.0 - p) / p)
    exact = beta_median_exact(params)
    err_third = abs(approx_median(params, ONE_THIRD) - exact)
    err_nearby = abs(approx_median(params, 0.3) - exact)
    assert err_third < err_nearby
    print(f"\nA4 convergence rates: PASS (slope d=1/3: {fit_third.slope:.4f} in [-1.7,-1.3]; "
          f"slope d=0: {fit_mean.slope:.4f} in [-0.65,-0.35]; "
          f"errors at a=4096: d=1/3 {err_third:.3e} < d=0.3 {err_nearby:.3e})")


def test_a5_exact_cases():
    worst_power = 0.0
    for s in (0.5, 1.0, 2.0, 5.0, 10.0):
        worst_power = max(
            worst_power,
            abs(beta_median_exact(BetaParams(s, 1.0)) - 2.0 ** (-1.0 / s)),
            abs(beta_median_exact(BetaParams(1.0, s)) - (1.0 - 2.0 ** (-1.0 / s))),
        )
    assert worst_power <= 1e-10
    worst_sym = max(
        abs(beta_median_exact(BetaParams(s, s)) - 0.5) for s in (0.5, 1.0, 3.0, 10.0, 100.0)
    )
    assert worst_sym <= 1e-12
    print(f"\nA5 exact cases: PASS (power-law max err {worst_power:.2e} <= 1e-10, "
          f"symmetric max err {worst_sym:.2e} <= 1e-12)")


def test_a6_oracle_integrity():
    rng = random.Random(314159)
    worst_rt = worst_sym = 0.0
    for _ in range(1000):
        a = rng.uniform(0.1, 100.0)
        b = rng.uniform(0.1, 100.0)
        m = beta_median_exact(BetaParams(a, b))
        worst_rt = max(worst_rt, abs(reg_inc_beta(m, a, b) - 0.5))
        worst_sym = max(
            worst_sym, abs(m + beta_median_exact(BetaParams(b, a)) - 1.0)
        )
    assert worst_rt <= 1e-12
    assert worst_sym <= 1e-10

    rng = random.Random(141421)
    worst_ref = 0.0
    for _ in range(1000):
        a = rng.uniform(0.1, 100.0)
        b = rng.uniform(0.1, 100.0)
        x = rng.random()
        worst_ref = max(
            worst_ref, abs(reg_inc_beta(x, a, b) + reg_inc_beta(1.0 - x, b, a) - 1.0)
        )
    assert worst_ref <= 1e-14
    print(f"\nA6 oracle integrity: PASS (round trip {worst_rt:.2e} <= 1e-12, "
          f"symmetry {worst_sym:.2e} <= 1e-10, reflection {worst_ref:.2e} <= 1e-14; "
          f"1000 draws each)")


def test_a7_mode_median_mean_sandwich():
    rng = random.Random(161803)
    count = 0
    for _ in range(1000):
        a = rng.uniform(1.0 + 1e-6, 100.0)
        b = rng.uniform(1.0 + 1e-6, 100.0)
        if a == b:
            continue
        if a > b:
            a, b = b, a
        params = BetaParams(a, b)
        lo = beta_mode(params) - 1e-12
        hi = beta_mean(params) + 1e-12
        assert lo <= beta_median_exact(params) <= hi
        for d in (0.1, ONE_THIRD, 0.9):
            assert lo <= approx_median(params, d) <= hi
        count += 1
    assert count >= 999
    print(f"\nA7 sandwich: PASS (mode <= median <= mean and all three offsets "
          f"inside, {count} random pairs with 1 < a < b < 100)")


def test_a8_gamma_median_asymptote():
    gaps = []
    for a in (1.0, 2.0, 5.0, 10.0, 50.0, 100.0):
        gaps.append((a, abs(gamma_median_exact(a) - (a - ONE_THIRD))))
    assert all(x[1] > y[1] for x, y in zip(gaps, gaps[1:])), "gap must shrink"
    for a, gap in gaps:
        if a >= 10.0:
            assert gap < 0.01
    text = ", ".join(f"a={a:g}: {gap:.5f}" for a, gap in gaps)
    print(f"\nA8 gamma asymptote: PASS (strictly decreasing gaps: {text})")


def test_a9_signed_bias(relerr_grid):
    records, _ = relerr_grid
    worst = max(r.approx - r.exact for r in records)
    assert worst <= 1e-12
    print(f"\nA9 signed bias: PASS (max(approx - exact) = {worst:.3e} <= 1e-12 "
          f"on the A1 grid, every mean < 1/2)")
