"""Core operator tests: basis stability, moment identities, operator algebra."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stancu_lab import (
    FunctionSpec,
    SampledCurve,
    StancuParams,
    apply_operator,
    apply_operator_curve,
    basis_row,
    bernstein_basis,
    moment_closed_form,
)


def loggamma_basis(n, k, x):
    """Independent slow oracle for a single basis value, in log space."""
    if x == 0.0:
        return 1.0 if k == 0 else 0.0
    if x == 1.0:
        return 1.0 if k == n else 0.0
    return math.exp(
        math.lgamma(n + 1)
        - math.lgamma(k + 1)
        - math.lgamma(n - k + 1)
        + k * math.log(x)
        + (n - k) * math.log1p(-x)
    )


# ---------------------------------------------------------------- basis


def test_basis_degenerate_endpoints_are_exact():
    assert bernstein_basis(5, 0, 0.0) == 1.0
    assert bernstein_basis(5, 5, 1.0) == 1.0
    assert bernstein_basis(5, 3, 0.0) == 0.0
    assert bernstein_basis(5, 2, 1.0) == 0.0
    row = basis_row(7, 0.0)
    assert row[0] == 1.0 and np.all(row[1:] == 0.0)


def test_basis_small_exact_values():
    assert bernstein_basis(2, 1, 0.5) == pytest.approx(0.5, abs=1e-15)
    np.testing.assert_allclose(basis_row(1, 0.3), [0.7, 0.3], atol=1e-15)
    np.testing.assert_allclose(
        basis_row(4, 0.5), np.array([1.0, 4.0, 6.0, 4.0, 1.0]) / 16.0, atol=1e-15
    )


def test_basis_high_degree_matches_log_space_oracle():
    v = bernstein_basis(250, 125, 0.5)
    ref = loggamma_basis(250, 125, 0.5)
    assert abs(v - ref) / ref < 1e-12


def test_basis_row_matches_scalar_entries_exactly():
    for x in (0.0, 0.125, 0.5, 0.77, 1.0):
        row = basis_row(9, x)
        for k in range(10):
            assert row[k] == bernstein_basis(9, k, x)


def test_partition_of_unity_through_degree_1000():
    grid = np.linspace(0.0, 1.0, 1001)
    for n in (1, 10, 100, 250, 1000):
        sums = np.array([basis_row(n, x).sum() for x in grid[:: max(1, n // 10)]])
        assert np.abs(sums - 1.0).max() <= 1e-12


def test_exact_binomial_cross_check_low_degree():
    # production recurrence against exact integer binomial coefficients
    rng = np.random.default_rng(5)
    f = FunctionSpec.builtin("sin15")
    for n in (5, 17, 33, 60):
        for x in rng.uniform(0.01, 0.99, 20):
            row = basis_row(n, float(x))
            ref = np.array(
                [math.comb(n, k) * x**k * (1.0 - x) ** (n - k) for k in range(n + 1)]
            )
            mask = ref > 0.0
            assert (np.abs(row[mask] - ref[mask]) / ref[mask]).max() < 1e-10
        # and the full operator sum built from those exact weights
        p = StancuParams(n, 3.0, 7.0)
        x = float(rng.uniform(0.1, 0.9))
        direct = sum(
            math.comb(n, k) * x**k * (1.0 - x) ** (n - k) * f((k + 3.0) / (n + 7.0))
            for k in range(n + 1)
        )
        got = apply_operator(f, p, x)
        assert abs(got - direct) / abs(direct) < 1e-10


@given(n=st.integers(1, 300), x=st.floats(0.0, 1.0))
@settings(max_examples=120, deadline=None)
def test_basis_nonnegative_and_normalized(n, x):
    row = basis_row(n, x)
    assert (row >= 0.0).all()
    assert abs(row.sum() - 1.0) <= 1e-12


def test_basis_rejects_bad_arguments():
    with pytest.raises(ValueError):
        bernstein_basis(5, -1, 0.5)
    with pytest.raises(ValueError):
        bernstein_basis(5, 6, 0.5)
    with pytest.raises(ValueError):
        bernstein_basis(0, 0, 0.5)
    with pytest.raises(ValueError):
        basis_row(5, 1.5)
    with pytest.raises(ValueError):
        basis_row(5, -0.1)


def test_basis_rejects_underflowing_degree():
    with pytest.raises(ValueError, match="too large"):
        basis_row(2000, 0.5)


# ------------------------------------------------------------- operator


def test_constant_function_maps_to_one():
    e0 = FunctionSpec.builtin("e0")
    rng = np.random.default_rng(0)
    for _ in range(25):
        b = rng.uniform(0.0, 500.0)
        p = StancuParams(int(rng.integers(1, 300)), rng.uniform(0.0, b), b)
        assert abs(apply_operator(e0, p, float(rng.uniform(0, 1))) - 1.0) <= 1e-12


def test_linear_function_fixed_point():
    # alpha - beta * x vanishes at x = 0.5 for (alpha, beta) = (1, 2)
    e1 = FunctionSpec.builtin("e1")
    assert apply_operator(e1, StancuParams(10, 1.0, 2.0), 0.5) == pytest.approx(0.5, abs=1e-12)


def test_interpolation_at_zero_when_alpha_zero():
    f = FunctionSpec.builtin("sin15")
    for beta in (0.0, 2.0, 50.0):
        assert apply_operator(f, StancuParams(12, 0.0, beta), 0.0) == f(0.0)


def test_endpoint_interpolation_identities():
    f = FunctionSpec.builtin("sin15")
    rng = np.random.default_rng(1)
    for _ in range(20):
        b = rng.uniform(0.0, 200.0)
        p = StancuParams(int(rng.integers(1, 200)), rng.uniform(0.0, b), b)
        left = f(p.alpha / (p.n + p.beta))
        right = f((p.n + p.alpha) / (p.n + p.beta))
        assert abs(apply_operator(f, p, 0.0) - left) <= 1e-12
        assert abs(apply_operator(f, p, 1.0) - right) <= 1e-12


def test_shift_zero_reduces_to_plain_operator():
    # zero shifts sample exactly at k/n through the same code path
    f = FunctionSpec.builtin("sin15")
    n = 40
    p = StancuParams(n, 0.0, 0.0)
    np.testing.assert_array_equal(p.node_values(), np.arange(n + 1) / n)
    x = 0.37
    row = basis_row(n, x)
    acc = 0.0
    for k in range(n + 1):
        acc = acc + f(k / n) * row[k]
    assert acc == apply_operator(f, p, x)


@given(
    data=st.data(),
    n=st.integers(1, 60),
    a=st.floats(-3.0, 3.0),
    b=st.floats(-3.0, 3.0),
)
@settings(max_examples=60, deadline=None)
def test_operator_is_linear_in_the_function(data, n, a, b):
    # tabulated specs on a shared abscissa grid combine exactly linearly
    m = data.draw(st.integers(2, 12))
    inner = np.sort(data.draw(st.lists(st.floats(0.01, 0.99), min_size=0, max_size=m)))
    xs = np.concatenate([[0.0], np.unique(inner), [1.0]])
    rng = np.random.default_rng(data.draw(st.integers(0, 2**31)))
    yf = rng.uniform(-5.0, 5.0, xs.size)
    yg = rng.uniform(-5.0, 5.0, xs.size)
    f = FunctionSpec.tabulated("f", xs, yf)
    g = FunctionSpec.tabulated("g", xs, yg)
    comb = FunctionSpec.tabulated("comb", xs, a * yf + b * yg)
    p = StancuParams(n, 1.5, 4.0)
    for x in (0.0, 0.31, 0.9):
        lhs = apply_operator(comb, p, x)
        rhs = a * apply_operator(f, p, x) + b * apply_operator(g, p, x)
        assert abs(lhs - rhs) <= 1e-10


def test_positivity_and_monotonicity():
    xs = np.linspace(0.0, 1.0, 9)
    rng = np.random.default_rng(7)
    yf = rng.uniform(0.0, 4.0, 9)
    f = FunctionSpec.tabulated("f", xs, yf)
    g = FunctionSpec.tabulated("g", xs, yf + rng.uniform(0.0, 2.0, 9))
    p = StancuParams(30, 2.0, 5.0)
    cf = apply_operator_curve(f, p, 101)
    cg = apply_operator_curve(g, p, 101)
    assert (cf.values >= 0.0).all()
    assert (cf.values <= cg.values).all()


def test_curve_is_pointwise_identical_to_scalar_path():
    f = FunctionSpec.builtin("sin15")
    p = StancuParams(50, 20.0, 30.0)
    curve = apply_operator_curve(f, p, 101)
    assert curve.grid[0] == 0.0 and curve.grid[-1] == 1.0
    for i in range(0, 101, 7):
        assert curve.values[i] == apply_operator(f, p, float(curve.grid[i]))


def test_curve_validation():
    f = FunctionSpec.builtin("e0")
    with pytest.raises(ValueError):
        apply_operator_curve(f, StancuParams(3), 1)
    with pytest.raises(ValueError):
        SampledCurve(grid=np.array([0.0, 0.4, 1.0]), values=np.zeros(3))
    with pytest.raises(ValueError):
        SampledCurve(grid=np.array([0.0, 0.5, 0.9]), values=np.zeros(3))
    with pytest.raises(ValueError):
        SampledCurve(grid=np.linspace(0, 1, 5), values=np.zeros(4))


# -------------------------------------------------------------- moments


def test_moment_closed_forms_trivial_cases():
    p = StancuParams(17, 3.0, 9.0)
    assert moment_closed_form(0, p, 0.77) == 1.0
    plain = StancuParams(6)
    for x in (0.0, 0.25, 1.0):
        assert moment_closed_form(1, plain, x) == pytest.approx(x, abs=1e-15)
    assert moment_closed_form(2, StancuParams(4), 0.5) == pytest.approx(0.3125, abs=1e-15)


def test_moments_match_operator_on_random_sweep():
    rng = np.random.default_rng(123)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 501))
        b = rng.uniform(0.0, 1000.0)
        p = StancuParams(n, rng.uniform(0.0, b), b)
        x = float(rng.choice(np.linspace(0.0, 1.0, 101)))
        for i, name in enumerate(("e0", "e1", "e2")):
            got = apply_operator(FunctionSpec.builtin(name), p, x)
            want = moment_closed_form(i, p, x)
            worst = max(worst, abs(got - want))
    assert worst <= 1e-10


def test_moment_rejects_bad_index():
    with pytest.raises(ValueError):
        moment_closed_form(3, StancuParams(4), 0.5)


# ---------------------------------------------------- specs and params


def test_builtin_functions_evaluate():
    assert FunctionSpec.builtin("sin15")(0.5) == pytest.approx(math.sin(7.5), abs=1e-15)
    assert FunctionSpec.builtin("abshalf")(0.1) == pytest.approx(0.4, abs=1e-15)
    assert FunctionSpec.builtin("e2")(0.3) == pytest.approx(0.09, abs=1e-15)
    arr = FunctionSpec.builtin("e0")(np.linspace(0, 1, 5))
    np.testing.assert_array_equal(arr, np.ones(5))


def test_tabulated_interpolates_linearly():
    f = FunctionSpec.tabulated("hat", [0.0, 0.5, 1.0], [0.0, 1.0, 0.0])
    assert f(0.25) == pytest.approx(0.5, abs=1e-15)
    assert f(0.5) == 1.0
    assert f(1.0) == 0.0


def test_function_spec_validation():
    with pytest.raises(ValueError):
        FunctionSpec.builtin("sin16")
    with pytest.raises(ValueError):
        FunctionSpec.tabulated("t", [0.0], [1.0])
    with pytest.raises(ValueError):
        FunctionSpec.tabulated("t", [0.0, 0.4], [1.0, 2.0])  # must end at 1
    with pytest.raises(ValueError):
        FunctionSpec.tabulated("t", [0.1, 1.0], [1.0, 2.0])  # must start at 0
    with pytest.raises(ValueError):
        FunctionSpec.tabulated("t", [0.0, 0.0, 1.0], [1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        FunctionSpec(name="e0", kind="builtin", samples=((0.0, 1.0), (1.0, 1.0)))
    with pytest.raises(ValueError):
        FunctionSpec(name="x", kind="mystery")
    with pytest.raises(ValueError):
        FunctionSpec.builtin("e1")(1.0001)
    with pytest.raises(ValueError):
        FunctionSpec.builtin("e1")(np.array([0.5, -0.2]))


def test_params_validation():
    with pytest.raises(ValueError):
        StancuParams(0)
    with pytest.raises(ValueError):
        StancuParams(3, 2.0, 1.0)
    with pytest.raises(ValueError):
        StancuParams(3, -0.5, 1.0)
    with pytest.raises(ValueError):
        StancuParams(3, 0.0, math.inf)
    with pytest.raises(ValueError):
        StancuParams(2.5, 0.0, 0.0)
