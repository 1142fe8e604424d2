import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monospline.errors import DomainError, InfeasibleError
from monospline.twopoint import (
    CurvatureValue,
    INFINITE,
    TwoPointData,
    envelope_integral,
    lower_envelope,
    minimal_curvature,
    minimal_curvature_branch,
    minimal_curvature_float,
    minimal_curvature_oracle,
    minimal_curvature_values,
    optimal_interpolant,
    saturation_threshold,
    upper_envelope,
)

D = TwoPointData

slope = st.floats(min_value=0.0, max_value=5.0, allow_nan=False)
gap = st.floats(min_value=1e-6, max_value=5.0, allow_nan=False)


def test_two_point_data_validation():
    with pytest.raises(DomainError):
        D(-1.0, 0.0, 0.0)
    with pytest.raises(DomainError):
        D(0.0, float("nan"), 0.0)


def test_curvature_value_variant():
    assert INFINITE.is_infinite
    assert float(INFINITE) == math.inf
    assert CurvatureValue(2.0) < INFINITE
    assert CurvatureValue(2.0).scaled(0.5).value == 1.0
    assert INFINITE.scaled(3.0).is_infinite
    with pytest.raises(DomainError):
        CurvatureValue(-1.0)


def test_saturation_threshold_spots():
    assert saturation_threshold(D(1.0, 1.0, 0.0)) == 0.5
    assert saturation_threshold(D(0.0, 0.0, 0.0)) == 0.0  # 0/0 convention
    assert saturation_threshold(D(0.0, 2.0, 0.0)) == 1.0


def test_minimal_curvature_spots():
    assert minimal_curvature(D(0.0, 0.0, 0.0)).value == 0.0
    assert minimal_curvature(D(1.0, 2.0, 0.0)).is_infinite
    assert minimal_curvature(D(1.0, 1.0, 0.5)).value == pytest.approx(2.0)
    assert minimal_curvature(D(0.0, 0.0, 1.0)).value == pytest.approx(4.0)
    assert minimal_curvature(D(1.0, 1.0, 0.25)).value == pytest.approx(4.0)


def test_minimal_curvature_branch_names():
    assert minimal_curvature_branch(D(0.0, 0.0, 0.0))[1] == "zero"
    assert minimal_curvature_branch(D(1.0, 2.0, 0.0))[1] == "infeasible"
    assert minimal_curvature_branch(D(1.0, 1.0, 0.25))[1] == "plateau c<c0"
    assert minimal_curvature_branch(D(1.0, 1.0, 0.5))[1] == "boundary c=c0"
    assert minimal_curvature_branch(D(1.0, 1.0, 2.0))[1] == "tent c>c0"


def test_branch_agreement_at_threshold():
    # both branch formulas must agree at c = c0 (value a + b)
    rng = np.random.default_rng(2)
    for _ in range(200):
        a, b = rng.uniform(0.01, 5.0, 2)
        c0 = saturation_threshold(D(a, b, 0.0))
        value = minimal_curvature(D(a, b, c0)).value
        assert value == pytest.approx(a + b, rel=1e-12)
        plateau_side = (a * a + b * b) / (2.0 * c0)
        assert value == pytest.approx(plateau_side, rel=1e-12)


@settings(max_examples=150, deadline=None)
@given(a=slope, b=slope, c=gap, lam=st.sampled_from([0.5, 2.0, 10.0]))
def test_homogeneity(a, b, c, lam):
    base = minimal_curvature(D(a, b, c)).value
    scaled = minimal_curvature(D(lam * a, lam * b, lam * c)).value
    assert scaled == pytest.approx(lam * base, rel=1e-12, abs=1e-12)


@settings(max_examples=150, deadline=None)
@given(a=slope, b=slope, c=gap)
def test_symmetry_exact(a, b, c):
    assert minimal_curvature(D(a, b, c)) == minimal_curvature(D(b, a, c))


@settings(max_examples=150, deadline=None)
@given(a=slope, b=slope, c=gap)
def test_midpoint_gap_is_minimum(a, b, c):
    spread = abs(b - a)
    mid = minimal_curvature(D(a, b, 0.5 * (a + b))).value
    assert mid == pytest.approx(spread, rel=1e-12, abs=1e-12)
    assert minimal_curvature(D(a, b, c)).value >= spread - 1e-12 * (1.0 + spread)


def test_vectorised_matches_scalar():
    rng = np.random.default_rng(3)
    a = rng.uniform(0, 5, 500)
    b = rng.uniform(0, 5, 500)
    c = rng.uniform(0, 5, 500)
    c[:10] = 0.0
    values = minimal_curvature_values(a, b, c)
    for i in range(500):
        assert values[i] == minimal_curvature_float(a[i], b[i], c[i])
        ref = minimal_curvature(D(a[i], b[i], c[i]))
        assert values[i] == ref.as_float()


def test_lower_envelope_three_pieces():
    profile = lower_envelope(D(1.0, 1.0, 0.0), 4.0)
    assert profile.breakpoints == (0.0, 0.25, 0.75, 1.0)
    assert profile.poly.pieces == ((1.0, -4.0), (0.0,), (0.0, 4.0))
    assert profile(0.0) == 1.0 and profile(1.0) == 1.0


def test_lower_envelope_zero_data():
    profile = lower_envelope(D(0.0, 0.0, 0.0), 3.0)
    assert all(len(p) == 1 and p[0] == 0.0 for p in profile.poly.pieces)


def test_lower_envelope_tent_touching_zero():
    profile = lower_envelope(D(1.0, 1.0, 0.0), 2.0)
    assert profile.breakpoints == (0.0, 0.5, 1.0)
    assert profile(0.5) == pytest.approx(0.0, abs=1e-15)


def test_lower_envelope_infeasible_bound():
    with pytest.raises(InfeasibleError):
        lower_envelope(D(0.0, 2.0, 0.0), 1.0)


def test_upper_envelope_tent():
    profile = upper_envelope(D(0.0, 0.0, 0.0), 4.0)
    assert profile.breakpoints == (0.0, 0.5, 1.0)
    assert profile(0.5) == pytest.approx(2.0)
    peak = upper_envelope(D(2.0, 2.0, 0.0), 2.0)
    assert peak(0.5) == pytest.approx(3.0)


def test_upper_envelope_degenerate_single_line():
    profile = upper_envelope(D(0.0, 2.0, 0.0), 2.0)
    assert len(profile.poly.pieces) == 1
    assert profile(0.25) == pytest.approx(0.5)


def test_envelope_integral_spots():
    assert envelope_integral(lower_envelope(D(1.0, 1.0, 0.0), 4.0)) == pytest.approx(0.25)
    assert envelope_integral(lower_envelope(D(1.0, 1.0, 0.0), 2.0)) == pytest.approx(0.5)
    zero = lower_envelope(D(0.0, 0.0, 0.0), 1.0)
    assert envelope_integral(zero) == 0.0


def test_envelope_integral_matches_closed_forms():
    rng = np.random.default_rng(9)
    for _ in range(100):
        a, b = rng.uniform(0, 4, 2)
        spread = abs(b - a)
        M = rng.uniform(max(spread, 1e-3), a + b + 1.0)
        lower = envelope_integral(lower_envelope(D(a, b, 0.0), M))
        if M >= a + b:
            assert lower == pytest.approx((a * a + b * b) / (2 * M), rel=1e-12)
        else:
            expected = 0.5 * (a + b) - M / 4.0 + (b - a) ** 2 / (4.0 * M)
            assert lower == pytest.approx(expected, rel=1e-11, abs=1e-13)
        upper = envelope_integral(upper_envelope(D(a, b, 0.0), M))
        assert upper == pytest.approx(
            0.5 * (a + b) + M / 4.0 - (b - a) ** 2 / (4.0 * M), rel=1e-11, abs=1e-13
        )


def test_optimal_interpolant_rising_case():
    pp = optimal_interpolant(D(0.0, 0.0, 1.0))
    assert pp.breakpoints == (0.0, 0.5, 1.0)
    assert pp.pieces[0] == (0.0, 0.0, 2.0)  # 2t^2
    # second piece expands to -2t^2 + 4t - 1
    c0, c1, c2 = pp.pieces[1]
    assert (c0, c1, c2) == pytest.approx((0.5, 2.0, -2.0))


def test_optimal_interpolant_plateau_case():
    pp = optimal_interpolant(D(1.0, 1.0, 0.25))
    assert pp.breakpoints == pytest.approx((0.0, 0.25, 0.75, 1.0))
    assert pp.pieces[0] == pytest.approx((0.0, 1.0, -2.0))  # t - 2t^2
    assert pp.pieces[1] == pytest.approx((0.125,))
    assert pp.eval(1.0) == pytest.approx(0.25)
    assert pp.eval(1.0, 1) == pytest.approx(1.0)


def test_optimal_interpolant_zero_and_infeasible():
    assert optimal_interpolant(D(0.0, 0.0, 0.0)).pieces == ((0.0,),)
    with pytest.raises(InfeasibleError):
        optimal_interpolant(D(1.0, 0.0, 0.0))


def test_optimal_interpolant_degenerate_affine():
    pp = optimal_interpolant(D(1.0, 1.0, 1.0))
    assert pp.sup_abs_deriv2() == 0.0
    assert pp.eval(0.7) == pytest.approx(0.7)


def test_optimal_interpolant_single_piece_at_half_sum():
    # c = (a+b)/2 with b > a: junction collapses to the left end
    pp = optimal_interpolant(D(0.0, 2.0, 1.0))
    assert pp.eval(0.0, 1) == pytest.approx(0.0, abs=1e-14)
    assert pp.eval(1.0, 1) == pytest.approx(2.0)
    assert pp.sup_abs_deriv2() == pytest.approx(2.0)


def test_optimality_attainment_random():
    rng = np.random.default_rng(10)
    for _ in range(300):
        a, b = rng.uniform(0, 5, 2)
        c = float(rng.uniform(1e-6, 5))
        data = D(a, b, c)
        pp = optimal_interpolant(data)
        m = minimal_curvature(data).value
        assert pp.sup_abs_deriv2() == pytest.approx(m, rel=1e-12)
        assert pp.min_deriv1() >= -1e-12 * (1.0 + a + b)
        assert pp.eval(0.0) == 0.0
        assert abs(pp.eval(1.0) - c) <= 1e-12 * (1.0 + c)
        assert pp.eval(0.0, 1) == pytest.approx(a, abs=1e-12 * (1 + a + b))
        assert abs(pp.eval(1.0, 1) - b) <= 1e-12 * (1.0 + a + b)


def test_envelope_sandwich():
    rng = np.random.default_rng(11)
    ts = np.linspace(0.0, 1.0, 1000)
    for _ in range(50):
        a, b = rng.uniform(0, 4, 2)
        c = float(rng.uniform(1e-3, 4))
        data = D(a, b, c)
        m = minimal_curvature(data).value
        velocity = optimal_interpolant(data).derivative()
        lower = lower_envelope(data, m)
        upper = upper_envelope(data, m)
        slack = 1e-10 * (1.0 + a + b + m)
        for t in ts:
            t = float(t)
            v = velocity.eval(t)
            assert v >= lower(t) - slack
            assert v <= upper(t) + slack


def test_oracle_spots():
    assert minimal_curvature_oracle(D(0.0, 0.0, 1.0), 1000).value == pytest.approx(4.0, abs=0.01)
    assert minimal_curvature_oracle(D(1.0, 1.0, 0.5), 1000).value == pytest.approx(2.0, abs=0.01)
    assert minimal_curvature_oracle(D(1.0, 1.0, 0.25), 1000).value == pytest.approx(4.0, abs=0.02)
    assert minimal_curvature_oracle(D(1.0, 2.0, 0.0), 1000).is_infinite
    assert minimal_curvature_oracle(D(0.0, 0.0, 0.0), 1000).value == 0.0


def test_oracle_needs_enough_grid():
    with pytest.raises(DomainError):
        minimal_curvature_oracle(D(0.0, 0.0, 1.0), 50)


def test_oracle_brackets_beyond_initial_bound():
    # deep plateau regime: the minimal curvature exceeds a+b+4c+1
    data = D(1.0, 1.0, 0.001)
    exact = minimal_curvature(data).value  # 1000
    got = minimal_curvature_oracle(data, 2000).value
    assert got == pytest.approx(exact, rel=0.02)
