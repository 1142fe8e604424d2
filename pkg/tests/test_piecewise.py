import json

import numpy as np
import pytest

from monospline.errors import DomainError
from monospline.piecewise import (
    ParametricCurve,
    PiecewisePolynomial,
    curve_eval,
    poly_shift,
    sample,
    smoothness_report,
)
from monospline.twopoint import TwoPointData, optimal_interpolant


def test_eval_half_parabola():
    pp = PiecewisePolynomial((0.0, 0.5), ((0.0, 0.0, 2.0),))  # 2t^2 on [0, 1/2]
    assert pp.eval(0.5) == pytest.approx(0.5, abs=1e-15)


def test_eval_constant_term_at_left_end():
    pp = PiecewisePolynomial((2.0, 3.0, 4.0), ((1.25, 0.5), (1.75, 0.5)))
    assert pp.eval(2.0) == 1.25


def test_eval_cubic_second_derivative():
    pp = PiecewisePolynomial((0.0, 1.0), ((0.0, 0.0, 0.0, 1.0),))  # t^3
    assert pp.eval(1.0, 2) == pytest.approx(6.0, abs=1e-14)


def test_eval_out_of_domain():
    pp = PiecewisePolynomial.zero(0.0, 1.0)
    with pytest.raises(DomainError):
        pp.eval(1.5)
    with pytest.raises(DomainError):
        pp.eval(-0.1)


def test_eval_right_continuity_at_breakpoints():
    # second derivative jumps at the junction; eval takes the right limit,
    # except at the domain's right end where it takes the left limit
    pp = optimal_interpolant(TwoPointData(0.0, 0.0, 1.0))
    assert pp.eval(0.5, 2) == pytest.approx(-4.0)
    assert pp.eval_onesided(0.5, 2, "left") == pytest.approx(4.0)
    assert pp.eval(1.0, 2) == pytest.approx(-4.0)


def test_invariants_rejected():
    with pytest.raises(DomainError):
        PiecewisePolynomial((0.0, 0.0), ((1.0,),))  # not increasing
    with pytest.raises(DomainError):
        PiecewisePolynomial((0.0, 1.0), ((0.0,) * 7,))  # degree 6
    with pytest.raises(DomainError):
        # value jump at the junction
        PiecewisePolynomial((0.0, 1.0, 2.0), ((0.0, 1.0), (5.0, 1.0)))


def test_sup_abs_deriv2_examples():
    assert optimal_interpolant(TwoPointData(0.0, 0.0, 1.0)).sup_abs_deriv2() == pytest.approx(4.0)
    affine = PiecewisePolynomial((0.0, 2.0), ((1.0, 3.0),))
    assert affine.sup_abs_deriv2() == 0.0
    whitney = PiecewisePolynomial((0.0, 1.0), ((0.0, 0.0, 3.0, -2.0),))  # 3x^2 - 2x^3
    assert whitney.sup_abs_deriv2() == pytest.approx(6.0)


def test_min_deriv1_examples():
    plateau = optimal_interpolant(TwoPointData(1.0, 1.0, 0.25))
    assert plateau.min_deriv1() == pytest.approx(0.0, abs=1e-15)
    line = PiecewisePolynomial((0.0, 1.0), ((0.0, 1.0),))
    assert line.min_deriv1() == 1.0


def test_min_deriv1_interior_minimum():
    # p' = 3t^2 - 3t has its minimum -3/4 at t = 1/2, away from the ends
    pp = PiecewisePolynomial((0.0, 1.0), ((0.0, 0.0, -1.5, 1.0),))
    assert pp.min_deriv1() == pytest.approx(-0.75, abs=1e-14)


def test_smoothness_report_optimal():
    report = smoothness_report(optimal_interpolant(TwoPointData(0.0, 0.0, 1.0)))
    assert report.max_value_jump <= 1e-15
    assert report.max_deriv1_jump <= 1e-15
    assert report.max_deriv2_jump == pytest.approx(8.0)  # -M to +M at t0
    plateau = smoothness_report(optimal_interpolant(TwoPointData(1.0, 1.0, 0.25)))
    assert plateau.max_deriv2_jump == pytest.approx(4.0)  # +-M to 0


def test_smoothness_report_affine():
    report = smoothness_report(PiecewisePolynomial((0.0, 1.0, 2.0), ((0.0, 1.0), (1.0, 1.0))))
    assert report.max_value_jump == 0.0
    assert report.max_deriv1_jump == 0.0
    assert report.max_deriv2_jump == 0.0


def test_derivative_antiderivative_roundtrip():
    pp = optimal_interpolant(TwoPointData(0.7, 0.2, 0.9))
    back = pp.derivative().antiderivative(pp.eval(0.0))
    for t in np.linspace(0.0, 1.0, 37):
        assert back.eval(float(t)) == pytest.approx(pp.eval(float(t)), abs=1e-14)


def test_derivative_finite_difference_agreement():
    rng = np.random.default_rng(4)
    pp = optimal_interpolant(TwoPointData(1.3, 0.4, 0.8))
    h = 1e-6
    checked = 0
    while checked < 100:
        t = float(rng.uniform(2 * h, 1.0 - 2 * h))
        if any(abs(t - bp) < 10 * h for bp in pp.breakpoints):
            continue
        fd = (pp.eval(t + h) - pp.eval(t - h)) / (2 * h)
        assert abs(fd - pp.eval(t, 1)) <= 1e-6 * (1.0 + abs(fd))
        checked += 1


def test_poly_shift_is_exact_taylor_shift():
    rng = np.random.default_rng(8)
    for _ in range(50):
        coeffs = tuple(rng.uniform(-2, 2, 6))
        u0 = float(rng.uniform(-1, 1))
        shifted = poly_shift(coeffs, u0)
        for u in np.linspace(-1, 1, 11):
            direct = sum(c * (u0 + u) ** k for k, c in enumerate(coeffs))
            via = sum(c * u ** k for k, c in enumerate(shifted))
            assert via == pytest.approx(direct, rel=1e-12, abs=1e-12)


def test_restrict_keeps_interior_pieces_bitwise():
    pp = optimal_interpolant(TwoPointData(1.0, 1.0, 0.25))
    cut = pp.restrict(0.25, 1.0)
    assert cut.pieces[0] == pp.pieces[1]  # plateau piece untouched
    assert cut.breakpoints[0] == 0.25
    mid = pp.restrict(0.1, 0.6)
    for t in np.linspace(0.1, 0.6, 21):
        assert mid.eval(float(t)) == pytest.approx(pp.eval(float(t)), abs=1e-15)


def test_affine_map_rescaling():
    pp = optimal_interpolant(TwoPointData(0.0, 2.0, 1.0))
    mapped = pp.affine_map(2.0, 5.0, 2.0, 3.0)  # x = 5 + 2t, y = 3 + 2G
    assert mapped.domain == (5.0, 7.0)
    assert mapped.eval(5.0) == pytest.approx(3.0)
    assert mapped.eval(7.0) == pytest.approx(5.0)
    assert mapped.eval(7.0, 1) == pytest.approx(2.0)  # slopes preserved
    assert mapped.sup_abs_deriv2() == pytest.approx(pp.sup_abs_deriv2() / 2.0)


def test_sample_piecewise():
    pp = optimal_interpolant(TwoPointData(0.0, 0.0, 1.0))
    table = sample(pp, 5)
    assert table.shape == (5, 4)
    row = table[2]
    assert row[0] == pytest.approx(0.5)
    assert row[1] == pytest.approx(0.5)
    assert row[2] == pytest.approx(2.0)
    assert abs(row[3]) == pytest.approx(4.0)
    two = sample(pp, 2)
    assert two[0][0] == 0.0 and two[1][0] == 1.0
    with pytest.raises(DomainError):
        sample(pp, 1)


def test_parametric_curve_invariant():
    with pytest.raises(DomainError):
        # x(t) = t^3 has x'(0) = 0
        ParametricCurve((0.0, 0.0, 0.0, 1.0), (0.0, 0.0, 0.0, 1.0))


def test_curve_eval_spot_values():
    # tangent-intersection construction for slopes (0, 2), gap 1
    curve = ParametricCurve((0.0, 1.5, -1.5, 1.0), (0.0, 0.0, 0.0, 1.0))
    assert curve_eval(curve, 0.5) == pytest.approx(0.125, abs=1e-12)
    assert curve_eval(curve, 0.0) == pytest.approx(0.0, abs=1e-13)
    assert curve_eval(curve, 1.0) == pytest.approx(1.0, rel=1e-13)
    with pytest.raises(DomainError):
        curve_eval(curve, 1.5)


def test_curve_inverse_identity():
    curve = ParametricCurve((0.0, 1.5, -1.5, 1.0), (0.0, 0.0, 0.0, 1.0))
    rng = np.random.default_rng(12)
    from monospline.piecewise import poly_eval

    for _ in range(100):
        t = float(rng.uniform(0, 1))
        assert abs(curve.t_of_x(poly_eval(curve.x_coeffs, t)) - t) <= 1e-10


def test_sample_curve_middle_row():
    curve = ParametricCurve((0.0, 1.5, -1.5, 1.0), (0.0, 0.0, 0.0, 1.0))
    table = sample(curve, 3)
    assert table[1][0] == pytest.approx(0.5)
    assert table[1][3] == pytest.approx(16.0 / 3.0, rel=1e-9)


def test_json_round_trip():
    pp = optimal_interpolant(TwoPointData(1.0, 1.0, 0.25))
    blob = json.dumps(pp.to_json_dict())
    back = PiecewisePolynomial.from_json_dict(json.loads(blob))
    assert back == pp
