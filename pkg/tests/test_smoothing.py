import numpy as np
import pytest

from monospline.errors import (
    ConfigError,
    FlatNodeError,
    InfeasibleError,
    JetMismatchError,
)
from monospline.piecewise import PiecewisePolynomial
from monospline.smoothing import (
    Corner,
    JetTriple,
    KAPPA_PATCH,
    MollifyConfig,
    c2_patch,
    corner_set,
    mollify_c2,
)
from monospline.twopoint import (
    TwoPointData,
    lower_envelope,
    minimal_curvature,
    optimal_interpolant,
    upper_envelope,
)

D = TwoPointData


def test_corner_set_examples():
    lower = corner_set(lower_envelope(D(1.0, 1.0, 0.0), 4.0))
    assert lower == (Corner(0.25, -4.0, 0.0), Corner(0.75, 0.0, 4.0))
    assert corner_set(upper_envelope(D(0.0, 0.0, 0.0), 4.0)) == (Corner(0.5, 4.0, -4.0),)
    affine = lower_envelope(D(0.0, 2.0, 0.0), 2.0)
    assert corner_set(affine) == ()


def test_mollify_plateau_case():
    data = D(1.0, 1.0, 0.25)
    pp = mollify_c2(data)
    report = pp.smoothness_report()
    assert report.max_deriv2_jump <= 1e-9
    assert report.max_deriv1_jump <= 1e-12
    assert report.sup_abs_deriv2 <= 1.2 * 4.0 + 1e-9
    assert report.min_deriv1 >= -1e-12
    assert pp.eval(1.0) == pytest.approx(0.25, abs=1e-13)
    assert pp.eval(0.0, 1) == pytest.approx(1.0)
    assert pp.eval(1.0, 1) == pytest.approx(1.0)
    # both corners spliced: breakpoints appear around 1/4 and 3/4
    assert any(abs(bp - 0.25) < 0.1 for bp in pp.breakpoints)
    assert any(abs(bp - 0.75) < 0.1 for bp in pp.breakpoints)


def test_mollify_two_sided_corner():
    # velocity is a tent touching zero at 1/2: one two-sided corner
    data = D(1.0, 1.0, 0.5)
    corners = corner_set(lower_envelope(data, 2.0))
    assert corners == (Corner(0.5, -2.0, 2.0),)
    pp = mollify_c2(data)
    report = pp.smoothness_report()
    assert report.max_deriv2_jump <= 1e-9
    assert report.sup_abs_deriv2 <= 1.2 * 2.0 + 1e-9
    assert report.min_deriv1 >= -1e-12


def test_mollify_zero_and_infeasible():
    assert mollify_c2(D(0.0, 0.0, 0.0)).pieces == ((0.0,),)
    with pytest.raises(InfeasibleError):
        mollify_c2(D(1.0, 0.0, 0.0))


def test_mollify_explicit_delta_validation():
    data = D(1.0, 1.0, 0.25)
    pp = mollify_c2(data, MollifyConfig(delta=1.0 / 128.0))
    assert pp.smoothness_report().max_deriv2_jump <= 1e-9
    with pytest.raises(ConfigError):
        mollify_c2(data, MollifyConfig(delta=0.2))  # violates the window caps
    with pytest.raises(ConfigError):
        mollify_c2(data, MollifyConfig(delta=0.0))


def test_mollify_excess_closed_form():
    # one-sided corners add M delta^2 / 6 of mass each before correction
    data = D(1.0, 1.0, 0.25)
    M = minimal_curvature(data).value
    delta = 1.0 / 64.0
    profile = lower_envelope(data, M)
    corners = corner_set(profile)
    total = sum((sp - sm) * delta * delta / 6.0 for _, sm, sp in corners)
    assert total == pytest.approx(2 * M * delta * delta / 6.0)
    assert 0.0 <= total <= M * delta * delta / 3.0 + 1e-15
    # two-sided corner doubles the coefficient
    data2 = D(1.0, 1.0, 0.5)
    corners2 = corner_set(lower_envelope(data2, 2.0))
    total2 = sum((sp - sm) * delta * delta / 6.0 for _, sm, sp in corners2)
    assert total2 == pytest.approx(2.0 * delta * delta / 3.0)


def test_mollify_splice_tangency():
    data = D(1.4, 0.6, 0.4)
    M = minimal_curvature(data).value
    profile = lower_envelope(data, M)
    delta = 1e-3
    for tau, s_minus, s_plus in corner_set(profile):
        q = (profile(tau - delta), s_minus, (s_plus - s_minus) / (4 * delta))
        from monospline.piecewise import poly_eval

        assert poly_eval(q, 0.0) == profile(tau - delta)
        assert poly_eval(q, 0.0, 1) == s_minus
        assert poly_eval(q, 2 * delta) == pytest.approx(profile(tau + delta), abs=1e-12)
        assert poly_eval(q, 2 * delta, 1) == pytest.approx(s_plus, abs=1e-12)
        # splice dominates the envelope
        for t in np.linspace(tau - delta, tau + delta, 101):
            assert poly_eval(q, float(t) - (tau - delta)) >= profile(float(t)) - 1e-12


def test_mollify_b_zero_relocates_window():
    data = D(1.0, 0.0, 0.3)
    pp = mollify_c2(data)
    report = pp.smoothness_report()
    m = minimal_curvature(data).value
    assert report.max_deriv2_jump <= 1e-9
    assert report.sup_abs_deriv2 <= 1.2 * m + 1e-9
    assert report.min_deriv1 >= -1e-12
    assert pp.eval(1.0) == pytest.approx(0.3, abs=1e-13)
    assert pp.eval(1.0, 1) == pytest.approx(0.0, abs=1e-13)


def test_mollify_upper_case_adds_mass():
    data = D(0.5, 1.0, 3.0)
    pp = mollify_c2(data)
    report = pp.smoothness_report()
    m = minimal_curvature(data).value
    assert report.max_deriv2_jump <= 1e-9
    assert report.sup_abs_deriv2 <= 1.2 * m + 1e-9
    assert report.min_deriv1 >= -1e-12
    assert pp.eval(1.0) == pytest.approx(3.0, abs=1e-12)


def test_mollify_random_certificate():
    rng = np.random.default_rng(31)
    for _ in range(300):
        a, b = rng.uniform(0, 5, 2)
        c = float(rng.uniform(1e-3, 5))
        data = D(a, b, c)
        pp = mollify_c2(data)
        report = pp.smoothness_report()
        m = minimal_curvature(data).value
        assert report.max_deriv2_jump <= 1e-9
        assert report.sup_abs_deriv2 <= 1.2 * m + 1e-9
        assert report.min_deriv1 >= -1e-12
        assert abs(pp.eval(1.0) - c) <= 1e-12 * (1 + c)
        scale = 1e-12 * (1 + a + b)
        assert abs(pp.eval(0.0, 1) - a) <= scale
        assert abs(pp.eval(1.0, 1) - b) <= scale


def quadratic_halves(x2=0.5, slope=1.0, curv=0.3):
    left = PiecewisePolynomial((-1.0, x2), ((0.2, slope, curv),))
    v = left.eval(x2)
    s = left.eval(x2, 1)
    right = PiecewisePolynomial((x2, 2.0), ((v, s, curv),))
    return left, right


def test_patch_identity():
    left, right = quadratic_halves()
    out = c2_patch(left, right, 0.5, 0.04)
    for t in np.linspace(-1.0, 2.0, 301):
        expected = 0.2 + 1.0 * (t + 1.0) + 0.3 * (t + 1.0) ** 2
        assert out.eval(float(t)) == pytest.approx(expected, rel=1e-13, abs=1e-13)


def test_patch_jet_triple_helper():
    left, _ = quadratic_halves()
    jet = JetTriple.of(left, 0.5, "left")
    assert jet.value == left.eval(0.5)
    assert jet.deriv1 == left.eval(0.5, 1)
    assert jet.deriv2 == pytest.approx(0.6)


def test_patch_optimal_halves():
    g = optimal_interpolant(D(1.0, 1.0, 0.5))
    x2 = 0.3
    left, right = g.restrict(0.0, x2), g.restrict(x2, 1.0)
    d = g.eval(x2, 1)
    M = g.sup_abs_deriv2()
    delta = KAPPA_PATCH * d / M
    out = c2_patch(left, right, x2, delta)
    for x in (x2 - delta, x2, x2 + delta):
        for order in range(3):
            gap = abs(out.eval_onesided(x, order, "left") - out.eval_onesided(x, order, "right"))
            assert gap <= 1e-9 * (1 + M)
    assert out.eval(x2) == pytest.approx(g.eval(x2), abs=1e-13)
    assert out.min_deriv1() >= -1e-12 * (1 + d)
    assert out.sup_abs_deriv2() <= 10 * M
    # untouched away from the window
    assert out.eval(0.9) == g.eval(0.9)


def test_patch_two_mollified_intervals():
    left = mollify_c2(D(0.5, 1.0, 0.8))
    right = mollify_c2(D(1.0, 0.7, 0.9)).affine_map(1.0, 1.0, 1.0, left.eval(1.0))
    M = max(left.sup_abs_deriv2(), right.sup_abs_deriv2())
    delta = min(0.25, KAPPA_PATCH * 1.0 / M)
    out = c2_patch(left, right, 1.0, delta)
    report = out.smoothness_report()
    assert report.max_deriv2_jump <= 1e-9
    assert report.min_deriv1 >= -1e-12 * 2
    assert report.sup_abs_deriv2 <= 10 * M


def test_patch_rejections():
    left, right = quadratic_halves()
    shifted = PiecewisePolynomial((0.5, 2.0), ((right.pieces[0][0] + 0.1,) + right.pieces[0][1:],))
    with pytest.raises(JetMismatchError):
        c2_patch(left, shifted, 0.5, 0.01)
    with pytest.raises(ConfigError):
        c2_patch(left, right, 0.5, 10.0)
    flat_left = PiecewisePolynomial((-1.0, 0.5), ((0.0,),))
    flat_right = PiecewisePolynomial((0.5, 2.0), ((0.0,),))
    with pytest.raises(FlatNodeError):
        c2_patch(flat_left, flat_right, 0.5, 0.01)
