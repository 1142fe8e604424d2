import numpy as np
import pytest

from monospline.roots import cubic_roots, quadratic_roots, quartic_roots, real_roots


def numpy_real_roots(coeffs):
    # independent oracle: companion-matrix eigenvalues
    rts = np.polynomial.polynomial.polyroots(np.asarray(coeffs, dtype=float))
    return sorted(float(r.real) for r in rts if abs(r.imag) < 1e-8)


def assert_matches_numpy(coeffs, tol=1e-7):
    mine = sorted(real_roots(coeffs))
    ref = numpy_real_roots(coeffs)
    # collapse reference duplicates the closed form reports once
    collapsed = []
    for r in ref:
        if not collapsed or abs(r - collapsed[-1]) > 1e-6 * (1.0 + abs(r)):
            collapsed.append(r)
    assert len(mine) == len(collapsed), (coeffs, mine, collapsed)
    for a, b in zip(mine, collapsed):
        assert abs(a - b) <= tol * (1.0 + abs(b)), (coeffs, mine, collapsed)


def test_quadratic_simple():
    assert quadratic_roots(-1.0, 0.0, 1.0) == pytest.approx((-1.0, 1.0))
    assert quadratic_roots(1.0, -2.0, 1.0) == pytest.approx((1.0,))
    assert quadratic_roots(1.0, 0.0, 1.0) == ()


def test_quadratic_stability():
    # widely separated roots: the naive formula loses the small one
    roots = quadratic_roots(1.0, -1e8, 1.0)
    assert roots[0] == pytest.approx(1e-8, rel=1e-10)
    assert roots[1] == pytest.approx(1e8, rel=1e-12)


def test_cubic_three_real():
    # (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    assert cubic_roots(-6.0, 11.0, -6.0, 1.0) == pytest.approx((1.0, 2.0, 3.0))


def test_cubic_one_real():
    roots = cubic_roots(-1.0, 1.0, 0.0, 1.0)  # x^3 + x - 1
    assert len(roots) == 1
    x = roots[0]
    assert abs(x ** 3 + x - 1.0) < 1e-12


def test_cubic_double_root():
    # (x-1)^2 (x+2) = x^3 - 3x + 2
    roots = cubic_roots(2.0, -3.0, 0.0, 1.0)
    assert sorted(roots) == pytest.approx([-2.0, 1.0])


def test_quartic_biquadratic():
    # x^4 - 5x^2 + 4 = (x^2-1)(x^2-4)
    assert quartic_roots(4.0, 0.0, -5.0, 0.0, 1.0) == pytest.approx((-2.0, -1.0, 1.0, 2.0))


def test_quartic_general_vs_numpy():
    rng = np.random.default_rng(5)
    for _ in range(300):
        coeffs = rng.uniform(-3.0, 3.0, 5)
        if abs(coeffs[-1]) < 0.1:
            coeffs[-1] = 1.0
        assert_matches_numpy(tuple(coeffs))


def test_cubic_random_vs_numpy():
    rng = np.random.default_rng(6)
    for _ in range(300):
        coeffs = rng.uniform(-3.0, 3.0, 4)
        if abs(coeffs[-1]) < 0.1:
            coeffs[-1] = 1.0
        assert_matches_numpy(tuple(coeffs))


def test_real_roots_window_clamps():
    roots = real_roots((-1.0, 0.0, 1.0), 0.0, 10.0)
    assert roots == (1.0,)
    assert real_roots((0.0, 1.0), -1.0, 1.0) == (0.0,)


def test_real_roots_trims_leading_noise():
    # quartic whose leading coefficient is numerical dust
    roots = real_roots((-1.0, 0.0, 1.0, 0.0, 1e-17), -10.0, 10.0)
    assert roots == pytest.approx((-1.0, 1.0))
