"""Upgrading C^{1,1} interpolants to C^2.

Two independent mechanisms:

* :func:`mollify_c2` smooths the *two-point* optimal interpolant.  The
  optimal velocity is piecewise linear with slopes in ``{-M, 0, +M}`` and
  at most two corners.  Each corner ``tau`` is replaced on
  ``[tau - delta, tau + delta]`` by the quadratic splice that matches
  value and slope at both ends; the exact mass gained (or lost, for a
  concave corner) is ``(s_+ - s_-) delta^2 / 6`` per corner, and is
  returned by a C^1 bump ``B(s) = 30 s^2 (1-s)^2`` scaled into a window
  of width ``4 delta`` placed on an affine branch away from the splices.
  The result integrates to a C^2 monotone quintic-capped spline whose
  curvature exceeds the optimum by a factor of at most 1.2.

* :func:`c2_patch` joins two C^2 monotone pieces that meet with a common
  value and a common positive slope ``d``.  On ``[x2 - delta, x2 + delta]``
  the function is replaced by the unique quintic matching both
  second-order end jets, plus a C^2 correction that restores the exact
  node value; the correction is a symmetric pair of quintic smoothstep
  halves (so every stored piece stays within the degree-5 cap).  The
  monotonicity and curvature-factor conclusions are certified a
  posteriori on the actual patch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    ConfigError,
    DomainError,
    FlatNodeError,
    InfeasibleError,
    JetMismatchError,
    PatchCertificateError,
)
from .piecewise import PiecewisePolynomial, poly_eval, poly_shift
from .twopoint import lower_envelope, minimal_curvature, upper_envelope

__all__ = [
    "Corner",
    "JetTriple",
    "MollifyConfig",
    "KAPPA_PATCH",
    "PATCH_CURVATURE_FACTOR",
    "corner_set",
    "mollify_c2",
    "c2_patch",
]

# window half-width cap for c2_patch: delta <= KAPPA_PATCH * d / M
KAPPA_PATCH = 1.0 / 64.0
# a-posteriori certificate: patched curvature must stay within this factor of M
PATCH_CURVATURE_FACTOR = 10.0


class Corner(NamedTuple):
    position: float
    left_slope: float
    right_slope: float


@dataclass(frozen=True)
class JetTriple:
    """Second-order jet (value, first and second derivative) at a point."""

    value: float
    deriv1: float
    deriv2: float

    @classmethod
    def of(cls, pp, x, side="right"):
        return cls(
            pp.eval_onesided(x, 0, side),
            pp.eval_onesided(x, 1, side),
            pp.eval_onesided(x, 2, side),
        )


@dataclass(frozen=True)
class MollifyConfig:
    """Smoothing window half-width (``None`` = automatic largest admissible)
    and the tolerance used for the internal exact-mass check."""

    delta: float | None = None
    excess_tolerance: float = 1e-12


def corner_set(profile):
    """Interior breakpoints of a velocity profile where the slope changes,
    with the one-sided slopes."""
    poly = profile.poly
    slopes = [coeffs[1] if len(coeffs) > 1 else 0.0 for coeffs in poly.pieces]
    scale = 1.0 + max(abs(s) for s in slopes)
    corners = []
    for j in range(len(poly.pieces) - 1):
        if abs(slopes[j + 1] - slopes[j]) > 1e-12 * scale:
            corners.append(Corner(poly.breakpoints[j + 1], slopes[j], slopes[j + 1]))
    return tuple(corners)


def _mollify_caps(positions, lower, a, b, M, window_left):
    caps = []
    for tau in positions:
        caps.append(0.5 * min(tau, 1.0 - tau))
    for t1, t2 in zip(positions, positions[1:]):
        caps.append(0.25 * (t2 - t1))
    if window_left:
        # bump on [0, 4 delta]; the velocity there starts at its maximum a
        caps.append(a / (16.0 * M))
        caps.append(positions[0] / 5.0)
    else:
        # bump on [1 - 6 delta, 1 - 2 delta], clear of every splice window
        if lower:
            caps.append(b / (16.0 * M))
        caps.extend((1.0 - tau) / 7.0 for tau in positions)
    return min(caps)


def mollify_c2(data, config=None):
    """C^2 monotone interpolant with curvature at most 1.2 x optimal.

    Returns the integral of the corner-spliced, mass-corrected optimal
    velocity.  End values and slopes are preserved exactly (the bump and
    the splices vanish to first order at the interval ends), the total
    mass equals ``c`` by the closed-form excess bookkeeping, and the
    velocity stays nonnegative, so the result is monotone.
    """
    cfg = config or MollifyConfig()
    a, b, c = data.a, data.b, data.c
    if c == 0.0:
        if a + b == 0.0:
            return PiecewisePolynomial.zero(0.0, 1.0)
        raise InfeasibleError("zero gap with positive end slopes is infeasible")
    M = minimal_curvature(data).value
    if M == 0.0:
        return PiecewisePolynomial.single((0.0, c), 0.0, 1.0)
    lower = c <= 0.5 * (a + b)
    profile = lower_envelope(data, M) if lower else upper_envelope(data, M)
    corners = corner_set(profile)
    if not corners:
        return profile.poly.antiderivative(0.0)

    positions = [k.position for k in corners]
    window_left = lower and b == 0.0
    cap = _mollify_caps(positions, lower, a, b, M, window_left)
    if cfg.delta is None:
        delta = cap
    else:
        delta = float(cfg.delta)
        if not 0.0 < delta <= cap * (1.0 + 1e-12):
            raise ConfigError(
                f"delta={delta!r} outside the admissible range (0, {cap!r}]"
            )

    # window extents are snapped to their float endpoints and the working
    # half-widths re-derived from them: with tiny windows near t = 1 the
    # rounded width can differ from 2*delta by ~ulp(1), which would other-
    # wise leak an O(M * ulp/delta) second-derivative jump at the seams
    splices = []
    excess = 0.0
    for tau, s_minus, s_plus in corners:
        lo = tau - delta
        hi = tau + delta
        half = 0.5 * (hi - lo)
        q = (profile(lo), s_minus, (s_plus - s_minus) / (4.0 * half))
        splices.append((lo, hi, q))
        excess += (s_plus - s_minus) * half * half / 6.0

    if window_left:
        j0 = 0.0
        j1 = 4.0 * delta
    else:
        j0 = 1.0 - 6.0 * delta
        j1 = 1.0 - 2.0 * delta
    width = j1 - j0
    # bump (1/width) B((t - j0)/width) expanded about j0; unit mass
    eta = (
        0.0,
        0.0,
        30.0 / width ** 3,
        -60.0 / width ** 4,
        30.0 / width ** 5,
    )

    cuts = {0.0, 1.0, j0, j1}
    for lo, hi, _ in splices:
        cuts.add(lo)
        cuts.add(hi)
    grid = sorted(cuts)
    bps = [0.0]
    pieces = []
    for left, right in zip(grid, grid[1:]):
        if right - left <= 1e-15:
            continue
        mid = 0.5 * (left + right)
        coeffs = None
        for lo, hi, q in splices:
            if lo <= mid <= hi:
                coeffs = poly_shift(q, left - lo) if left != lo else q
                break
        if coeffs is None:
            value = profile(left)
            slope = profile(mid, 1)
            coeffs = (value, slope)
            if j0 <= mid <= j1:
                shifted = poly_shift(eta, left - j0) if left != j0 else eta
                coeffs = tuple(
                    (coeffs[k] if k < len(coeffs) else 0.0) - excess * shifted[k]
                    for k in range(len(shifted))
                )
        pieces.append(coeffs)
        bps.append(right)
    velocity = PiecewisePolynomial(tuple(bps), tuple(pieces))
    result = velocity.antiderivative(0.0)
    mass = result.eval(1.0)
    if abs(mass - c) > cfg.excess_tolerance * (1.0 + abs(c)):
        raise ArithmeticError(
            f"mass restoration failed: integral {mass!r} vs gap {c!r}"
        )
    return result


def _hermite_quintic(jet_a, jet_b, h):
    """Coefficients (about the left end) of the unique quintic matching the
    given second-order jets at 0 and h."""
    p0, p1, p2 = jet_a.value, jet_a.deriv1, 0.5 * jet_a.deriv2
    e0 = jet_b.value - (p0 + p1 * h + p2 * h * h)
    e1 = jet_b.deriv1 - (p1 + 2.0 * p2 * h)
    e2 = jet_b.deriv2 - 2.0 * p2
    mat = np.array(
        [
            [h ** 3, h ** 4, h ** 5],
            [3.0 * h ** 2, 4.0 * h ** 3, 5.0 * h ** 4],
            [6.0 * h, 12.0 * h ** 2, 20.0 * h ** 3],
        ]
    )
    p3, p4, p5 = np.linalg.solve(mat, np.array([e0, e1, e2]))
    return (p0, p1, p2, float(p3), float(p4), float(p5))


def c2_patch(left, right, x2, delta):
    """Replace ``[x2 - delta, x2 + delta]`` by a C^2 quintic bridge.

    ``left`` and ``right`` must meet at ``x2`` with matching value and a
    common slope ``d > 0`` (mismatch beyond ``1e-10`` relative raises
    :class:`JetMismatchError`; ``d <= 0`` raises :class:`FlatNodeError`).
    ``delta`` must satisfy ``0 < delta <= min((x2-x1)/2, (x3-x2)/2,
    KAPPA_PATCH * d / M)`` with ``M`` the larger input curvature.

    The bridge is the jet-matching quintic plus a symmetric smoothstep
    correction restoring the exact node value; monotonicity and the
    curvature certificate (``<= PATCH_CURVATURE_FACTOR * M``) are verified
    on the result and raise :class:`PatchCertificateError` on failure.
    """
    x1 = left.breakpoints[0]
    x3 = right.breakpoints[-1]
    scale_x = 1.0 + abs(x2)
    if abs(left.breakpoints[-1] - x2) > 1e-12 * scale_x or abs(
        right.breakpoints[0] - x2
    ) > 1e-12 * scale_x:
        raise DomainError("left and right pieces must meet at x2")
    f2 = left.eval_onesided(x2, 0, "left")
    f2_right = right.eval(x2)
    if abs(f2 - f2_right) > 1e-10 * (1.0 + abs(f2)):
        raise JetMismatchError(f"node values differ: {f2!r} vs {f2_right!r}")
    d = left.eval_onesided(x2, 1, "left")
    d_right = right.eval(x2, 1)
    if abs(d - d_right) > 1e-10 * (1.0 + abs(d)):
        raise JetMismatchError(f"node slopes differ: {d!r} vs {d_right!r}")
    if d <= 0.0:
        raise FlatNodeError("c2 patching requires a positive slope at the node")
    M = max(left.sup_abs_deriv2(), right.sup_abs_deriv2())
    caps = [0.5 * (x2 - x1), 0.5 * (x3 - x2)]
    if M > 0.0:
        caps.append(KAPPA_PATCH * d / M)
    cap = min(caps)
    delta = float(delta)
    if not 0.0 < delta <= cap * (1.0 + 1e-12):
        raise ConfigError(f"delta={delta!r} outside the admissible range (0, {cap!r}]")

    aw = x2 - delta
    bw = x2 + delta
    # half-widths re-derived from the float endpoints (see mollify_c2)
    dl = x2 - aw
    dr = bw - x2
    jet_a = JetTriple.of(left, aw, "left")
    jet_b = JetTriple.of(right, bw, "right")
    P = _hermite_quintic(jet_a, jet_b, bw - aw)
    E = f2 - poly_eval(P, dl)
    # smoothstep sigma(s) = 10 s^3 - 15 s^4 + 6 s^5 (vanishing 2-jets at 0,
    # value 1 with vanishing derivatives at 1); correction is E*sigma(u/dl)
    # on the left half mirrored to E*(1 - sigma(w/dr)) on the right half.
    left_half = (
        P[0],
        P[1],
        P[2],
        P[3] + E * 10.0 / dl ** 3,
        P[4] - E * 15.0 / dl ** 4,
        P[5] + E * 6.0 / dl ** 5,
    )
    P_mid = poly_shift(P, dl)
    right_half = (
        P_mid[0] + E,
        P_mid[1],
        P_mid[2],
        P_mid[3] - E * 10.0 / dr ** 3,
        P_mid[4] + E * 15.0 / dr ** 4,
        P_mid[5] - E * 6.0 / dr ** 5,
    )
    bridge = PiecewisePolynomial((aw, x2, bw), (left_half, right_half))
    result = PiecewisePolynomial.concat(
        [left.restrict(x1, aw), bridge, right.restrict(bw, x3)]
    )

    # a-posteriori certificates on the actual patch
    jump_tol = 1e-9 * (1.0 + M)
    for x in (aw, x2, bw):
        for order in (0, 1, 2):
            gap = abs(
                result.eval_onesided(x, order, "left")
                - result.eval_onesided(x, order, "right")
            )
            if gap > jump_tol:
                raise PatchCertificateError(
                    f"derivative {order} jump {gap!r} at {x!r} exceeds tolerance"
                )
    if bridge.min_deriv1() < -1e-12 * (1.0 + d):
        raise PatchCertificateError("patched bridge lost monotonicity")
    if M > 0.0 and bridge.sup_abs_deriv2() > PATCH_CURVATURE_FACTOR * M * (1.0 + 1e-9):
        raise PatchCertificateError("patched bridge exceeds the curvature certificate")
    return result
