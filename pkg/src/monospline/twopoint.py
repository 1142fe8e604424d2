"""The normalized two-point problem on [0, 1].

Given end slopes ``a = G'(0) >= 0``, ``b = G'(1) >= 0`` and a gap
``c = G(1) - G(0) >= 0``, the minimal curvature over all monotone C^{1,1}
interpolants is an explicit function of ``(a, b, c)``:

* ``0`` when all data vanish,
* infinite when ``c = 0`` but ``a + b > 0``,
* ``(a^2 + b^2) / (2 c)`` in the saturated regime ``0 < c < c0``,
* ``|2c - a - b| + sqrt((2c - a - b)^2 + (b - a)^2)`` for ``c >= c0``,

where ``c0 = (a^2 + b^2) / (2 (a + b))`` (with ``0/0 = 0``).  Both
branches agree at ``c = c0``, where the value equals ``a + b``; for
bit-reproducibility the second branch is evaluated there.

Working with the velocity ``v = G'`` turns the problem into shaping a
nonnegative function with prescribed end values, mass ``c`` and slope
bound ``M``: the admissible band is ``phi_M^- <= v <= phi_M^+`` with

    phi_M^-(t) = max(0, a - M t, b - M (1 - t))
    phi_M^+(t) = min(a + M t, b + M (1 - t))

The optimal interpolant integrates the binding envelope; it is a
monotone quadratic spline of two or three pieces whose second derivative
takes only the values ``-M``, ``0`` and ``+M``.

``minimal_curvature_oracle`` re-derives the minimal curvature without
the closed form, by bisecting on ``M`` with a discrete feasibility test
(trapezoidal mass of gridded envelope bands).  It exists to cross-check
the formula and deliberately shares no code with it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InfeasibleError
from .piecewise import PiecewisePolynomial, poly_eval

__all__ = [
    "TwoPointData",
    "CurvatureValue",
    "INFINITE",
    "VelocityProfile",
    "saturation_threshold",
    "minimal_curvature",
    "minimal_curvature_branch",
    "minimal_curvature_values",
    "lower_envelope",
    "upper_envelope",
    "envelope_integral",
    "optimal_interpolant",
    "minimal_curvature_oracle",
]


@dataclass(frozen=True)
class TwoPointData:
    """Normalized Hermite datum: end slopes ``a``, ``b`` and gap ``c``."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = float(getattr(self, name))
            object.__setattr__(self, name, v)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite")
            if v < 0.0:
                raise DomainError(f"{name} must be nonnegative, got {v!r}")


@dataclass(frozen=True)
class CurvatureValue:
    """A nonnegative curvature, or the distinguished infinite value.

    Infinity is an explicit variant rather than a float sentinel so that
    downstream maxima and divisions cannot silently produce NaNs.
    """

    value: float = 0.0
    infinite: bool = False

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        if not self.infinite:
            if not math.isfinite(self.value) or self.value < 0.0:
                raise DomainError("finite curvature must be >= 0")
        else:
            object.__setattr__(self, "value", math.inf)

    @classmethod
    def finite(cls, value):
        return cls(value=value)

    @property
    def is_infinite(self):
        return self.infinite

    def as_float(self):
        return math.inf if self.infinite else self.value

    def scaled(self, factor):
        if factor <= 0.0:
            raise DomainError("scale factor must be positive")
        if self.infinite:
            return INFINITE
        return CurvatureValue(self.value * factor)

    def __float__(self):
        return self.as_float()

    def __lt__(self, other):
        return self.as_float() < float(other)

    def __le__(self, other):
        return self.as_float() <= float(other)

    def __gt__(self, other):
        return self.as_float() > float(other)

    def __ge__(self, other):
        return self.as_float() >= float(other)

    def __repr__(self):
        return "CurvatureValue(inf)" if self.infinite else f"CurvatureValue({self.value!r})"


INFINITE = CurvatureValue(infinite=True)


@dataclass(frozen=True)
class VelocityProfile:
    """A nonnegative piecewise-linear velocity on [0, 1].

    Wraps a :class:`PiecewisePolynomial` whose pieces all have degree
    <= 1; nonnegativity is checked at the breakpoints, which suffices
    for piecewise-linear functions.
    """

    poly: PiecewisePolynomial

    def __post_init__(self):
        peak = 0.0
        low = math.inf
        for j, coeffs in enumerate(self.poly.pieces):
            if len(coeffs) > 2:
                raise DomainError("velocity profile pieces must be linear")
            length = self.poly.breakpoints[j + 1] - self.poly.breakpoints[j]
            for u in (0.0, length):
                v = poly_eval(coeffs, u)
                peak = max(peak, abs(v))
                low = min(low, v)
        if low < -1e-12 * (1.0 + peak):
            raise DomainError("velocity profile must be nonnegative")

    def __call__(self, t, order=0):
        return self.poly.eval(t, order)

    @property
    def breakpoints(self):
        return self.poly.breakpoints

    def integral(self):
        """Exact integral over the domain: per-piece trapezoid, which is
        exact for linear pieces."""
        total = 0.0
        for j, coeffs in enumerate(self.poly.pieces):
            length = self.poly.breakpoints[j + 1] - self.poly.breakpoints[j]
            total += 0.5 * (poly_eval(coeffs, 0.0) + poly_eval(coeffs, length)) * length
        return total


def saturation_threshold(data):
    """The gap value separating the saturated (plateau) regime from the
    tent regime: ``(a^2 + b^2) / (2 (a + b))``, with ``0/0 = 0``."""
    a, b = data.a, data.b
    if a + b == 0.0:
        return 0.0
    return (a * a + b * b) / (2.0 * (a + b))


def minimal_curvature_branch(data):
    """Minimal curvature together with the name of the active branch.

    Branches: ``zero`` (all-zero data), ``infeasible`` (zero gap, positive
    slopes), ``plateau c<c0``, ``boundary c=c0`` and ``tent c>c0``.
    """
    a, b, c = data.a, data.b, data.c
    if c == 0.0:
        if a + b == 0.0:
            return CurvatureValue(0.0), "zero"
        return INFINITE, "infeasible"
    c0 = saturation_threshold(data)
    if c < c0:
        return CurvatureValue((a * a + b * b) / (2.0 * c)), "plateau c<c0"
    # at c == c0 both branches agree (value a + b); evaluate the tent
    # branch there for bit-reproducibility; grouping keeps it exactly
    # symmetric under swapping a and b
    q = 2.0 * c - (a + b)
    value = abs(q) + math.hypot(q, b - a)
    branch = "boundary c=c0" if c == c0 else "tent c>c0"
    return CurvatureValue(value), branch


def minimal_curvature(data):
    """Minimal sup|G''| over monotone C^{1,1} interpolants of ``data``."""
    return minimal_curvature_branch(data)[0]


def minimal_curvature_float(a, b, c):
    """Scalar fast path returning ``math.inf`` for infeasible data; used in
    optimisation inner loops.  Mirrors :func:`minimal_curvature` exactly."""
    if c == 0.0:
        return 0.0 if a + b == 0.0 else math.inf
    s = a + b
    if s > 0.0:
        sq = a * a + b * b
        if c < sq / (2.0 * s):
            return sq / (2.0 * c)
    q = 2.0 * c - (a + b)
    return abs(q) + math.hypot(q, b - a)


def minimal_curvature_values(a, b, c):
    """Vectorised minimal curvature for numpy arrays; uses ``np.inf``
    internally (callers wrap results in :class:`CurvatureValue`)."""
    a, b, c = np.broadcast_arrays(
        np.asarray(a, dtype=float), np.asarray(b, dtype=float), np.asarray(c, dtype=float)
    )
    s = a + b
    sq = a * a + b * b
    with np.errstate(divide="ignore", invalid="ignore"):
        c0 = np.where(s > 0.0, sq / (2.0 * np.where(s > 0.0, s, 1.0)), 0.0)
        plateau = sq / (2.0 * np.where(c > 0.0, c, 1.0))
    q = 2.0 * c - s
    tent = np.abs(q) + np.hypot(q, b - a)
    out = np.where((c > 0.0) & (c < c0), plateau, tent)
    out = np.where(c == 0.0, np.where(s > 0.0, np.inf, 0.0), out)
    return out


def _build_profile(lines, combine, M):
    """Explicit piecewise-linear max/min of affine ``lines`` on [0, 1].

    Each line is ``(value_at_0, slope)``.  Breakpoints are the pairwise
    intersections clipped to (0, 1); consecutive pieces carried by the
    same line are merged, so e.g. a tent that never leaves one line comes
    out as a single piece.
    """
    cuts = {0.0, 1.0}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            (v1, s1), (v2, s2) = lines[i], lines[j]
            if s1 != s2:
                t = (v2 - v1) / (s1 - s2)
                if 0.0 < t < 1.0:
                    cuts.add(t)
    grid = sorted(cuts)
    segments = []
    for left, right in zip(grid, grid[1:]):
        if right - left <= 1e-14:
            continue
        mid = 0.5 * (left + right)
        idx = combine(range(len(lines)), key=lambda k: lines[k][0] + lines[k][1] * mid)
        if segments and segments[-1][1] == idx:
            segments[-1] = (segments[-1][0], idx, right)
        else:
            segments.append((left, idx, right))
    bps = [segments[0][0]]
    pieces = []
    tol = 1e-15 * (1.0 + M)
    for left, idx, right in segments:
        v0, slope = lines[idx]
        value = v0 + slope * left
        if abs(value) <= tol:
            value = 0.0
        pieces.append((value, slope) if slope != 0.0 else (value,))
        bps.append(right)
    return VelocityProfile(PiecewisePolynomial(tuple(bps), tuple(pieces)))


def lower_envelope(data, M):
    """Pointwise least admissible velocity ``max(0, a - M t, b - M (1-t))``
    as an explicit piecewise-linear profile.  Requires ``M >= |b - a|``."""
    a, b = data.a, data.b
    if M < abs(b - a):
        raise InfeasibleError(f"slope bound M={M!r} < |b - a|={abs(b - a)!r}")
    if M == 0.0:
        return VelocityProfile(PiecewisePolynomial((0.0, 1.0), ((a,),)))
    lines = [(0.0, 0.0), (a, -M), (b - M, M)]
    return _build_profile(lines, max, M)


def upper_envelope(data, M):
    """Pointwise greatest admissible velocity ``min(a + M t, b + M (1-t))``."""
    a, b = data.a, data.b
    if M < abs(b - a):
        raise InfeasibleError(f"slope bound M={M!r} < |b - a|={abs(b - a)!r}")
    if M == 0.0:
        return VelocityProfile(PiecewisePolynomial((0.0, 1.0), ((a,),)))
    lines = [(a, M), (b + M, -M)]
    return _build_profile(lines, min, M)


def envelope_integral(profile):
    """Exact integral of a velocity profile over its domain."""
    return profile.integral()


def optimal_interpolant(data):
    """The monotone quadratic spline attaining the minimal curvature.

    With ``M`` the minimal curvature and ``c > 0``:

    * ``c > (a+b)/2``: two pieces with junction ``t0 = 1/2 + (b-a)/(2M)``
      (rising curvature ``+M`` then ``-M``);
    * ``c0 <= c <= (a+b)/2``: two pieces with junction
      ``1/2 - (b-a)/(2M)`` (curvature ``-M`` then ``+M``);
    * ``0 < c < c0``: three pieces with junctions ``a/M`` and ``1 - b/M``
      and a flat plateau at height ``a^2/(2M)`` in between (empty end
      pieces are dropped when ``a = 0`` or ``b = 0``).

    Junction jets are chained from the left so the spline is exactly C^1
    at coefficient level; the all-zero datum returns the zero polynomial.
    """
    a, b, c = data.a, data.b, data.c
    if c == 0.0:
        if a + b == 0.0:
            return PiecewisePolynomial.zero(0.0, 1.0)
        raise InfeasibleError("zero gap with positive end slopes is infeasible")
    M = minimal_curvature(data).value
    if M == 0.0:
        # a = b and c = (a + b)/2: the affine interpolant
        return PiecewisePolynomial.single((0.0, c), 0.0, 1.0)

    def chained(segments):
        # segments: (junction, curvature) pairs; builds C^1 quadratics
        bps = [0.0]
        pieces = []
        value, slope = 0.0, a
        for right, curv in segments:
            left = bps[-1]
            if right - left <= 1e-14:
                continue
            coeffs = (value, slope, 0.5 * curv)
            while len(coeffs) > 1 and coeffs[-1] == 0.0:
                coeffs = coeffs[:-1]
            pieces.append(coeffs)
            u = right - left
            value = poly_eval(pieces[-1], u)
            slope = poly_eval(pieces[-1], u, 1)
            bps.append(right)
        return PiecewisePolynomial(tuple(bps), tuple(pieces))

    half_sum = 0.5 * (a + b)
    if c > half_sum:
        t0 = 0.5 + (b - a) / (2.0 * M)
        return chained([(t0, M), (1.0, -M)])
    c0 = saturation_threshold(data)
    if c >= c0:
        t0 = 0.5 - (b - a) / (2.0 * M)
        return chained([(t0, -M), (1.0, M)])
    tau1 = a / M
    tau2 = 1.0 - b / M
    return chained([(tau1, -M), (tau2, 0.0), (1.0, M)])


def minimal_curvature_oracle(data, n=2000):
    """Bisection/feasibility re-derivation of the minimal curvature.

    For a trial slope bound ``M`` the lower/upper admissible velocity
    bands are evaluated on an ``n``-point uniform grid and ``M`` is
    declared feasible iff the trapezoidal mass of the lower band is
    <= c <= that of the upper band.  Feasibility is monotone in ``M``, so
    bisection converges; the bracket's upper end is doubled until
    feasible before bisecting.  The closed-form branch expressions are
    deliberately not used anywhere here.
    """
    if n < 100:
        raise DomainError("oracle needs n >= 100 grid points")
    a, b, c = data.a, data.b, data.c
    if c == 0.0:
        return CurvatureValue(0.0) if a + b == 0.0 else INFINITE
    t = np.linspace(0.0, 1.0, n)

    def feasible(M):
        left = a - M * t
        right = b - M * (1.0 - t)
        lower = np.maximum(0.0, np.maximum(left, right))
        upper = np.minimum(a + M * t, b + M * (1.0 - t))
        return np.trapezoid(lower, t) <= c <= np.trapezoid(upper, t)

    lo = abs(b - a)
    hi = a + b + 4.0 * c + 1.0
    tol = (a + b + 4.0 * c + 1.0) * 2.0 ** -40
    guard = 0
    while not feasible(hi):
        hi *= 2.0
        guard += 1
        if guard > 200:
            raise ArithmeticError("oracle failed to bracket a feasible slope bound")
    if feasible(lo):
        return CurvatureValue(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return CurvatureValue(hi)
