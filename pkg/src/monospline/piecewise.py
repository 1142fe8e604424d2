"""Piecewise polynomials and monotone parametric cubics.

``PiecewisePolynomial`` is the universal representation for every
interpolant built by this package: breakpoints plus, for each interval,
the coefficients of a polynomial of degree at most 5 written in the
local variable ``t - t_left`` (lowest degree first).  Local coordinates
avoid catastrophic cancellation when breakpoints are large.

``ParametricCurve`` holds a cubic curve ``(x(t), y(t))`` on ``[0, 1]``
whose abscissa is strictly increasing, so it is the graph of a smooth
function of ``x`` even though that function is not polynomial.

Extrema of derivatives are located through closed-form quadratic/cubic
root formulas rather than iterative solvers, so sup-norms and minima are
exact up to round-off and fully deterministic.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .roots import real_roots

MAX_DEGREE = 5

_CONT_TOL = 1e-12


def _as_float_tuple(seq):
    return tuple(float(v) for v in seq)


def poly_eval(coeffs, u, order=0):
    """Evaluate the ``order``-th derivative of a local polynomial at u."""
    if order:
        coeffs = poly_derive(coeffs, order)
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def poly_derive(coeffs, order=1):
    for _ in range(order):
        coeffs = tuple(k * c for k, c in enumerate(coeffs) if k > 0)
        if not coeffs:
            return (0.0,)
    return coeffs


def poly_shift(coeffs, u0):
    """Re-expand ``p(u)`` around ``u0``: returns q with q(w) = p(u0 + w).

    Exact Taylor shift by repeated synthetic division.
    """
    work = list(coeffs)
    n = len(work)
    out = []
    for k in range(n):
        # one synthetic division by (u - u0); remainder is p^{(k)}(u0)/k!
        for i in range(n - 2 - k, -1, -1):
            work[i] += u0 * work[i + 1]
        out.append(work[0])
        work = work[1:] + [0.0]
    return tuple(out)


@dataclass(frozen=True)
class SmoothnessReport:
    """Junction jumps and global derivative bounds of a piecewise polynomial.

    ``max_value_jump``, ``max_deriv1_jump`` and ``max_deriv2_jump`` are the
    largest absolute one-sided differences over all interior breakpoints.
    """

    max_value_jump: float
    max_deriv1_jump: float
    max_deriv2_jump: float
    min_deriv1: float
    sup_abs_deriv2: float

    def __post_init__(self):
        for name in ("max_value_jump", "max_deriv1_jump", "max_deriv2_jump"):
            if getattr(self, name) < 0.0:
                raise DomainError(f"{name} must be nonnegative")


@dataclass(frozen=True)
class PiecewisePolynomial:
    """Breakpoints ``t_0 < ... < t_m`` plus one coefficient tuple per piece.

    Piece ``j`` covers ``[t_j, t_{j+1}]`` and stores coefficients of a
    polynomial of degree <= 5 in the local variable ``t - t_j``, lowest
    degree first.  The represented function must be continuous: junction
    mismatches beyond ``1e-12 * (1 + |value|)`` are rejected.
    """

    breakpoints: tuple
    pieces: tuple

    def __post_init__(self):
        bps = _as_float_tuple(self.breakpoints)
        pcs = tuple(_as_float_tuple(p) for p in self.pieces)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", pcs)
        if len(bps) < 2 or len(pcs) != len(bps) - 1:
            raise DomainError("need m+1 breakpoints and m >= 1 pieces")
        for left, right in zip(bps, bps[1:]):
            if not right > left:
                raise DomainError("breakpoints must be strictly increasing")
        for coeffs in pcs:
            if not coeffs or len(coeffs) - 1 > MAX_DEGREE:
                raise DomainError(f"piece degree exceeds {MAX_DEGREE}")
            if not all(math.isfinite(c) for c in coeffs):
                raise DomainError("non-finite coefficient")
        for j in range(len(pcs) - 1):
            left_end = poly_eval(pcs[j], bps[j + 1] - bps[j])
            right_start = pcs[j + 1][0]
            if abs(left_end - right_start) > _CONT_TOL * (1.0 + abs(left_end)):
                raise DomainError(
                    f"value discontinuity at breakpoint {bps[j + 1]!r}: "
                    f"{left_end!r} vs {right_start!r}"
                )

    # -- construction helpers -------------------------------------------------

    @classmethod
    def single(cls, coeffs, lo=0.0, hi=1.0):
        return cls((lo, hi), (tuple(coeffs),))

    @classmethod
    def zero(cls, lo=0.0, hi=1.0):
        return cls.single((0.0,), lo, hi)

    @property
    def domain(self):
        return self.breakpoints[0], self.breakpoints[-1]

    # -- evaluation ------------------------------------------------------------

    def _locate(self, t):
        lo, hi = self.domain
        slack = 1e-12 * (1.0 + abs(t))
        if t < lo - slack or t > hi + slack:
            raise DomainError(f"t={t!r} outside domain [{lo!r}, {hi!r}]")
        t = min(max(t, lo), hi)
        j = bisect_right(self.breakpoints, t) - 1
        j = min(max(j, 0), len(self.pieces) - 1)
        return j, t - self.breakpoints[j]

    def eval(self, t, order=0):
        """Order-th derivative at ``t`` (right limit at interior breakpoints,
        left limit at the right end of the domain)."""
        if not 0 <= order <= 3:
            raise DomainError("derivative order must be in 0..3")
        j, u = self._locate(t)
        return poly_eval(self.pieces[j], u, order)

    def __call__(self, t, order=0):
        return self.eval(t, order)

    def eval_onesided(self, t, order=0, side="right"):
        """One-sided limit at ``t``; differs from :meth:`eval` only when
        ``t`` is an interior breakpoint and ``side='left'``."""
        j, u = self._locate(t)
        if side == "left" and j > 0 and u == 0.0:
            j -= 1
            u = self.breakpoints[j + 1] - self.breakpoints[j]
        return poly_eval(self.pieces[j], u, order)

    # -- calculus --------------------------------------------------------------

    def derivative(self):
        """Piecewise derivative.  Only meaningful for C^1 inputs; a C^0-only
        input fails the continuity invariant of the result."""
        return PiecewisePolynomial(
            self.breakpoints, tuple(poly_derive(p) for p in self.pieces)
        )

    def antiderivative(self, initial=0.0):
        """Antiderivative with given value at the left end; continuous by
        construction (each constant is chained from the previous piece)."""
        pieces = []
        acc = float(initial)
        for j, coeffs in enumerate(self.pieces):
            integ = (acc,) + tuple(c / (k + 1) for k, c in enumerate(coeffs))
            pieces.append(integ)
            acc = poly_eval(integ, self.breakpoints[j + 1] - self.breakpoints[j])
        return PiecewisePolynomial(self.breakpoints, tuple(pieces))

    def affine_map(self, x_scale, x_offset, y_scale=1.0, y_offset=0.0):
        """Image under ``t -> x_offset + x_scale * t`` (x_scale > 0) and
        ``g -> y_offset + y_scale * g``."""
        if x_scale <= 0.0:
            raise DomainError("x_scale must be positive")
        bps = tuple(x_offset + x_scale * t for t in self.breakpoints)
        pieces = []
        for coeffs in self.pieces:
            mapped = [y_scale * c / x_scale ** k for k, c in enumerate(coeffs)]
            mapped[0] += y_offset
            pieces.append(tuple(mapped))
        return PiecewisePolynomial(bps, tuple(pieces))

    def restrict(self, lo, hi):
        """Restriction to ``[lo, hi]`` (must lie within the domain).  Pieces
        fully inside keep their exact coefficients; a piece cut on the left
        is re-expanded about the new origin."""
        d0, d1 = self.domain
        slack = 1e-12 * (1.0 + abs(lo) + abs(hi))
        if lo < d0 - slack or hi > d1 + slack or not hi > lo:
            raise DomainError("restriction window outside domain")
        lo = min(max(lo, d0), d1)
        hi = min(max(hi, d0), d1)
        j_lo, u_lo = self._locate(lo)
        j_hi = bisect_right(self.breakpoints, hi) - 1
        if j_hi >= len(self.pieces):
            j_hi = len(self.pieces) - 1
        elif j_hi > 0 and hi == self.breakpoints[j_hi]:
            j_hi -= 1
        first = self.pieces[j_lo] if u_lo == 0.0 else poly_shift(self.pieces[j_lo], u_lo)
        bps = [lo]
        pieces = [first]
        for j in range(j_lo + 1, j_hi + 1):
            bps.append(self.breakpoints[j])
            pieces.append(self.pieces[j])
        bps.append(hi)
        return PiecewisePolynomial(tuple(bps), tuple(pieces))

    @staticmethod
    def concat(parts):
        """Join piecewise polynomials with abutting domains."""
        parts = list(parts)
        bps = list(parts[0].breakpoints)
        pieces = list(parts[0].pieces)
        for part in parts[1:]:
            if abs(part.breakpoints[0] - bps[-1]) > 1e-12 * (1.0 + abs(bps[-1])):
                raise DomainError("domains do not abut")
            bps.extend(part.breakpoints[1:])
            pieces.extend(part.pieces)
        return PiecewisePolynomial(tuple(bps), tuple(pieces))

    # -- norms and extrema ------------------------------------------------------

    def sup_abs_deriv2(self):
        """Exact sup of |second derivative| over the domain.

        Per piece the second derivative has degree <= 3, so its extrema sit
        at the piece ends or at the real roots of the third derivative
        (degree <= 2, closed-form quadratic).
        """
        best = 0.0
        for j, coeffs in enumerate(self.pieces):
            length = self.breakpoints[j + 1] - self.breakpoints[j]
            d2 = poly_derive(coeffs, 2)
            d3 = poly_derive(d2)
            candidates = [0.0, length]
            candidates.extend(real_roots(d3, 0.0, length))
            for u in candidates:
                best = max(best, abs(poly_eval(d2, u)))
        return best

    def min_deriv1(self):
        """Exact min of the first derivative over the domain.

        Per piece the first derivative has degree <= 4; candidates are the
        piece ends and the real roots of the second derivative (degree <= 3,
        closed-form cubic).
        """
        best = math.inf
        for j, coeffs in enumerate(self.pieces):
            length = self.breakpoints[j + 1] - self.breakpoints[j]
            d1 = poly_derive(coeffs)
            d2 = poly_derive(d1)
            candidates = [0.0, length]
            candidates.extend(real_roots(d2, 0.0, length))
            for u in candidates:
                best = min(best, poly_eval(d1, u))
        return best

    def smoothness_report(self):
        jumps = [0.0, 0.0, 0.0]
        for j in range(len(self.pieces) - 1):
            length = self.breakpoints[j + 1] - self.breakpoints[j]
            for order in range(3):
                left = poly_eval(self.pieces[j], length, order)
                right = poly_eval(self.pieces[j + 1], 0.0, order)
                jumps[order] = max(jumps[order], abs(left - right))
        return SmoothnessReport(
            max_value_jump=jumps[0],
            max_deriv1_jump=jumps[1],
            max_deriv2_jump=jumps[2],
            min_deriv1=self.min_deriv1(),
            sup_abs_deriv2=self.sup_abs_deriv2(),
        )

    # -- serialisation -----------------------------------------------------------

    def to_json_dict(self):
        return {
            "breakpoints": list(self.breakpoints),
            "pieces": [list(p) for p in self.pieces],
        }

    @classmethod
    def from_json_dict(cls, obj):
        try:
            return cls(tuple(obj["breakpoints"]), tuple(tuple(p) for p in obj["pieces"]))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed piecewise polynomial JSON: {exc}") from exc


def smoothness_report(pp):
    """Module-level convenience wrapper."""
    return pp.smoothness_report()


def _poly_mul(p, q):
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def _poly_sub(p, q):
    n = max(len(p), len(q))
    return tuple(
        (p[i] if i < len(p) else 0.0) - (q[i] if i < len(q) else 0.0) for i in range(n)
    )


@dataclass(frozen=True)
class ParametricCurve:
    """Cubic curve ``(x(t), y(t))`` on ``t in [0, 1]`` with ``x'(t) > 0``.

    The abscissa-monotonicity invariant is checked by closed-form
    minimisation of the quadratic ``x'``, so the curve is always the graph
    of a smooth function of ``x``.
    """

    x_coeffs: tuple
    y_coeffs: tuple

    def __post_init__(self):
        xs = _as_float_tuple(self.x_coeffs)
        ys = _as_float_tuple(self.y_coeffs)
        object.__setattr__(self, "x_coeffs", xs)
        object.__setattr__(self, "y_coeffs", ys)
        if len(xs) != 4 or len(ys) != 4:
            raise DomainError("x_coeffs and y_coeffs must be cubic (4 entries)")
        d1 = poly_derive(xs)
        candidates = [0.0, 1.0]
        candidates.extend(real_roots(poly_derive(d1), 0.0, 1.0))
        if min(poly_eval(d1, u) for u in candidates) <= 0.0:
            raise DomainError("x'(t) must be strictly positive on [0, 1]")

    # -- parametric evaluation ---------------------------------------------------

    def point(self, t, order=0):
        return (poly_eval(self.x_coeffs, t, order), poly_eval(self.y_coeffs, t, order))

    @property
    def x_range(self):
        return poly_eval(self.x_coeffs, 0.0), poly_eval(self.x_coeffs, 1.0)

    def t_of_x(self, x):
        """Invert the strictly increasing abscissa by bisection to
        ``|x(t) - x| <= 1e-13 * (1 + |x|)``."""
        x0, x1 = self.x_range
        slack = 1e-12 * (1.0 + abs(x))
        if x < x0 - slack or x > x1 + slack:
            raise DomainError(f"x={x!r} outside curve range [{x0!r}, {x1!r}]")
        x = min(max(x, x0), x1)
        lo, hi = 0.0, 1.0
        tol = 1e-13 * (1.0 + abs(x))
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            val = poly_eval(self.x_coeffs, mid)
            if abs(val - x) <= tol:
                return mid
            if val < x:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 5e-17:
                break
        return 0.5 * (lo + hi)

    def eval_at_x(self, x):
        """Ordinate of the graph at abscissa ``x``."""
        return poly_eval(self.y_coeffs, self.t_of_x(x))

    def deriv1_at_t(self, t):
        return poly_eval(self.y_coeffs, t, 1) / poly_eval(self.x_coeffs, t, 1)

    def deriv2_at_t(self, t):
        """Second derivative of the graph via the parametric quotient
        ``(y'' x' - y' x'') / (x')^3``."""
        xp = poly_eval(self.x_coeffs, t, 1)
        xpp = poly_eval(self.x_coeffs, t, 2)
        yp = poly_eval(self.y_coeffs, t, 1)
        ypp = poly_eval(self.y_coeffs, t, 2)
        return (ypp * xp - yp * xpp) / xp ** 3

    def _cross(self):
        # y'' x' - y' x'': degree <= 3 in t
        xp = poly_derive(self.x_coeffs)
        yp = poly_derive(self.y_coeffs)
        return _poly_sub(_poly_mul(poly_derive(yp), xp), _poly_mul(poly_derive(xp), yp))

    def min_deriv1(self):
        """Exact min of the graph slope: critical points are the roots of
        ``y'' x' - y' x''`` (degree <= 3)."""
        candidates = [0.0, 1.0]
        candidates.extend(real_roots(self._cross(), 0.0, 1.0))
        return min(self.deriv1_at_t(t) for t in candidates)

    def sup_abs_deriv2(self):
        """Exact sup of the |graph curvature proxy| ``|G''|``: critical
        points solve ``cross' x' = 3 cross x''`` (degree <= 4 after trim)."""
        cross = self._cross()
        xp = poly_derive(self.x_coeffs)
        numer = _poly_sub(
            _poly_mul(poly_derive(cross), xp),
            tuple(3.0 * c for c in _poly_mul(cross, poly_derive(xp))),
        )
        candidates = [0.0, 1.0]
        candidates.extend(real_roots(numer, 0.0, 1.0))
        return max(abs(self.deriv2_at_t(t)) for t in candidates)

    def to_json_dict(self):
        return {"x_coeffs": list(self.x_coeffs), "y_coeffs": list(self.y_coeffs)}

    @classmethod
    def from_json_dict(cls, obj):
        try:
            return cls(tuple(obj["x_coeffs"]), tuple(obj["y_coeffs"]))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed parametric curve JSON: {exc}") from exc


def curve_eval(curve, x):
    """Graph ordinate of a :class:`ParametricCurve` at abscissa ``x``."""
    return curve.eval_at_x(x)


def sample(fn, n):
    """Sample ``n >= 2`` equally spaced abscissae across the domain.

    Returns an ``(n, 4)`` array with columns ``x, value, d1, d2``.  For a
    parametric curve the derivatives use the quotient formulas.
    """
    if n < 2:
        raise DomainError("need at least 2 sample points")
    if isinstance(fn, PiecewisePolynomial):
        lo, hi = fn.domain
        xs = np.linspace(lo, hi, n)
        rows = [(x, fn.eval(x, 0), fn.eval(x, 1), fn.eval(x, 2)) for x in xs]
    elif isinstance(fn, ParametricCurve):
        lo, hi = fn.x_range
        xs = np.linspace(lo, hi, n)
        rows = []
        for x in xs:
            t = fn.t_of_x(float(x))
            rows.append((x, poly_eval(fn.y_coeffs, t), fn.deriv1_at_t(t), fn.deriv2_at_t(t)))
    else:
        raise DomainError(f"cannot sample object of type {type(fn).__name__}")
    return np.array(rows, dtype=float)
