"""Three classical two-point constructions and their applicability ranges.

* Whitney blend: ``F(x) = (a x) phi(x) + (1 - phi(x)) (b (x-1) + c)`` with
  the cubic partition function ``phi = 1 - 3x^2 + 2x^3``.  Defined for all
  data; monotone with curvature at most ``6 *`` optimal when
  ``c >= max(a, b)`` (check :func:`in_whitney_range`), and visibly
  non-monotone outside that range.
* Parametric cubic Bezier with the repeated interior control point at the
  intersection ``(T, m)`` of the endpoint tangents, ``T = (b-c)/(b-a)``,
  ``m = a T``.  Needs ``a != b`` and ``c`` strictly between the slopes;
  its curvature at the tangent-intersection parameter blows up as ``c``
  approaches either slope.
* Quartic with a cubic Bernstein velocity ``v = sum m_k B_{k,3}``:
  nonnegative by construction, with ``m_1 + m_2 = 4c - a - b`` forced by
  the mass constraint and curvature at most ``3 (2 lambda + 1) *``
  optimal when ``|c - (a+b)/2| <= (lambda/4) |b-a|`` and
  ``0 < lambda <= (a+b)/|b-a|``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, RangeError
from .piecewise import ParametricCurve, PiecewisePolynomial
from .twopoint import TwoPointData

__all__ = [
    "BernsteinSolution",
    "in_whitney_range",
    "whitney_interpolant",
    "bezier_interpolant",
    "bezier_peak_curvature",
    "bernstein_interpolant",
    "bernstein_proportional",
    "default_bernstein_lambda",
]


def in_whitney_range(data):
    """Whitney blend certificate range: ``c >= max(a, b)``."""
    return data.c >= max(data.a, data.b)


def whitney_interpolant(data):
    """The quartic blend, expanded to a single-piece polynomial.

    Always matches the Hermite data; monotonicity and the factor-6
    curvature certificate hold when :func:`in_whitney_range`.
    """
    a, b, c = data.a, data.b, data.c
    # (a x) phi + (3x^2 - 2x^3)(b x + (c - b)) with phi = 1 - 3x^2 + 2x^3
    coeffs = (
        0.0,
        a,
        3.0 * (c - b),
        3.0 * b - 2.0 * (c - b) - 3.0 * a,
        2.0 * (a - b),
    )
    return PiecewisePolynomial.single(coeffs, 0.0, 1.0)


def _check_bezier_range(data):
    a, b, c = data.a, data.b, data.c
    if a == b:
        raise RangeError("bezier construction requires a != b")
    lo, hi = min(a, b), max(a, b)
    if not c > lo:
        raise RangeError(f"bezier construction requires c > min(a, b) = {lo!r}")
    if not c < hi:
        raise RangeError(f"bezier construction requires c < max(a, b) = {hi!r}")


def bezier_interpolant(data):
    """Cubic Bezier graph through the data with control point ``(T, m)``
    doubled: ``x(t) = 3T t(1-t) + t^3``, ``y(t) = 3m t(1-t) + c t^3``."""
    _check_bezier_range(data)
    a, b, c = data.a, data.b, data.c
    T = (b - c) / (b - a)
    m = a * T
    return ParametricCurve(
        x_coeffs=(0.0, 3.0 * T, -3.0 * T, 1.0),
        y_coeffs=(0.0, 3.0 * m, -3.0 * m, c),
    )


def bezier_peak_curvature(data):
    """Second derivative of the Bezier graph at the tangent-intersection
    parameter: ``(2/3) |b - a|^3 / ((b - c)(c - a))``, positive in range."""
    _check_bezier_range(data)
    a, b, c = data.a, data.b, data.c
    return (2.0 / 3.0) * abs(b - a) ** 3 / ((b - c) * (c - a))


@dataclass(frozen=True)
class BernsteinSolution:
    """Velocity control values ``m0..m3`` (``m0 = a``, ``m3 = b``) and the
    band width ``lam`` used to select the interior pair."""

    m0: float
    m1: float
    m2: float
    m3: float
    lam: float

    def __post_init__(self):
        for name in ("m0", "m1", "m2", "m3"):
            if getattr(self, name) < 0.0:
                raise DomainError(f"{name} must be nonnegative")
        if not self.lam > 0.0:
            raise DomainError("lam must be positive")
        spread = abs(self.m3 - self.m0)
        scale = 1.0 + self.m0 + self.m3 + spread
        if abs(self.m1 - self.m0) > self.lam * spread + 1e-12 * scale:
            raise DomainError("m1 violates the band |m1 - a| <= lam |b - a|")
        if abs(self.m2 - self.m3) > self.lam * spread + 1e-12 * scale:
            raise DomainError("m2 violates the band |m2 - b| <= lam |b - a|")


def default_bernstein_lambda(data):
    """Smallest safe band width: ``min(1, (a+b)/|b-a|)``, raised just enough
    to admit the gap if possible.  Raises outside the admissible range."""
    a, b, c = data.a, data.b, data.c
    spread = abs(b - a)
    if a + b == 0.0:
        raise RangeError("bernstein construction needs a + b > 0")
    if spread == 0.0:
        if abs(c - 0.5 * (a + b)) > 1e-12 * (1.0 + a + b):
            raise RangeError(
                "with a = b the bernstein range restriction forces c = (a+b)/2"
            )
        return 1.0
    lam_max = (a + b) / spread
    lam_needed = 4.0 * abs(c - 0.5 * (a + b)) / spread
    lam = max(min(1.0, lam_max), lam_needed)
    if lam > lam_max * (1.0 + 1e-12) or lam <= 0.0:
        raise RangeError(
            f"gap c={c!r} needs band lam={lam_needed!r} exceeding (a+b)/|b-a|={lam_max!r}"
        )
    return min(lam, lam_max)


def bernstein_interpolant(data, lam=None):
    """Quartic interpolant from a nonnegative cubic Bernstein velocity.

    The interior controls solve ``m1 + m2 = 4c - a - b`` via the
    proportional split ``m1 = S a/(a+b)`` projected onto the admissible
    box, which is nonempty throughout the admissible range.  Returns the
    chosen controls and the integrated single-piece quartic.
    """
    a, b, c = data.a, data.b, data.c
    if lam is None:
        lam = default_bernstein_lambda(data)
    else:
        lam = float(lam)
        if not lam > 0.0:
            raise RangeError("lam must be positive")
        spread = abs(b - a)
        if a + b == 0.0:
            raise RangeError("bernstein construction needs a + b > 0")
        if spread > 0.0 and lam > (a + b) / spread * (1.0 + 1e-12):
            raise RangeError(
                f"lam={lam!r} exceeds the admissible (a+b)/|b-a|={(a + b) / spread!r}"
            )
        if abs(c - 0.5 * (a + b)) > 0.25 * lam * spread + 1e-12 * (1.0 + a + b + c):
            raise RangeError(
                f"gap c={c!r} outside |c - (a+b)/2| <= (lam/4)|b-a| for lam={lam!r}"
            )
    spread = abs(b - a)
    S = 4.0 * c - a - b
    band = lam * spread
    lo = max(0.0, a - band, S - b - band)
    hi = min(a + band, S - max(0.0, b - band))
    if lo > hi + 1e-12 * (1.0 + abs(S)):
        raise RangeError("empty control box; data outside the admissible range")
    hi = max(lo, hi)
    m1 = min(max(S * a / (a + b), lo), hi)
    m2 = max(S - m1, 0.0)
    solution = BernsteinSolution(m0=a, m1=m1, m2=m2, m3=b, lam=lam)
    return solution, _integrate_controls(a, m1, m2, b)


def _integrate_controls(m0, m1, m2, m3):
    # v(t) = m0 B0 + m1 B1 + m2 B2 + m3 B3 in the monomial basis
    v = (
        m0,
        3.0 * (m1 - m0),
        3.0 * (m0 - 2.0 * m1 + m2),
        m3 - m0 + 3.0 * (m1 - m2),
    )
    return PiecewisePolynomial.single(v, 0.0, 1.0).antiderivative(0.0)


def bernstein_proportional(data):
    """Uncertified Bernstein construction for method comparisons.

    Splits the mass constraint ``m1 + m2 = 4c - a - b`` proportionally
    with no band restriction, so it is defined for all data; it matches
    the Hermite data but carries no curvature certificate and may lose
    monotonicity (the interior controls can go negative)."""
    a, b, c = data.a, data.b, data.c
    S = 4.0 * c - a - b
    m1 = S * a / (a + b) if a + b > 0.0 else 0.5 * S
    return _integrate_controls(a, m1, S - m1, b)
