"""Closed-form real-root solvers for polynomials of degree <= 4.

Coefficients are given lowest degree first.  All solvers are
deterministic: quadratics use the numerically stable q-formula, cubics
use Cardano / the trigonometric method, quartics use Ferrari's resolvent
factorisation.  Each root gets two Newton polish steps against the
original coefficients.

A discriminant within ``1e-14`` of zero (relative to its natural scale)
is treated as exactly zero, so repeated roots are reported once.
"""

from __future__ import annotations

import math

_GUARD = 1e-14


def _poly_eval(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_deriv(coeffs):
    return tuple(k * c for k, c in enumerate(coeffs) if k > 0)


def _polish(coeffs, x, steps=2):
    dcoeffs = _poly_deriv(coeffs)
    for _ in range(steps):
        d = _poly_eval(dcoeffs, x)
        if d == 0.0 or not math.isfinite(d):
            break
        x = x - _poly_eval(coeffs, x) / d
    return x


def _cbrt(x):
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def trim_leading(coeffs, rel_tol=1e-12):
    """Drop near-zero leading coefficients (relative to the largest one)."""
    coeffs = [float(c) for c in coeffs]
    scale = max((abs(c) for c in coeffs), default=0.0)
    if scale == 0.0:
        return (0.0,)
    while len(coeffs) > 1 and abs(coeffs[-1]) <= rel_tol * scale:
        coeffs.pop()
    return tuple(coeffs)


def linear_roots(c0, c1):
    if c1 == 0.0:
        return ()
    return (-c0 / c1,)


def quadratic_roots(c0, c1, c2):
    """Real roots of ``c2 x^2 + c1 x + c0``."""
    if c2 == 0.0:
        return linear_roots(c0, c1)
    disc = c1 * c1 - 4.0 * c2 * c0
    scale = c1 * c1 + abs(4.0 * c2 * c0)
    if disc < -_GUARD * scale:
        return ()
    if disc <= _GUARD * scale:
        return (-c1 / (2.0 * c2),)
    sq = math.sqrt(disc)
    q = -0.5 * (c1 + math.copysign(sq, c1))
    r1 = q / c2
    r2 = c0 / q if q != 0.0 else -c1 / (2.0 * c2)
    roots = sorted((r1, r2))
    return tuple(_polish((c0, c1, c2), r) for r in roots)


def cubic_roots(c0, c1, c2, c3):
    """Real roots of ``c3 x^3 + ... + c0`` (c3 must be nonzero)."""
    if c3 == 0.0:
        return quadratic_roots(c0, c1, c2)
    a = c2 / c3
    b = c1 / c3
    c = c0 / c3
    # depressed cubic y^3 + p y + q via x = y - a/3
    p = b - a * a / 3.0
    q = 2.0 * a ** 3 / 27.0 - a * b / 3.0 + c
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    scale = (q / 2.0) ** 2 + abs((p / 3.0) ** 3)
    if scale == 0.0:
        ys = [0.0]  # triple root
    elif disc > _GUARD * scale:
        s = math.sqrt(disc)
        ys = [_cbrt(-q / 2.0 + s) + _cbrt(-q / 2.0 - s)]
    elif disc < -_GUARD * scale:
        # three distinct real roots; p < 0 here
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3.0
        ys = [m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in (0, 1, 2)]
    else:
        # borderline: one simple and one double root
        if p == 0.0:
            ys = [0.0]
        else:
            ys = [3.0 * q / p, -3.0 * q / (2.0 * p)]
    roots = sorted(y - a / 3.0 for y in ys)
    coeffs = (c0, c1, c2, c3)
    return tuple(_polish(coeffs, r) for r in roots)


def quartic_roots(c0, c1, c2, c3, c4):
    """Real roots of a quartic via Ferrari's resolvent-cubic factorisation."""
    if c4 == 0.0:
        return cubic_roots(c0, c1, c2, c3)
    a = c3 / c4
    b = c2 / c4
    c = c1 / c4
    d = c0 / c4
    # depressed quartic y^4 + p y^2 + q y + r via x = y - a/4
    p = b - 3.0 * a * a / 8.0
    q = c - a * b / 2.0 + a ** 3 / 8.0
    r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a ** 4 / 256.0
    qscale = max(1.0, abs(p), abs(r))
    ys = []
    if abs(q) <= _GUARD * qscale:
        # biquadratic
        for z in quadratic_roots(r, p, 1.0):
            if z > 0.0:
                s = math.sqrt(z)
                ys.extend((-s, s))
            elif z >= -_GUARD * qscale:
                ys.append(0.0)
    else:
        # resolvent: z^3 + 2 p z^2 + (p^2 - 4 r) z - q^2 = 0, pick largest z > 0
        zs = [z for z in cubic_roots(-q * q, p * p - 4.0 * r, 2.0 * p, 1.0) if z > 0.0]
        if not zs:
            return ()
        z = max(zs)
        s = math.sqrt(z)
        t = 0.5 * (p + z - q / s)
        w = 0.5 * (p + z + q / s)
        ys.extend(quadratic_roots(t, s, 1.0))
        ys.extend(quadratic_roots(w, -s, 1.0))
    roots = sorted(y - a / 4.0 for y in ys)
    coeffs = (c0, c1, c2, c3, c4)
    polished = [_polish(coeffs, x) for x in roots]
    # collapse duplicates introduced by the factorisation
    out = []
    span = max(1.0, *(abs(x) for x in polished)) if polished else 1.0
    for x in polished:
        if not out or abs(x - out[-1]) > 1e-12 * span:
            out.append(x)
    return tuple(out)


_SOLVERS = {1: lambda c: (), 2: linear_roots, 3: quadratic_roots,
            4: cubic_roots, 5: quartic_roots}


def real_roots(coeffs, lo=None, hi=None):
    """All real roots of a degree <= 4 polynomial, optionally restricted
    to ``[lo, hi]`` (roots within round-off of the ends are clamped in)."""
    coeffs = trim_leading(coeffs)
    if len(coeffs) > 5:
        raise ValueError("polynomial degree exceeds 4")
    roots = _SOLVERS[len(coeffs)](*coeffs)
    if lo is None and hi is None:
        return tuple(roots)
    out = []
    slack = 1e-12 * (1.0 + max(abs(lo), abs(hi)))
    for x in roots:
        if lo - slack <= x <= hi + slack:
            out.append(min(max(x, lo), hi))
    return tuple(out)
