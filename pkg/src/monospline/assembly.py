"""Global interpolation over arbitrary node sets and the monotone trace
seminorm.

Every interval ``[x_i, x_{i+1}]`` reduces to a unit-interval problem via
``t = (x - x_i)/h_i`` and ``G_i(t) = (F(x_i + h_i t) - f_i)/h_i``: the
local datum is ``(d_i, d_{i+1}, s_i)`` with secant ``s_i`` and the
curvature rescales as ``|F''| = |G_i''| / h_i``.  Unit-interval
constructions are mapped back and concatenated; shared node slopes make
the result C^1, and the global curvature is the max of the rescaled
local ones.

For values without slopes, the monotone C^{1,1} trace seminorm is

    N(f) = inf over slope vectors d >= 0 of
           max_i  minimal_curvature(d_i, d_{i+1}, s_i) / h_i.

``optimize_slopes`` searches this minimax by deterministic multi-start
cyclic coordinate descent (no efficient exact algorithm is claimed);
``seminorm_oracle`` evaluates the same objective exhaustively on a
product grid — computed by exact dynamic programming over the interval
chain, which yields the identical grid minimum at a tiny fraction of the
enumeration cost — and anchors the optimizer in tests.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field

import numpy as np

from .classical import bernstein_interpolant, bezier_interpolant, in_whitney_range, whitney_interpolant
from .errors import DomainError, InfeasibleError, RangeError
from .piecewise import ParametricCurve, PiecewisePolynomial, poly_eval
from .smoothing import c2_patch
from .twopoint import (
    CurvatureValue,
    INFINITE,
    TwoPointData,
    minimal_curvature,
    minimal_curvature_float,
    minimal_curvature_values,
    optimal_interpolant,
)
from .smoothing import mollify_c2

__all__ = [
    "HermiteDataset",
    "IntervalRecord",
    "CurveSegment",
    "GlobalInterpolant",
    "SeminormResult",
    "ASSEMBLY_METHODS",
    "local_data",
    "assemble",
    "seminorm_with_slopes",
    "optimize_slopes",
    "seminorm_lower_bound",
    "seminorm_oracle",
]

ASSEMBLY_METHODS = ("optimal", "whitney", "bezier", "bernstein", "mollified")

_INVPHI = 0.5 * (math.sqrt(5.0) - 1.0)


@dataclass(frozen=True)
class HermiteDataset:
    """Strictly increasing nodes, nondecreasing values, optional slopes.

    Slopes are all-or-none and nonnegative; a flat interval
    (``f_i = f_{i+1}``) forces both of its slopes to zero, otherwise no
    monotone interpolant exists and construction fails.
    """

    nodes: tuple
    values: tuple
    slopes: tuple | None = None

    def __post_init__(self):
        nodes = tuple(float(x) for x in self.nodes)
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)
        if len(nodes) < 2:
            raise DomainError("need at least two nodes")
        if len(values) != len(nodes):
            raise DomainError(
                f"values: length {len(values)} != nodes length {len(nodes)}"
            )
        for x0, x1 in zip(nodes, nodes[1:]):
            if not x1 > x0:
                raise DomainError("nodes must be strictly increasing")
        for f0, f1 in zip(values, values[1:]):
            if f1 < f0:
                raise InfeasibleError("values must be nondecreasing")
        if self.slopes is not None:
            slopes = tuple(float(d) for d in self.slopes)
            object.__setattr__(self, "slopes", slopes)
            if len(slopes) != len(nodes):
                raise DomainError(
                    f"slopes: length {len(slopes)} != nodes length {len(nodes)}"
                )
            for d in slopes:
                if d < 0.0:
                    raise DomainError("slopes must be nonnegative")
            for i, (f0, f1) in enumerate(zip(values, values[1:])):
                if f0 == f1 and (slopes[i] != 0.0 or slopes[i + 1] != 0.0):
                    raise InfeasibleError(
                        f"interval {i} is flat but has a nonzero end slope"
                    )

    @property
    def interval_count(self):
        return len(self.nodes) - 1

    def gap(self, i):
        return self.nodes[i + 1] - self.nodes[i]

    def secant(self, i):
        return (self.values[i + 1] - self.values[i]) / self.gap(i)

    def secants(self):
        return tuple(self.secant(i) for i in range(self.interval_count))

    def without_slopes(self):
        return HermiteDataset(self.nodes, self.values)

    def with_slopes(self, slopes):
        return HermiteDataset(self.nodes, self.values, tuple(slopes))


def local_data(dataset, i):
    """Unit-interval datum ``(d_i, d_{i+1}, s_i)`` and width ``h_i``."""
    if dataset.slopes is None:
        raise DomainError("dataset has no slopes")
    if not 0 <= i < dataset.interval_count:
        raise DomainError(f"interval index {i} out of range")
    data = TwoPointData(dataset.slopes[i], dataset.slopes[i + 1], dataset.secant(i))
    return data, dataset.gap(i)


@dataclass(frozen=True)
class IntervalRecord:
    """Per-interval metadata of an assembled interpolant."""

    index: int
    a: float
    b: float
    c: float
    h: float
    optimal_curvature: CurvatureValue
    curvature: float  # achieved global sup|F''| on this interval


@dataclass(frozen=True)
class CurveSegment:
    """A parametric interval of a global bezier interpolant."""

    x0: float
    h: float
    f0: float
    curve: ParametricCurve

    @property
    def x1(self):
        return self.x0 + self.h

    def value(self, x, order=0):
        t = self.curve.t_of_x((x - self.x0) / self.h)
        if order == 0:
            return self.f0 + self.h * poly_eval(self.curve.y_coeffs, t)
        if order == 1:
            return self.curve.deriv1_at_t(t)
        if order == 2:
            return self.curve.deriv2_at_t(t) / self.h
        raise DomainError("curve segments support derivative orders 0..2")


@dataclass(frozen=True)
class GlobalInterpolant:
    """Assembled interpolant over ``[x_0, x_N]`` with per-interval records.

    ``function`` holds the piecewise polynomial for polynomial methods;
    the bezier method stores per-interval parametric ``segments`` instead
    (its graph is not polynomial in x).
    """

    dataset: HermiteDataset
    method: str
    intervals: tuple
    function: PiecewisePolynomial | None = None
    segments: tuple = ()
    c11_nodes: tuple = ()
    patched_nodes: tuple = ()

    def _segment_at(self, x):
        nodes = self.dataset.nodes
        slack = 1e-12 * (1.0 + abs(x))
        if x < nodes[0] - slack or x > nodes[-1] + slack:
            raise DomainError(f"x={x!r} outside [{nodes[0]!r}, {nodes[-1]!r}]")
        x = min(max(x, nodes[0]), nodes[-1])
        j = bisect_right(nodes, x) - 1
        return self.segments[min(max(j, 0), len(self.segments) - 1)], x

    def value(self, x, order=0):
        if self.function is not None:
            return self.function.eval(x, order)
        segment, x = self._segment_at(x)
        return segment.value(x, order)

    def sup_abs_deriv2(self):
        if self.function is not None:
            return self.function.sup_abs_deriv2()
        return max(seg.curve.sup_abs_deriv2() / seg.h for seg in self.segments)

    def min_deriv1(self):
        if self.function is not None:
            return self.function.min_deriv1()
        return min(seg.curve.min_deriv1() for seg in self.segments)

    def node_jumps(self):
        """Max one-sided jumps of value/d1/d2 across interior nodes."""
        if self.function is not None:
            report = self.function.smoothness_report()
            return (report.max_value_jump, report.max_deriv1_jump, report.max_deriv2_jump)
        jumps = [0.0, 0.0, 0.0]
        for left, right in zip(self.segments, self.segments[1:]):
            node = right.x0
            for order in range(3):
                jumps[order] = max(
                    jumps[order], abs(left.value(node, order) - right.value(node, order))
                )
        return tuple(jumps)

    def sample(self, n):
        """(n, 4) table with columns x, value, d1, d2."""
        if n < 2:
            raise DomainError("need at least 2 sample points")
        xs = np.linspace(self.dataset.nodes[0], self.dataset.nodes[-1], n)
        return np.array(
            [(x, self.value(x, 0), self.value(x, 1), self.value(x, 2)) for x in xs]
        )

    def validate(self):
        ds = self.dataset
        fscale = 1.0 + max(abs(v) for v in ds.values)
        dscale = 1.0 + max(ds.slopes)
        patched = set(self.patched_nodes)
        for i, x in enumerate(ds.nodes):
            if abs(self.value(x) - ds.values[i]) > 1e-12 * fscale:
                raise ArithmeticError(f"node value mismatch at node {i}")
            slope_gap = abs(self.value(x, 1) - ds.slopes[i])
            if x in patched:
                # the C^2 node patch keeps the node value exact but moves
                # the slope by O(M delta) <= d/16 under the delta cap
                if slope_gap > ds.slopes[i] / 16.0 + 1e-12 * dscale:
                    raise ArithmeticError(f"patched node slope drifted at node {i}")
            elif slope_gap > 1e-12 * dscale:
                raise ArithmeticError(f"node slope mismatch at node {i}")
        if self.min_deriv1() < -1e-12 * dscale:
            raise ArithmeticError("assembled interpolant lost monotonicity")
        return self


def _local_builder(method):
    if method == "optimal":
        return lambda data: optimal_interpolant(data)
    if method == "mollified":
        return lambda data: mollify_c2(data)
    if method == "whitney":
        def build(data):
            if not in_whitney_range(data):
                raise RangeError(
                    f"whitney range requires c >= max(a, b); got a={data.a!r}, "
                    f"b={data.b!r}, c={data.c!r}"
                )
            return whitney_interpolant(data)

        return build
    if method == "bernstein":
        return lambda data: bernstein_interpolant(data)[1]
    if method == "bezier":
        return bezier_interpolant
    raise DomainError(f"unknown method {method!r}; expected one of {ASSEMBLY_METHODS}")


def assemble(dataset, method="optimal"):
    """Build the global interpolant with one construction per interval.

    Slopes must be present.  Out-of-range intervals (for whitney, bezier
    and bernstein) are collected and reported in a single error naming
    each offending interval.  The ``mollified`` method additionally
    applies the C^2 node patch at every interior node with positive
    slope; nodes with zero slope stay C^{1,1} and are listed in
    ``c11_nodes``.
    """
    if dataset.slopes is None:
        raise DomainError("assembly needs a dataset with slopes")
    build = _local_builder(method)
    locals_ = []
    violations = []
    for i in range(dataset.interval_count):
        data, h = local_data(dataset, i)
        try:
            locals_.append(build(data))
        except RangeError as exc:
            violations.append(f"interval {i} ({dataset.nodes[i]!r}..{dataset.nodes[i + 1]!r}): {exc}")
    if violations:
        raise RangeError(
            f"{len(violations)} interval(s) out of range for method {method!r}: "
            + "; ".join(violations)
        )

    records = []
    if method == "bezier":
        segments = []
        for i, curve in enumerate(locals_):
            data, h = local_data(dataset, i)
            seg = CurveSegment(dataset.nodes[i], h, dataset.values[i], curve)
            segments.append(seg)
            records.append(
                IntervalRecord(
                    index=i, a=data.a, b=data.b, c=data.c, h=h,
                    optimal_curvature=minimal_curvature(data),
                    curvature=curve.sup_abs_deriv2() / h,
                )
            )
        gi = GlobalInterpolant(
            dataset=dataset, method=method, intervals=tuple(records),
            segments=tuple(segments),
        )
        return gi.validate()

    parts = []
    for i, local in enumerate(locals_):
        data, h = local_data(dataset, i)
        piece = local.affine_map(h, dataset.nodes[i], h, dataset.values[i])
        parts.append(piece)
        records.append(
            IntervalRecord(
                index=i, a=data.a, b=data.b, c=data.c, h=h,
                optimal_curvature=minimal_curvature(data),
                curvature=local.sup_abs_deriv2() / h,
            )
        )
    function = PiecewisePolynomial.concat(parts)

    c11_nodes = []
    patched_nodes = []
    if method == "mollified":
        for i in range(1, dataset.interval_count):
            node = dataset.nodes[i]
            d = dataset.slopes[i]
            local_curv = max(records[i - 1].curvature, records[i].curvature)
            if d <= 0.0:
                if local_curv > 0.0:
                    c11_nodes.append(node)
                continue
            if local_curv == 0.0:
                continue  # both sides affine: already C^2
            delta = min(
                0.25 * min(dataset.gap(i - 1), dataset.gap(i)),
                (1.0 / 64.0) * d / local_curv,
            )
            left = function.restrict(dataset.nodes[0], node)
            right = function.restrict(node, dataset.nodes[-1])
            function = c2_patch(left, right, node, delta)
            patched_nodes.append(node)

    gi = GlobalInterpolant(
        dataset=dataset, method=method, intervals=tuple(records),
        function=function, c11_nodes=tuple(c11_nodes),
        patched_nodes=tuple(patched_nodes),
    )
    return gi.validate()


@dataclass(frozen=True)
class SeminormResult:
    """Minimax value, the slope vector realising it and the per-interval
    terms ``minimal_curvature(d_i, d_{i+1}, s_i) / h_i``."""

    value: CurvatureValue
    slopes: tuple
    per_interval: tuple
    lower_bound: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "slopes", tuple(float(d) for d in self.slopes))
        best = max((term.as_float() for term in self.per_interval), default=0.0)
        if self.value.as_float() != best:
            raise DomainError("value must equal the max of per_interval terms")


def seminorm_with_slopes(dataset, slopes):
    """Per-interval curvature terms for a given slope vector and their max
    (an infinite term propagates to an infinite value)."""
    slopes = tuple(float(d) for d in slopes)
    if len(slopes) != len(dataset.nodes):
        raise DomainError(
            f"slope vector length {len(slopes)} != node count {len(dataset.nodes)}"
        )
    for d in slopes:
        if d < 0.0:
            raise DomainError("slopes must be nonnegative")
    per = []
    for i in range(dataset.interval_count):
        data = TwoPointData(slopes[i], slopes[i + 1], dataset.secant(i))
        per.append(minimal_curvature(data).scaled(1.0 / dataset.gap(i)))
    value = per[0]
    for term in per[1:]:
        if term > value:
            value = term
    return SeminormResult(value=value, slopes=slopes, per_interval=tuple(per))


def _mstar_term(a, b, c, h):
    return minimal_curvature_float(a, b, c) / h


def _golden_min(f, lo, hi, tol):
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INVPHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INVPHI * (hi - lo)
            f2 = f(x2)
    xm = 0.5 * (lo + hi)
    return xm, f(xm)


def _forced_zeros(secants):
    forced = [False] * (len(secants) + 1)
    for i, s in enumerate(secants):
        if s == 0.0:
            forced[i] = True
            forced[i + 1] = True
    return forced


def _starting_points(secants, forced):
    n_nodes = len(secants) + 1

    def ends(interior):
        d = [0.0] * n_nodes
        d[0] = secants[0]
        d[-1] = secants[-1]
        for i in range(1, n_nodes - 1):
            d[i] = interior(secants[i - 1], secants[i])
        return d

    base = ends(min)
    starts = [
        base,
        ends(lambda u, v: 0.5 * (u + v)),
        ends(max),
        [0.5 * v for v in base],
        [1.5 * v for v in base],
        [2.0 * v for v in base],
        [0.0] * n_nodes,
        list(secants) + [secants[-1]],
    ]
    out = []
    seen = set()
    for d in starts:
        d = tuple(0.0 if forced[i] else max(0.0, v) for i, v in enumerate(d))
        if d not in seen:
            seen.add(d)
            out.append(list(d))
    return out


def _convex_crossings(g, lo, hi, budget, tol):
    """Sublevel interval ``{x in [lo, hi]: g(x) <= budget}`` of a convex g,
    or ``None`` if empty."""
    x_min, g_min = _golden_min(g, lo, hi, tol)
    g_lo, g_hi = g(lo), g(hi)
    if g_lo < g_min:
        x_min, g_min = lo, g_lo
    if g_hi < g_min:
        x_min, g_min = hi, g_hi
    slack = budget + 1e-12 * (1.0 + abs(budget))
    if g_min > slack:
        return None
    # g is monotone between each endpoint and the argmin: bisect for the
    # sublevel boundaries
    left = lo
    if g_lo > slack:
        a, b = lo, x_min
        for _ in range(80):
            mid = 0.5 * (a + b)
            if g(mid) <= slack:
                b = mid
            else:
                a = mid
        left = b
    right = hi
    if g_hi > slack:
        a, b = x_min, hi
        for _ in range(80):
            mid = 0.5 * (a + b)
            if g(mid) <= slack:
                a = mid
            else:
                b = mid
        right = a
    return (left, right)


def _level_feasible(secants, gaps, forced, v):
    """Backward reachable slope intervals at objective level ``v``.

    Every per-interval term is jointly convex in the slope vector (blend
    two admissible velocity profiles to see it), so the set of slopes at
    node i admitting a feasible completion to the right is an interval;
    it is computed by propagating from the right end with 1-D searches.
    Returns the interval list, or None if the level is infeasible.
    """
    n = len(secants)
    tol = 1e-13

    def node_cap(i):
        caps = []
        if i > 0:
            caps.append(2.0 * secants[i - 1] + v * gaps[i - 1])
        if i < n:
            caps.append(2.0 * secants[i] + v * gaps[i])
        return min(caps)

    sets = [None] * (n + 1)
    sets[n] = (0.0, 0.0) if forced[n] else (0.0, node_cap(n))
    for i in range(n - 1, -1, -1):
        lo_next, hi_next = sets[i + 1]
        s, h = secants[i], gaps[i]
        budget = v * h
        if s == 0.0:
            if lo_next > 0.0:
                return None
            sets[i] = (0.0, 0.0)
            continue

        def g(x, _s=s, _lo=lo_next, _hi=hi_next):
            if _lo == _hi:
                return minimal_curvature_float(x, _lo, _s)
            return _golden_min(
                lambda y: minimal_curvature_float(x, y, _s), _lo, _hi, tol
            )[1]

        window = _convex_crossings(g, 0.0, node_cap(i), budget, tol)
        if window is None:
            return None
        if forced[i]:
            if window[0] > 1e-9:
                return None
            window = (0.0, 0.0)
        sets[i] = window
    return sets


def _select_slopes(secants, gaps, forced, v, sets):
    """Forward selection of a concrete slope vector within the backward
    reachable sets at level ``v``."""
    tol = 1e-13
    d = [0.0] * (len(secants) + 1)
    lo, hi = sets[0]
    d[0] = 0.0 if forced[0] else 0.5 * (lo + hi)
    for i, (s, h) in enumerate(zip(secants, gaps)):
        budget = v * h
        lo_next, hi_next = sets[i + 1]
        if s == 0.0 or lo_next == hi_next:
            d[i + 1] = lo_next
            continue

        def slice_cost(y, _x=d[i], _s=s):
            return minimal_curvature_float(_x, y, _s)

        window = _convex_crossings(slice_cost, lo_next, hi_next, budget, tol)
        if window is None:
            # tolerance dust: fall back to the cheapest reachable point
            y_best, _ = _golden_min(slice_cost, lo_next, hi_next, tol)
            d[i + 1] = y_best
        else:
            d[i + 1] = 0.5 * (window[0] + window[1])
    return d


def _coordinate_descent(d, secants, gaps, forced, cap, sweeps=200):
    def term(i, left, right):
        return _mstar_term(left, right, secants[i], gaps[i])

    def objective(vec):
        return max(term(i, vec[i], vec[i + 1]) for i in range(len(secants)))

    value = objective(d)
    for _ in range(sweeps):
        for i in range(len(d)):
            if forced[i]:
                continue

            def f(x, _i=i):
                worst = 0.0
                if _i > 0:
                    worst = term(_i - 1, d[_i - 1], x)
                if _i < len(secants):
                    worst = max(worst, term(_i, x, d[_i + 1]))
                return worst

            x_gold, f_gold = _golden_min(f, 0.0, cap, 1e-12 * (1.0 + cap))
            candidates = [(f(0.0), 0.0), (f(d[i]), d[i]), (f_gold, x_gold)]
            _, x_new = min(candidates, key=lambda p: (p[0], p[1]))
            d[i] = x_new
        new_value = objective(d)
        if value - new_value < 1e-10 * (1.0 + abs(value)):
            return min(value, new_value), d
        value = new_value
    return value, d


def optimize_slopes(dataset):
    """Minimise the trace-seminorm objective over slope vectors.

    The objective ``max_i minimal_curvature(d_i, d_{i+1}, s_i)/h_i`` is a
    convex minimax (each term is jointly convex in the slopes: blend two
    admissible velocity profiles).  The search therefore runs a level
    bisection: a level ``v`` is feasible iff the backward-propagated
    reachable slope intervals are nonempty, and the optimal level is
    bracketed to 1e-10 relative.  A concrete slope vector is selected
    inside the reachable sets and polished by deterministic multi-start
    cyclic coordinate descent (which alone can stall in the nonsmooth
    valleys, so it is kept only as a refinement).  Nodes touching a flat
    interval are pinned to zero first; ``lower_bound`` carries the
    certificate from intervals with pinned endpoints.
    """
    secants = dataset.secants()
    gaps = tuple(dataset.gap(i) for i in range(dataset.interval_count))
    n_nodes = len(dataset.nodes)
    forced = _forced_zeros(secants)
    smax = max(secants)
    lb = seminorm_lower_bound(dataset)
    if smax == 0.0:
        d = (0.0,) * n_nodes
        result = seminorm_with_slopes(dataset, d)
        return SeminormResult(result.value, d, result.per_interval, lower_bound=lb)

    cap = 4.0 * smax

    def objective(vec):
        return max(
            _mstar_term(vec[i], vec[i + 1], secants[i], gaps[i])
            for i in range(len(secants))
        )

    candidates = []

    # level bisection on the convex minimax
    starts = _starting_points(secants, forced)
    v_hi = min(objective(d) for d in starts)
    v_lo = lb
    if math.isfinite(v_hi):
        for _ in range(200):
            if v_hi - v_lo <= 1e-10 * (1.0 + v_hi):
                break
            v_mid = 0.5 * (v_lo + v_hi)
            if _level_feasible(secants, gaps, forced, v_mid) is not None:
                v_hi = v_mid
            else:
                v_lo = v_mid
        sets = _level_feasible(secants, gaps, forced, v_hi)
        if sets is not None:
            candidates.append(_select_slopes(secants, gaps, forced, v_hi, sets))

    # deterministic multi-start descent (polish + fallback)
    for start in starts + [list(d) for d in candidates]:
        value, d = _coordinate_descent(list(start), secants, gaps, forced, cap)
        candidates.append(d)

    best_d = min(candidates, key=lambda d: (objective(d), tuple(d)))
    result = seminorm_with_slopes(dataset, tuple(best_d))
    return SeminormResult(result.value, result.slopes, result.per_interval, lower_bound=lb)


def seminorm_lower_bound(dataset):
    """Certified lower bound: for each interval whose endpoints are pinned
    to zero by flat neighbours, the best possible term over the remaining
    free endpoint (1-D search); the max over intervals bounds the
    seminorm from below."""
    secants = dataset.secants()
    forced = _forced_zeros(secants)
    lb = 0.0
    for i, s in enumerate(secants):
        if s == 0.0:
            continue
        h = dataset.gap(i)
        left_pinned = forced[i]
        right_pinned = forced[i + 1]
        if left_pinned and right_pinned:
            vals = [_mstar_term(0.0, 0.0, s, h)]
        elif left_pinned or right_pinned:
            cap = 8.0 * s

            def f(y, _pin_left=left_pinned):
                return (
                    _mstar_term(0.0, y, s, h)
                    if _pin_left
                    else _mstar_term(y, 0.0, s, h)
                )

            _, fx = _golden_min(f, 0.0, cap, 1e-12 * (1.0 + cap))
            vals = [fx, f(0.0), f(cap)]
        else:
            continue
        lb = max(lb, min(vals))
    return lb


def _chain_dp(levels_list, secants, gaps):
    """Exact min over the product grid of the chain minimax objective.

    For objectives of the form ``max_i term(d_i, d_{i+1})`` the product
    minimum factors through dynamic programming, so the result equals
    exhaustive enumeration of the full grid.
    """
    V = np.zeros(len(levels_list[0]))
    choices = []
    for i, s in enumerate(secants):
        ly = levels_list[i]
        lx = levels_list[i + 1]
        T = minimal_curvature_values(ly[:, None], lx[None, :], s) / gaps[i]
        C = np.maximum(V[:, None], T)
        idx = np.argmin(C, axis=0)
        V = C[idx, np.arange(len(lx))]
        choices.append(idx)
    k = int(np.argmin(V))
    best = float(V[k])
    path = [k]
    for idx in reversed(choices):
        k = int(idx[k])
        path.append(k)
    path.reverse()
    d = tuple(float(levels_list[i][path[i]]) for i in range(len(levels_list)))
    return best, d


def seminorm_oracle(dataset, grid=64):
    """Grid minimum of the trace-seminorm objective.

    Evaluates the objective over the product grid ``d_i in {0, D, 2D, ...,
    4 max_i s_i}`` with ``D = 4 max s / grid`` (exactly, via chain dynamic
    programming), then refines once on a half-step grid around the best
    point.  Supports at most 4 intervals."""
    if dataset.interval_count > 4:
        raise DomainError("oracle supports at most 4 intervals")
    if grid < 16:
        raise DomainError("oracle grid must be >= 16")
    secants = dataset.secants()
    gaps = tuple(dataset.gap(i) for i in range(dataset.interval_count))
    smax = max(secants)
    if smax == 0.0:
        return CurvatureValue(0.0)
    step = 4.0 * smax / grid
    levels = np.arange(grid + 1, dtype=float) * step
    n_nodes = len(dataset.nodes)
    best, d = _chain_dp([levels] * n_nodes, secants, gaps)
    offsets = np.array([-step, -0.5 * step, 0.0, 0.5 * step, step])
    refined = [np.unique(np.maximum(0.0, di + offsets)) for di in d]
    best2, _ = _chain_dp(refined, secants, gaps)
    value = min(best, best2)
    if math.isinf(value):
        return INFINITE
    return CurvatureValue(value)
