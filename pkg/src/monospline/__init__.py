"""Monotone Hermite interpolation with provably minimal curvature.

Exact minimal-curvature formula for the two-point problem, the optimal
monotone quadratic spline attaining it, three classical constructions
with their quasi-optimality certificates, C^2 mollification and node
patching, global assembly over arbitrary node sets, and the monotone
trace seminorm for value-only data.
"""

from .assembly import (
    ASSEMBLY_METHODS,
    CurveSegment,
    GlobalInterpolant,
    HermiteDataset,
    IntervalRecord,
    SeminormResult,
    assemble,
    local_data,
    optimize_slopes,
    seminorm_lower_bound,
    seminorm_oracle,
    seminorm_with_slopes,
)
from .classical import (
    BernsteinSolution,
    bernstein_interpolant,
    bezier_interpolant,
    bezier_peak_curvature,
    default_bernstein_lambda,
    in_whitney_range,
    whitney_interpolant,
)
from .errors import (
    ConfigError,
    DomainError,
    FlatNodeError,
    InfeasibleError,
    JetMismatchError,
    MonosplineError,
    PatchCertificateError,
    RangeError,
)
from .piecewise import (
    ParametricCurve,
    PiecewisePolynomial,
    SmoothnessReport,
    curve_eval,
    sample,
    smoothness_report,
)
from .smoothing import (
    Corner,
    JetTriple,
    KAPPA_PATCH,
    MollifyConfig,
    PATCH_CURVATURE_FACTOR,
    c2_patch,
    corner_set,
    mollify_c2,
)
from .twopoint import (
    CurvatureValue,
    INFINITE,
    TwoPointData,
    VelocityProfile,
    envelope_integral,
    lower_envelope,
    minimal_curvature,
    minimal_curvature_branch,
    minimal_curvature_oracle,
    optimal_interpolant,
    saturation_threshold,
    upper_envelope,
)

__version__ = "0.1.0"

__all__ = [
    "ASSEMBLY_METHODS",
    "BernsteinSolution",
    "ConfigError",
    "Corner",
    "CurvatureValue",
    "CurveSegment",
    "DomainError",
    "FlatNodeError",
    "GlobalInterpolant",
    "HermiteDataset",
    "INFINITE",
    "InfeasibleError",
    "IntervalRecord",
    "JetMismatchError",
    "JetTriple",
    "KAPPA_PATCH",
    "MollifyConfig",
    "MonosplineError",
    "PATCH_CURVATURE_FACTOR",
    "ParametricCurve",
    "PatchCertificateError",
    "PiecewisePolynomial",
    "RangeError",
    "SeminormResult",
    "SmoothnessReport",
    "TwoPointData",
    "VelocityProfile",
    "assemble",
    "bernstein_interpolant",
    "bezier_interpolant",
    "bezier_peak_curvature",
    "c2_patch",
    "corner_set",
    "curve_eval",
    "default_bernstein_lambda",
    "envelope_integral",
    "in_whitney_range",
    "local_data",
    "lower_envelope",
    "minimal_curvature",
    "minimal_curvature_branch",
    "minimal_curvature_oracle",
    "mollify_c2",
    "optimal_interpolant",
    "optimize_slopes",
    "sample",
    "saturation_threshold",
    "seminorm_lower_bound",
    "seminorm_oracle",
    "seminorm_with_slopes",
    "smoothness_report",
    "upper_envelope",
    "whitney_interpolant",
]
