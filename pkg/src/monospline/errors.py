"""Exception hierarchy.

Exit-code mapping used by the command line tool:

* ``DomainError``     -> 2 (bad numeric input, out-of-domain evaluation)
* ``RangeError``      -> 3 (construction used outside its applicability range)
* ``InfeasibleError`` -> 4 (data that no monotone interpolant can match)
"""


class MonosplineError(Exception):
    """Base class for all library errors."""


class DomainError(MonosplineError, ValueError):
    """Invalid numeric input or evaluation outside a function's domain."""


class RangeError(MonosplineError, ValueError):
    """Data outside the applicability range of the requested construction."""


class InfeasibleError(MonosplineError, ValueError):
    """Hermite data that admits no monotone interpolant (e.g. zero gap
    with positive end slopes, or non-monotone values)."""


class ConfigError(MonosplineError, ValueError):
    """A tuning parameter (e.g. a smoothing window half-width) violates
    its admissibility constraint."""


class JetMismatchError(MonosplineError, ValueError):
    """Two pieces to be patched disagree in value or first derivative at
    the common node beyond tolerance."""


class FlatNodeError(MonosplineError, ValueError):
    """C^2 patching requested at a node with zero first derivative, which
    the local patching construction does not support."""


class PatchCertificateError(MonosplineError, ArithmeticError):
    """The a-posteriori certificate of a patched function (monotonicity or
    curvature factor) failed."""
