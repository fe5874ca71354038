"""Exception types raised across gateflow."""


class GateflowError(Exception):
    """Base class for all gateflow errors."""


class NotNormalError(GateflowError, ValueError):
    """Matrix fails the normality test M M^dagger = M^dagger M."""


class NoConvergenceError(GateflowError, RuntimeError):
    """An iterative routine hit its iteration cap."""


class UnknownGateError(GateflowError, LookupError):
    """Requested gate name is not in the catalog."""


class DimensionMismatchError(GateflowError, ValueError):
    """Operand shapes are incompatible."""


class ZeroVectorError(GateflowError, ValueError):
    """A state vector with zero norm was supplied."""


class NotComplexStructuredError(GateflowError, ValueError):
    """A real matrix does not have the 2x2 block form of a complex matrix."""


class IndexOutOfRangeError(GateflowError, IndexError):
    """A basis index lies outside 0 <= i < 4**n."""
