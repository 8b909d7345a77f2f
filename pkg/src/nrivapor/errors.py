"""Exception classes shared across the package."""


class NrivaporError(Exception):
    """Base class for all package errors."""


class SingularSystem(NrivaporError):
    """The trace-constrained steady-state system is numerically singular."""


class StepTooLarge(NrivaporError):
    """RK4 step size violates the stability precondition."""


class ZeroProbe(NrivaporError):
    """Probe Rabi frequency is zero; polarizabilities are undefined."""


class ClausiusMossottiPole(NrivaporError):
    """Local-field denominator is within tolerance of zero."""


class NoIntervals(NrivaporError):
    """Extremum requested but the interval list is empty."""


class AllPointsFailed(NrivaporError):
    """Every grid point of a sweep errored."""
