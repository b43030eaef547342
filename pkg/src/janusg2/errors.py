"""Exception types raised by the analytic engine, Fock oracle, and optimizer."""


class JanusError(Exception):
    """Base class for all package-specific errors."""


class SingularOverlapError(JanusError):
    """|1 - z| fell below the singularity guard; the overlap closed forms diverge."""


class InfeasibleAmplitudeError(JanusError):
    """No nonnegative amplitude solves the normalization quadratic for the given |eta|."""


class UndefinedG2Error(JanusError):
    """Mean photon number is numerically zero, so g2 is undefined (vacuum-dominated state)."""


class UnnormalizedInputError(JanusError):
    """A g2 evaluation was requested for parameters violating the normalization constraint."""


class CutoffTooSmallError(JanusError):
    """Certified truncation tail exceeds tolerance for the requested Fock cutoff."""


class CutoffMismatchError(JanusError):
    """Two Fock vectors with different cutoffs were combined."""


class ZeroVectorError(JanusError):
    """Moments were requested for a numerically zero Fock vector."""


class UnsupportedOrderError(JanusError):
    """Series order outside the implemented range."""


class FormulaMismatchError(JanusError):
    """Requested scan formula is incompatible with the grid's fixed parameters."""


class EmptyFeasibleSetError(JanusError):
    """Every point of a grid scan was infeasible."""


class ScanFormatError(JanusError):
    """A scan file could not be parsed.

    Carries ``line`` (1-based) and ``column`` (1-based, 0 when unknown) of the
    first offending character.
    """

    def __init__(self, message, line=0, column=0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
