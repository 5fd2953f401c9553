"""Exception types shared across the solver modules."""


class AttrepError(Exception):
    """Base class for all library errors."""


class KernelRangeError(AttrepError):
    """Multiplier requested beyond the configured truncation order."""


class EvaluationError(AttrepError):
    """Pointwise evaluation requested where the kernel has no pointwise value."""


class InvalidInputError(AttrepError):
    """Arguments violate a documented precondition."""


class BracketError(AttrepError):
    """Root bracket does not contain a sign change."""


class HypothesisViolationError(AttrepError):
    """The configured kernel violates the minimal-kernel/crossing assumptions.

    `wavenumber` names the offending Fourier mode when applicable.
    """

    def __init__(self, message, wavenumber=None):
        super().__init__(message)
        self.wavenumber = wavenumber


class AccuracyError(AttrepError):
    """A truncated sum or quadrature failed its tail/tolerance bound."""


class SingularityError(AttrepError):
    """Kernel derivative evaluated at a non-smooth point (coincident particles)."""


class IntegrationError(AttrepError):
    """Time integration failed; carries the last valid state."""

    def __init__(self, message, last_state=None, time=None):
        super().__init__(message)
        self.last_state = last_state
        self.time = time


class ConvergenceError(AttrepError):
    """Newton iteration failed to converge; carries the residual history."""

    def __init__(self, message, residual_history=None):
        super().__init__(message)
        self.residual_history = list(residual_history or [])


class DomainError(AttrepError):
    """Parameter outside the mathematical domain of the operation."""


class NoVacuumError(DomainError):
    """Newton left the vacuum regime (solution belongs to the linear branch)."""


class ResonanceError(AttrepError):
    """Non-vacuum block has a singular Fourier multiplier.

    `wavenumber` names the resonant mode.
    """

    def __init__(self, message, wavenumber=None):
        super().__init__(message)
        self.wavenumber = wavenumber


class AnsatzError(AttrepError):
    """Requested reduction is inconsistent with the coupling structure."""


class FitError(AttrepError):
    """Not enough data, or ill-conditioned data, for a requested fit."""


class ConfigError(AttrepError):
    """Malformed run configuration; `field` names the offending entry."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
