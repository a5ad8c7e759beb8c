"""Exception hierarchy shared by all primeflow modules."""


class PrimeflowError(Exception):
    """Base class for every error raised by primeflow."""


class ConfigError(PrimeflowError, ValueError):
    """Invalid arguments or run configuration."""


class LimitExceededError(PrimeflowError):
    """A requested scale is above the configured counting/enumeration cap."""


class RangeTooLargeError(LimitExceededError):
    """A sieve window is wider than the segment cap."""


class IntegerOverflowError(LimitExceededError):
    """A value is outside the supported unsigned 63-bit range."""


class SingularityError(PrimeflowError, ArithmeticError):
    """The flow is asked to cross (or land on) its pole."""

    def __init__(self, message, t_star=None):
        super().__init__(message)
        self.t_star = t_star


class RadiusError(PrimeflowError, ArithmeticError):
    """Series evaluation requested outside its radius of convergence."""


class BlowUpError(SingularityError):
    """Numerical integration detected the trajectory running into the pole."""


class VerificationError(PrimeflowError):
    """An internal consistency check failed during a run."""
