"""Custom exceptions for chebq.

Every exception carries the process exit code the command line maps it to.
"""


class ChebqError(Exception):
    """Base exception for chebq errors."""
    exit_code = 1


class ConfigurationError(ChebqError):
    """Invalid configuration value or out-of-range size parameter."""
    exit_code = 1


class UsageError(ChebqError):
    """Error raised when an operation is called with invalid arguments."""
    exit_code = 1


class DomainError(UsageError):
    """Error when a variable lies outside the domain of a map or polynomial."""
    pass


class OutputError(ChebqError):
    """Error writing or reading an output file."""
    exit_code = 2


class VerificationError(ChebqError):
    """A verification suite reported a deviation above tolerance."""
    exit_code = 3


class QChTConstructionError(VerificationError):
    """The Chebyshev transform circuit failed its build-time self-check."""
    pass


class NumericalError(ChebqError):
    """Error related to non-finite or degenerate numerical results."""
    exit_code = 4


class DegenerateInputError(NumericalError):
    """Post-selection succeeded with vanishing probability."""
    pass
