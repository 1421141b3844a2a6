"""Exception hierarchy shared across the package.

Two families matter to callers: InputError (the caller handed us something
malformed, CLI exit code 1) and InternalError (we computed something that
failed its own certificate, CLI exit code 2). OracleInapplicable is neither:
it signals that the iterative cross-check declined the instance.
"""


class ZariskiError(Exception):
    """Base class for every error raised by this package."""


class InputError(ZariskiError):
    """The input violates a documented precondition."""


class InternalError(ZariskiError):
    """An internal consistency check failed; this is a bug, not bad input."""


# -- input errors -----------------------------------------------------------


class ConfigurationError(InputError):
    """Invalid curve configuration."""


class NotSymmetric(ConfigurationError):
    pass


class NegativeOffDiagonal(ConfigurationError):
    def __init__(self, i: int, j: int, value=None):
        self.i = i
        self.j = j
        self.value = value
        detail = f" (value {value})" if value is not None else ""
        super().__init__(f"off-diagonal entry at ({i}, {j}) is negative{detail}")


class DuplicateName(ConfigurationError):
    pass


class EmptyConfiguration(ConfigurationError):
    pass


class DimensionMismatch(InputError):
    pass


class EmptySupport(InputError):
    pass


class NotEffective(InputError):
    """A divisor that must be effective has a negative coefficient."""


class MalformedProblem(InputError):
    """Inconsistent linear program data (shapes or crossed bounds)."""


class InputNotNef(InputError):
    """An argument that must be nef fails some intersection product."""


class ProblemFormatError(InputError):
    """A JSON problem or report file does not match the documented format."""


# -- internal errors --------------------------------------------------------


class InternalInvariantViolated(InternalError):
    pass


class CertificateFailure(InternalError):
    """A computed result failed exact re-verification before being returned."""


class JoinNotNef(InternalError):
    """The componentwise max of two nef divisors failed the nef check."""


class WitnessNotFound(InternalError):
    """No nef witness was found although the matrix is not negative definite."""


# -- signals ----------------------------------------------------------------


class OracleInapplicable(ZariskiError):
    """The iterative oracle cannot handle this instance; not an error."""
