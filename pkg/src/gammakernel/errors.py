class GammaKernelError(Exception):
    """Base class for all errors raised by this project.

    ``exit_code`` is the status a command-line task exits with when this
    error reaches the top of the task.
    """

    exit_code = 2


class DomainError(GammaKernelError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ContractViolation(GammaKernelError, ValueError):
    """A documented precondition of an operation was not met by the caller."""


class NumericalFailure(GammaKernelError, ArithmeticError):
    """A numerical procedure (quadrature) did not reach its tolerance."""

    def __init__(self, message, residual=None):
        super(NumericalFailure, self).__init__(message)
        self.residual = residual


class ParseError(ContractViolation):
    """Input data could not be ingested.

    ``row`` is the 1-based data row (header excluded) where the problem
    was found, or None if the problem is not tied to a row.
    """

    def __init__(self, message, path=None, row=None):
        prefix = []
        if path is not None:
            prefix.append(str(path))
        if row is not None:
            prefix.append("row %d" % row)
        if prefix:
            message = "%s: %s" % (", ".join(prefix), message)
        super(ParseError, self).__init__(message)
        self.path = path
        self.row = row


class ConfigError(ContractViolation):
    """Invalid command-line or experiment configuration."""


class VerificationFailed(GammaKernelError):
    """One or more verification checks of an experiment did not pass."""

    exit_code = 1

    def __init__(self, failed_checks):
        names = ", ".join(failed_checks)
        super(VerificationFailed, self).__init__("failed check(s): %s" % names)
        self.failed_checks = list(failed_checks)
