"""Exception hierarchy shared by all sic modules."""


class SicError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimePower(SicError):
    """Requested field order is not a prime power."""


class DivisionByZero(SicError):
    """Multiplicative inverse of the zero element requested."""


class InvalidDimension(SicError):
    """Reed-Solomon dimension outside the admissible range."""


class InvalidShortening(SicError):
    """Shortening depth outside the admissible range, or metadata missing."""


class ParameterOutOfRange(SicError):
    """An operation precondition on its integer parameters is violated."""


class NotConstantWeight(SicError):
    """A constant-weight certificate was requested for a non-constant-weight matrix."""


class TooFewColumns(SicError):
    """Pairwise column statistics need at least two columns."""


class BudgetExceeded(SicError):
    """Exhaustive enumeration would exceed the configured row-scan budget."""


class ConvergenceFailure(SicError):
    """A root bracket or optimizer failed to converge."""


class DomainError(SicError):
    """Real-valued function evaluated outside its open domain."""


class UnknownKind(SicError):
    """Unrecognized bound or formula selector."""


class MalformedFile(SicError):
    """Matrix file violates the SIC v1 format."""
