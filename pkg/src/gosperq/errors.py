"""Exception hierarchy shared by the numeric and formal engines."""


class GosperQError(Exception):
    """Base class for every error raised by this package."""


class DomainError(GosperQError, ValueError):
    """An argument lies outside the region where an operation is defined."""


class NonConvergenceError(GosperQError, ArithmeticError):
    """A series or product hit its term cap before meeting the tolerance."""


class RangeError(GosperQError, OverflowError):
    """An intermediate quantity overflowed double precision."""


class NumericInstabilityError(GosperQError, ArithmeticError):
    """Finite-difference estimates are dominated by cancellation."""


class ContractError(GosperQError, ValueError):
    """A formal-series operation was called with incompatible parameters."""


class IdentityEvaluationError(GosperQError):
    """Wraps an evaluation failure with the identity id that triggered it."""

    def __init__(self, identity_id: str, cause: Exception):
        super().__init__(f"{identity_id}: {type(cause).__name__}: {cause}")
        self.identity_id = identity_id
        self.cause = cause
