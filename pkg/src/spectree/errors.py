"""Exception types shared across the toolkit."""


class InvalidParameterError(ValueError):
    """A parameter is outside the range an operation supports."""


class PreconditionError(ValueError):
    """A documented precondition of an operation is violated."""


class Graph6ParseError(ValueError):
    """Malformed graph6 input; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class NumericalFailureError(RuntimeError):
    """Iterative numerics did not converge; carries the best estimate."""

    def __init__(self, message: str, best_estimate: float, residual: float):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.residual = residual


class ResourceLimitError(RuntimeError):
    """An exhaustive operation was asked to exceed its configured cap."""


class CheckerDisagreementError(RuntimeError):
    """Two independent decision procedures returned different verdicts."""
