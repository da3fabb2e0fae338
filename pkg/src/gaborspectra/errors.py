"""Exception types shared across the package."""


class GaborSpectraError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(GaborSpectraError, ValueError):
    """Invalid argument values or inconsistent inputs."""


class ModulusMismatchError(ValidationError):
    """Objects indexed over different Z_M rings were combined."""


class NotAFrameError(GaborSpectraError):
    """The system does not span C^M (rank-deficient frame operator)."""


class BudgetExceededError(GaborSpectraError):
    """An exact computation would exceed the operation budget.

    Carries the cost estimate so callers can report it instead of
    silently truncating the computation.
    """

    def __init__(self, message: str, estimated_ops: float, budget: float):
        super().__init__(message)
        self.estimated_ops = float(estimated_ops)
        self.budget = float(budget)
