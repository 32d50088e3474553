"""Exception hierarchy shared by all modules."""


class FormError(Exception):
    """Base class for every error raised by formwitt."""


class FieldMismatchError(FormError, ValueError):
    pass


class PreconditionError(FormError, ValueError):
    """An operation was called outside its documented domain."""


class HypothesisError(FormError):
    """A Witt-type extension problem violates one of its hypotheses.

    ``condition`` names the failed hypothesis, e.g. ``"kernel"`` or ``"(2)"``.
    """

    def __init__(self, condition, message=None):
        self.condition = condition
        super().__init__(message or f"hypothesis violated: {condition}")


class CertificationError(FormError, AssertionError):
    """A constructed object failed its post-construction certificate."""


class UnliftableError(FormError, ValueError):
    pass


class BudgetExceeded(FormError):
    def __init__(self, needed, budget):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} candidates, budget is {budget}")


class InfiniteFieldError(FormError, ValueError):
    """Enumeration was requested over a field that is not finite."""
