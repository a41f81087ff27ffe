"""Exception types shared across the library."""


class HeptalibError(Exception):
    """Base class for all library errors."""


class InputError(HeptalibError):
    """Malformed or out-of-contract input (bad vertex id, self-loop, ...)."""


class CapExceededError(InputError):
    """An operation with a hard instance-size cap was given a larger instance."""


class BudgetExceededError(HeptalibError):
    """A bounded search ran out of its step budget.

    Carries how much work was done so callers can distinguish "searched
    everything, found nothing" from "gave up".
    """

    def __init__(self, message: str, steps: int = 0, partial=None):
        super().__init__(message)
        self.steps = steps
        self.partial = partial


class SearchExhaustedError(HeptalibError):
    """A constructive search exhausted all candidates without a result.

    Raised only on inputs outside the guaranteed hypotheses (for example
    localizing a jump that is local but not short); never on instances the
    structural guarantees cover.
    """
