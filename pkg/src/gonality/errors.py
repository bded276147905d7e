"""Exception types shared by all modules."""


class DomainError(ValueError):
    """Arguments outside the range where an operation is defined."""


class ConsistencyError(AssertionError):
    """Two routes to the same number disagreed.

    Never caused by user input; always a bug or a falsified claim.
    """
