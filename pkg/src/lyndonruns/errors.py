"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside an operation's domain (empty word, bad interval, ...)."""


class UsageError(ValueError):
    """A configured cap or registry name was violated by the caller."""


class InvariantViolation(AssertionError):
    """A proven property failed on a concrete word.

    ``payload`` carries the witness data (word, runs, positions) so callers
    can serialize the counterexample.
    """

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload or {}
