"""Exception types shared across the library."""


class UsageError(ValueError):
    """A caller violated an operation's calling contract (bad shapes, bad kinds)."""


class PreconditionError(ValueError):
    """Input objects fail a documented precondition.

    When the failure was diagnosed by a verifier, the offending report is
    attached as ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ContractError(RuntimeError):
    """An internal guarantee failed.  This signals a bug, not bad input."""
