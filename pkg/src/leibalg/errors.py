"""Exception hierarchy shared by every module.

Errors deriving from :class:`RefusalError` describe inputs the library
declines to handle (bad preconditions, budget overruns, unsupported
fields); the CLI maps them to exit code 2.  :class:`InternalError` means
a computed object failed a re-verification that theory guarantees.
"""


class LeibalgError(Exception):
    pass


class FieldError(LeibalgError, ValueError):
    """Bad field descriptor, zero division, or mixed-field operands."""


class DimensionError(LeibalgError, ValueError):
    pass


class RefusalError(LeibalgError):
    pass


class PreconditionError(RefusalError, ValueError):
    pass


class BudgetExceeded(RefusalError):
    def __init__(self, count, budget, what="subspaces"):
        self.count = count
        self.budget = budget
        self.what = what
        super().__init__(f"enumeration refused: {count} {what} exceeds budget {budget}")


class UnsupportedFieldError(RefusalError):
    pass


class DocumentError(RefusalError, ValueError):
    """Malformed algebra document."""


class InternalError(LeibalgError, RuntimeError):
    pass
