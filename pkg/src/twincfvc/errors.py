"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: input, validity and structural errors
exit with 2, budget errors with 3.
"""


class CfvcError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CfvcError, ValueError):
    """A caller passed an argument outside an operation's domain."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidityError(CfvcError):
    """An instance violates a structural promise (connectivity, twin cover)."""


class StructuralError(CfvcError):
    """A precondition on shortest-path structure does not hold."""


class BudgetError(CfvcError):
    """An exhaustive search ran past its node budget."""
