# errors.py


class HornToolkitError(Exception):
    """Base class for every error raised by the toolkit."""


class ShapeError(HornToolkitError, ValueError):
    """Ground set, cardinality or matrix dimensions do not fit together."""


class DomainError(HornToolkitError, ValueError):
    """An operation was called outside of its mathematical domain."""


class ResourceError(HornToolkitError, RuntimeError):
    """An exhaustive search would exceed the configured budget."""


class PayloadError(HornToolkitError, ValueError):
    """
    Ошибка разбора JSON.
    line/column/offset указывают место ошибки, если упал сам json.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0, offset: int = 0):
        super().__init__(message)
        self.line = line
        self.column = column
        self.offset = offset

    def describe(self) -> str:
        if self.line:
            return f"{self} (line {self.line}, column {self.column}, char {self.offset})"
        return str(self)


class InvariantViolation(HornToolkitError, AssertionError):
    """A postcondition that must always hold was found broken."""
