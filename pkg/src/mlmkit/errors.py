"""Exception types shared across the package."""


class MLMError(Exception):
    """Base class for all mlmkit errors."""


class ShapeError(MLMError, ValueError):
    """An input violates a structural precondition (variable counts, degrees, arity)."""


class ParseError(ShapeError):
    """Malformed text input. ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class ResourceError(MLMError):
    """A computation would exceed its configured budget.

    ``node`` carries the offending circuit node id when the error comes from
    circuit evaluation.
    """

    def __init__(self, message, node=None):
        self.node = node
        super().__init__(message)
