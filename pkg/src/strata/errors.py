"""Exception types raised by the toolkit."""


class StrataError(ValueError):
    """Invalid input data (as opposed to a programming error)."""


class ParseError(StrataError):
    """Malformed file contents; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
