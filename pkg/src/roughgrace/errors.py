"""Exception hierarchy shared by the library and the CLI.

The CLI maps each class to a distinct exit code (see cli.py), so library
code should pick the most specific class that applies.
"""


class RoughGraceError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(RoughGraceError):
    """Bad parameter or configuration value (wrong range, unknown name)."""


class ParseError(RoughGraceError):
    """Malformed input file (CSV or JSON)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(RoughGraceError):
    """Reference to an object outside the current universe or graph."""
