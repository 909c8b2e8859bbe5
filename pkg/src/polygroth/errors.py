"""Exception taxonomy shared by the engine and the CLI."""


class EngineError(Exception):
    """Base class for every error raised by this package."""


class UsageError(EngineError):
    """Caller misuse: dimension mismatches, malformed arguments."""


class DomainError(EngineError):
    """Operation undefined for the given value (e.g. faces of an empty set)."""


class ResourceError(EngineError):
    """A hard resource cap (ambient dimension, rows, hyperplanes) was exceeded."""


class ParseError(UsageError):
    """Syntax error in a text input; carries line/column for diagnostics."""

    def __init__(self, message, line=None, col=None):
        super().__init__(message)
        self.line = line
        self.col = col

    def __str__(self):
        base = super().__str__()
        if self.line is not None:
            return f"line {self.line}, col {self.col}: {base}"
        return base


class FragmentError(ParseError):
    """Input is syntactically valid but outside the supported fragment."""


class InvariantError(EngineError):
    """Constructing a value would break one of its structural invariants."""
