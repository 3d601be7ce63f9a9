"""Exception types shared across the package."""


class DgQuiverError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(DgQuiverError):
    """A value violates a structural invariant (unknown id, endpoint mismatch, ...)."""


class QuiverMismatchError(DgQuiverError):
    """Two values built over different quivers were combined."""


class PreconditionError(DgQuiverError):
    """An operation's precondition does not hold for the given input."""


class GradingError(DgQuiverError):
    """A grading is missing, or an element is not homogeneous as required."""


class StabilizationError(DgQuiverError):
    """Truncated dimensions did not stabilize within the given length bound."""


class ParseError(DgQuiverError):
    """Syntax or consistency error in DSL text."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", col {col}" if col is not None else "") + ")"
        super().__init__(message + where)
