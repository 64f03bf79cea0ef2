"""Exception taxonomy shared across the package."""


class OrdboolError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidLabel(OrdboolError):
    """Element label is empty, contains whitespace, or misuses the ``_`` prefix."""


class DuplicateLabel(OrdboolError):
    """The same label was declared twice within one poset."""


class UnknownLabel(OrdboolError):
    """A label was referenced that the poset does not contain."""


class CycleDetected(OrdboolError):
    """The generators imply x < x for some element."""


class BoundsViolation(OrdboolError):
    """A declared bottom is not strictly least, or a declared top not strictly greatest."""


class TooSmall(OrdboolError):
    """Fewer than two elements after bound synthesis."""


class EmptyInput(OrdboolError):
    """An operation that requires a nonempty set was given an empty one."""


class AmbiguousBounds(OrdboolError):
    """Several candidates tie for the extreme position, so no unique bound exists."""


class TooManyAtoms(OrdboolError):
    """Powerset construction refused: the subset blowup would be too large."""


class DegenerateConditional(OrdboolError):
    """A conditioning probability is zero, so the ratio test is undefined."""


class SignedMisuse(OrdboolError):
    """A signed set appeared in a position the operators do not define."""


class UnknownFixture(OrdboolError):
    """No built-in fixture with the requested name."""


class EvalTypeError(OrdboolError):
    """An expression applied an operator to a value of the wrong kind."""


class ParseError(OrdboolError):
    """Syntax error with an optional source position (1-based)."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, col {column}: {message}"
        elif column is not None:
            message = f"col {column}: {message}"
        super().__init__(message)
