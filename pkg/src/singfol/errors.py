"""Exception hierarchy shared by all singfol modules."""


class SingfolError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(SingfolError):
    """Operands live over different variable counts."""


class PreconditionError(SingfolError):
    """A documented precondition of an operation was violated by the caller."""


class InputRejected(SingfolError):
    """User-supplied data (spec file, generators, options) is invalid."""


class ParseError(InputRejected):
    """Lexical or syntactic error in the foliation DSL, with position info."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class InternalCheckError(SingfolError):
    """A machine-checked mathematical invariant failed.

    These checks guard statements that are theorems for valid input, so a
    failure always indicates a bug (or corrupted input that slipped past
    validation), never a user error.
    """
