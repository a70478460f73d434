"""Exception types raised by the library."""


class PsetError(Exception):
    """Base class for all library errors."""


class SingularMatrix(PsetError, ArithmeticError):
    pass


class AsymmetricMatrix(PsetError, ValueError):
    pass


class DimensionMismatch(PsetError, ValueError):
    pass


class IndexOutOfRange(PsetError, IndexError):
    pass


class PreconditionViolated(PsetError, ValueError):
    pass


class CardinalityTooSmall(PreconditionViolated):
    pass


class InvalidSpec(PsetError, ValueError):
    pass


class CapExceeded(PsetError, ValueError):
    pass


class InternalInvariantError(PsetError, RuntimeError):
    """A proven identity failed to hold; indicates a defect in the kernels."""


class ParseError(PsetError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
