"""Exception types raised by the library."""


class QcdephError(ValueError):
    """Base class for all library errors."""


class NonSquare(QcdephError):
    pass


class NonHermitian(QcdephError):
    pass


class NotPSD(QcdephError):
    pass


class BadShape(QcdephError):
    pass


class BadIndex(QcdephError):
    pass


class InvalidParams(QcdephError):
    pass


class EmptyInput(QcdephError):
    pass


class InvariantViolation(QcdephError):
    """A matrix failed a density-matrix check.

    ``which`` is one of ``"shape"``, ``"hermiticity"``, ``"trace"`` or
    ``"positivity"``.
    """

    def __init__(self, which, message):
        super().__init__(message)
        self.which = which
