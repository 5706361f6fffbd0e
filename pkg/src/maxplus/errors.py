"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """A vector's length does not match the ambient space."""


class DomainError(ValueError):
    """An argument is outside the domain of the operation (e.g. a geodesic
    parameter beyond its span)."""


class InputFormatError(ValueError):
    """A text input (point literal or point-set file) could not be parsed.

    Carries ``line`` and ``column`` (1-based) when they are known.
    """

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column
