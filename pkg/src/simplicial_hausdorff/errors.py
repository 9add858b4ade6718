"""Exception hierarchy.

Everything raised for bad user input derives from :class:`InputError`, which the
CLI maps to exit code 2.
"""


class SimplicialError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SimplicialError, ValueError):
    """Malformed or inconsistent input data."""


class EmptyComplex(InputError):
    pass


class InvalidSimplex(InputError):
    pass


class NotDownwardClosed(InputError):
    pass


class AmbientDimMismatch(InputError):
    pass


class MaxDimMismatch(InputError):
    pass


class NonInjective(InputError):
    """Two vertices (or points) share identical coordinates."""


class EmptyCloud(InputError):
    pass


class InvalidPointCloud(InputError):
    pass


class VertexNotFound(InputError, KeyError):
    pass


class LastVertex(InputError):
    pass


class NonPositiveEps(InputError):
    pass


class UnsupportedDimension(InputError):
    pass


class ParseError(InputError):
    pass


class UnknownVertexInSimplex(ParseError):
    pass


class RaggedRows(ParseError):
    def __init__(self, row: int, expected: int, got: int):
        super().__init__(f"row {row}: expected {expected} columns, got {got}")
        self.row = row


class NonNumericCell(ParseError):
    def __init__(self, row: int, col: int, text: str):
        super().__init__(f"row {row}, column {col}: not a finite number: {text!r}")
        self.row = row
        self.col = col


class EmptyFile(ParseError):
    pass
