"""Exception hierarchy.

``DataError`` subclasses map to CLI exit status 2.
"""


class Exact01Error(Exception):
    pass


class DataError(Exact01Error):
    pass


class SingularSystem(Exact01Error):
    pass


class BadLabelAlphabet(DataError):
    pass


class LengthMismatch(DataError):
    pass


class EmptyDataset(DataError):
    pass


class DimensionExceedsCount(DataError):
    pass


class NoViableModel(DataError):
    pass


class DegenerateData(DataError):
    pass


class RaggedRows(DataError):
    pass


class ParseError(DataError):
    def __init__(self, row, column, message=""):
        self.row = row
        self.column = column
        super().__init__(f"row {row}, column {column}: {message}".rstrip(": "))


class NotSeparable(Exact01Error):
    pass


class BadFoldCount(Exact01Error):
    pass


class InsufficientPoints(Exact01Error):
    pass
