"""Exception types raised by the library."""


class InvalidParameter(ValueError):
    """An argument is outside the domain of the operation."""


class ParseError(ValueError):
    """Malformed diagram, index set or op word text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
