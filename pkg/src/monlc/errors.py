class TheoremViolation(AssertionError):
    """A computed result contradicts a proven structural identity.

    These indicate a bug in the engine, never a property of the input, and the
    command line front-end maps them to exit status 2.
    """


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


def check(condition, message):
    if not condition:
        raise TheoremViolation(message)
