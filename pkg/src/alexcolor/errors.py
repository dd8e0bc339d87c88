"""Exception hierarchy shared by every module."""


class AlexColorError(Exception):
    """Base class for errors raised by alexcolor."""


class MuMismatchError(AlexColorError, ValueError):
    """Operands live in Laurent rings with different numbers of variables."""


class ParseError(AlexColorError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DiagramError(ParseError):
    """A diagram is syntactically fine but violates a structural invariant."""


class SpecializationError(AlexColorError, ValueError):
    """Bad specialization: wrong arity, non-unit image, or unsuitable target ring."""


class BudgetExceeded(AlexColorError):
    def __init__(self, message, required=None):
        self.required = required
        super().__init__(message)
