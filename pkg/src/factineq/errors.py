"""Exception hierarchy shared by every factineq module."""


class FactineqError(Exception):
    """Base class for all errors raised by this package."""


class ResourceLimitError(FactineqError):
    """A configured cap (factorial size, sweep range) would be exceeded."""


class EvaluationError(FactineqError):
    """An expression could not be evaluated to an exact rational."""

    def __init__(self, message, subexpr=None):
        super().__init__(message)
        self.subexpr = subexpr


class DivisionByZeroError(EvaluationError, ZeroDivisionError):
    pass


class DomainError(EvaluationError, ValueError):
    """Factorial or power applied outside its domain, or a nonpositive term."""


class UnboundVariableError(EvaluationError):
    pass


class ParseError(FactineqError):
    """Syntax error in an expression, with the byte offset of the failure."""

    def __init__(self, message, offset, expected=None, text=None):
        self.offset = offset
        self.expected = expected
        self.text = text
        detail = f"{message} at offset {offset}"
        if expected:
            detail += f", expected {expected}"
        super().__init__(detail)


class DerivationInputError(FactineqError):
    """Inputs to a bound derivation do not fit together."""


class UnknownSubjectError(FactineqError, KeyError):
    def __str__(self):
        return f"unknown subject id: {self.args[0]!r}"


class ClaimFileError(FactineqError):
    def __init__(self, message, path=None, line=None, offset=None):
        self.path = path
        self.line = line
        self.offset = offset
        where = ":".join(str(p) for p in (path, line, offset) if p is not None)
        super().__init__(f"{where}: {message}" if where else message)
