"""Exception hierarchy shared by every mgrkit module."""


class MgrkitError(Exception):
    """Base class for all errors raised by mgrkit."""


class InvalidParameter(MgrkitError, ValueError):
    """A constructor argument lies outside its domain."""


class AxiomViolation(MgrkitError):
    """A table or parameter choice breaks an algebraic axiom."""


class InvalidOperation(MgrkitError):
    """An operation was applied where it is not defined."""


class ParseError(MgrkitError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DiagramError(MgrkitError):
    """A diagram violates a structural invariant."""


class YOrientationError(DiagramError):
    """A vertex of a diagram is a source or a sink."""


class NameResolutionError(ParseError):
    """A word refers to a variable that was never declared."""
