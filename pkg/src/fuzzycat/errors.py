"""Exception hierarchy.

Structural problems that a checker can describe (law violations, dangling
references inside an otherwise parsed structure) are returned as data by the
``validate_*`` functions. The exceptions below are raised when an operation
cannot produce a result at all.
"""


class FuzzyCatError(Exception):
    """Base class for every error raised by this package."""

    def __str__(self):
        # KeyError subclasses would otherwise quote the message
        return str(self.args[0]) if self.args else ""


class ParseError(FuzzyCatError, ValueError):
    """Malformed text; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RangeError(ParseError):
    """A degree outside [0, 1]."""


class UnresolvedReferenceError(ParseError):
    """A file refers to an object, node or arrow it never declared."""


class EmptyAggregateError(FuzzyCatError, ValueError):
    pass


class NodeError(FuzzyCatError, KeyError):
    pass


class ObjectError(FuzzyCatError, KeyError):
    pass


class ArrowError(FuzzyCatError, KeyError):
    pass


class DuplicateIdError(FuzzyCatError, ValueError):
    pass


class PathError(FuzzyCatError, ValueError):
    pass


class GraphError(FuzzyCatError, ValueError):
    def __init__(self, message, violations=()):
        self.violations = list(violations)
        super().__init__(message)


class ComposabilityError(FuzzyCatError, ValueError):
    pass


class TotalityError(FuzzyCatError, LookupError):
    pass


class IdentityError(FuzzyCatError, ValueError):
    pass


class PreorderError(FuzzyCatError, ValueError):
    def __init__(self, message, violations=()):
        self.violations = list(violations)
        super().__init__(message)


class TableError(FuzzyCatError, ValueError):
    pass


class ArrowDegreeError(FuzzyCatError, ValueError):
    pass


class ClosureError(FuzzyCatError, ValueError):
    pass


class AnnotationError(FuzzyCatError, ValueError):
    pass
