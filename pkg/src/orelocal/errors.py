"""Exception hierarchy.

Every error carries a short ``code`` string; the session interpreter prints it
in diagnostics so scripts can be checked against golden output.
"""


class OreLocalError(Exception):
    code = "ERROR"


class PresentationError(OreLocalError):
    code = "INVALID_PRESENTATION"

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class AmbientMismatch(OreLocalError):
    code = "AMBIENT_MISMATCH"


class NotCommutative(OreLocalError):
    code = "NOT_COMMUTATIVE"


class NotEliminable(OreLocalError):
    code = "NOT_ELIMINABLE"


class NotDivisible(OreLocalError):
    code = "NOT_DIVISIBLE"


class InvalidOreSet(OreLocalError):
    code = "INVALID_ORE_SET"


class NotInS(OreLocalError):
    code = "NOT_IN_S"


class IntersectionEmpty(OreLocalError):
    """The candidate ideal provably misses the Ore set.

    ``certificate`` holds whatever proves it (kernel basis plus the
    type-specific emptiness data).
    """

    code = "INTERSECTION_EMPTY"

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class BoundExceeded(OreLocalError):
    code = "BOUND_EXCEEDED"


class NotInvertible(OreLocalError):
    code = "NOT_INVERTIBLE"


class InvertibilityUnknown(OreLocalError):
    code = "INVERTIBILITY_UNKNOWN"


class ParseError(OreLocalError):
    code = "PARSE_ERROR"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position


class UndefinedName(OreLocalError):
    code = "UNDEFINED_NAME"


class InvariantViolation(OreLocalError):
    """Internal consistency check failed; this is a bug, not bad input."""

    code = "INVARIANT_VIOLATION"


class InvalidFraction(OreLocalError):
    code = "INVALID_FRACTION"
