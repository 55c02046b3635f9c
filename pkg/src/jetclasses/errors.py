"""Exception hierarchy shared by every module of the package."""

__all__ = [
    "JetClassError",
    "IncompatibleRingError",
    "UndefinedDegreeError",
    "NonUnitError",
    "ParseError",
    "UnknownVariableError",
    "ResourceExhaustedError",
    "EmptyVarietyError",
    "GradingError",
    "RingTooSmallError",
    "NotAChainError",
    "InvalidFanError",
    "OutsideSupportError",
    "NotARefinementError",
    "InsufficientTruncationError",
    "OracleScaleError",
]


class JetClassError(Exception):
    """Base class for all errors raised by :mod:`jetclasses`."""


class IncompatibleRingError(JetClassError, ValueError):
    pass


class UndefinedDegreeError(JetClassError, ValueError):
    pass


class NonUnitError(JetClassError, ArithmeticError):
    pass


class ParseError(JetClassError, ValueError):
    """Syntax error with a 1-based line/column position."""

    def __init__(self, message, line=1, column=1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnknownVariableError(ParseError):
    pass


class ResourceExhaustedError(JetClassError, RuntimeError):
    """A computation exceeded its configured budget."""


class EmptyVarietyError(JetClassError, ValueError):
    pass


class GradingError(JetClassError, ValueError):
    pass


class RingTooSmallError(JetClassError, ValueError):
    pass


class NotAChainError(JetClassError, ValueError):
    pass


class InvalidFanError(JetClassError, ValueError):
    pass


class OutsideSupportError(JetClassError, ValueError):
    pass


class NotARefinementError(JetClassError, ValueError):
    pass


class InsufficientTruncationError(JetClassError, ValueError):
    pass


class OracleScaleError(JetClassError, ValueError):
    pass
