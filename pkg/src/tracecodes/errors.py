"""Exception hierarchy.

Every error raised on purpose by the library derives from ``TraceCodeError``;
the CLI prints the class name in its diagnostic.
"""

from __future__ import annotations


class TraceCodeError(Exception):
    """Base class for library errors."""


class NonPrimeCharacteristic(TraceCodeError, ValueError):
    pass


class ReducibleModulus(TraceCodeError, ValueError):
    pass


class MissingConwayEntry(TraceCodeError, LookupError):
    pass


class DivisionByZero(TraceCodeError, ZeroDivisionError):
    pass


class FieldMismatch(TraceCodeError, ValueError):
    pass


class NonDivisorDegree(TraceCodeError, ValueError):
    pass


class DimensionMismatch(TraceCodeError, ValueError):
    pass


class InvalidTower(TraceCodeError, ValueError):
    pass


class IndexOutOfRange(TraceCodeError, IndexError):
    pass


class EmptyDelta(TraceCodeError, ValueError):
    pass


class ExponentOutOfRange(TraceCodeError, ValueError):
    pass


class DeltaNotCosetClosed(TraceCodeError, ValueError):
    pass


class NotDualContaining(TraceCodeError, ValueError):
    pass


class BoundViolated(TraceCodeError, ValueError):
    pass


class CertificationFailed(TraceCodeError, RuntimeError):
    pass


class InvalidDerivation(TraceCodeError, ValueError):
    pass


class BudgetExceeded(TraceCodeError, RuntimeError):
    pass


class MalformedFile(TraceCodeError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
