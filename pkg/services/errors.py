"""Exception hierarchy shared by all services.

The CLI maps ThomError to exit code 1, UsageError to 2 and
VerificationFailure to 3.
"""
from typing import Any, Optional


class ThomError(Exception):
    """Base class for computation failures."""
    exit_code = 1


class UsageError(Exception):
    """Invalid command-line parameters."""
    exit_code = 2


class VerificationFailure(Exception):
    """At least one verification check failed."""
    exit_code = 3

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class PreconditionError(ThomError):
    pass


class NotDivisible(ThomError):
    def __init__(self, remainder: Any):
        super().__init__(f"exact division failed, remainder {remainder}")
        self.remainder = remainder


class IndeterminateForm(ThomError):
    pass


class MissingAssignment(ThomError):
    pass


class ExpressionError(ThomError):
    def __init__(self, message: str, column: Optional[int] = None):
        where = f" at column {column}" if column is not None else ""
        super().__init__(f"{message}{where}")
        self.column = column


class TableError(ThomError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{where}")
        self.line = line
        self.column = column


class MissingEntry(ThomError):
    pass


class TautologicalReciprocity(ThomError):
    pass


class PolynomialityError(ThomError):
    pass


class NotSupersymmetric(ThomError):
    pass


class DegreeBoundError(ThomError):
    pass


class DStabilityError(ThomError):
    pass


class IllPosedExpansion(ThomError):
    pass


class RankDeficient(ThomError):
    """Sample points that do not separate the unknowns of a linear system."""
