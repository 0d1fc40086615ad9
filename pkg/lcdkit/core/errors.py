"""Exception hierarchy for lcdkit

Every error carries a human-readable message and optional structured details,
and converts to the ErrorResponse model used by the CLI's JSON output.
"""

from typing import Any


class LcdKitError(Exception):
    """Base class for all toolkit errors"""

    error_type = "lcdkit_error"

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_response(self):
        """Convert to the standard error response model"""
        from ..models.schemas import ErrorResponse

        return ErrorResponse(error=self.error_type, message=self.message, details=self.details)


class PreconditionError(LcdKitError, ValueError):
    """An operation precondition was violated"""

    error_type = "precondition"


class DimensionMismatchError(PreconditionError):
    error_type = "dimension_mismatch"


class SingularMatrixError(PreconditionError):
    error_type = "singular_matrix"


class NotLcdError(PreconditionError):
    error_type = "not_lcd"


class FieldCharacteristicError(PreconditionError):
    """Binary-only or odd-only operation called over the wrong field"""

    error_type = "field_characteristic"


class BudgetExceededError(LcdKitError):
    """An exhaustive enumeration would exceed its configured budget"""

    error_type = "budget_exceeded"

    def __init__(self, what: str, required: int, budget: int):
        super().__init__(
            f"{what} needs {required} steps, budget is {budget}",
            {"what": what, "required": required, "budget": budget},
        )
        self.required = required
        self.budget = budget


class FormulaError(LcdKitError, ArithmeticError):
    """An exact division inside a counting formula left a remainder"""

    error_type = "formula"


class MatrixParseError(LcdKitError, ValueError):
    """Matrix text could not be parsed"""

    error_type = "parse"
