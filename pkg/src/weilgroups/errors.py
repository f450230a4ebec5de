"""
Exceptions raised by weilgroups.

Every error is a ``ValueError`` carrying a machine-readable ``code`` so the
CLI can report it in JSON mode and callers can still catch plain
``ValueError``.

Errors raised while a pydantic model validates its fields reach the caller
as ``pydantic.ValidationError``, also a ``ValueError`` carrying the same
message.
"""

from enum import Enum
from typing import Any, Dict


class ErrorCode(str, Enum):
    """Machine-readable error codes emitted by the CLI in JSON mode."""
    UNDEFINED = "undefined"
    INVALID_ARGUMENT = "invalid_argument"
    POLYNOMIAL_FORMAT = "polynomial_format"
    GROUP_LABEL = "group_label"
    NOT_PRIME = "not_prime"
    CONSTANT_TERM = "constant_term_vanishes"
    TOO_MANY_GENERATORS = "too_many_generators"
    SPAN_MISMATCH = "span_mismatch"
    MULTIPLE_ROOTS = "multiple_roots"
    REJECTED_WEIL = "rejected_weil_polynomial"
    NOT_WEIL = "not_weil_polynomial"
    WRONG_ORDER = "wrong_order"
    FACTORS_NOT_NESTED = "factors_not_nested"
    POLYGON_CONDITION = "polygon_condition_violated"
    SINGULAR_MATRIX = "singular_matrix"
    NOT_LOCAL = "not_local"
    BUDGET_EXCEEDED = "budget_exceeded"
    CONFIGURATION = "configuration"


class WeilGroupsError(ValueError):
    """Base class for all weilgroups errors."""

    code: ErrorCode = ErrorCode.INVALID_ARGUMENT

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the JSON error record used by the CLI."""
        record: Dict[str, Any] = {"code": self.code.value, "message": self.message}
        if self.details:
            record["details"] = {key: str(value) for key, value in self.details.items()}
        return record


class UndefinedError(WeilGroupsError):
    code = ErrorCode.UNDEFINED


class InvalidArgumentError(WeilGroupsError):
    code = ErrorCode.INVALID_ARGUMENT


class PolynomialFormatError(WeilGroupsError):
    code = ErrorCode.POLYNOMIAL_FORMAT


class GroupLabelError(WeilGroupsError):
    code = ErrorCode.GROUP_LABEL


class NotPrimeError(WeilGroupsError):
    code = ErrorCode.NOT_PRIME


class ConstantTermError(WeilGroupsError):
    code = ErrorCode.CONSTANT_TERM


class TooManyGeneratorsError(WeilGroupsError):
    code = ErrorCode.TOO_MANY_GENERATORS


class SpanMismatchError(WeilGroupsError):
    code = ErrorCode.SPAN_MISMATCH


class MultipleRootsError(WeilGroupsError):
    code = ErrorCode.MULTIPLE_ROOTS


class RejectedWeilPolynomialError(WeilGroupsError):
    code = ErrorCode.REJECTED_WEIL


class NotWeilPolynomialError(WeilGroupsError):
    code = ErrorCode.NOT_WEIL


class WrongOrderError(WeilGroupsError):
    code = ErrorCode.WRONG_ORDER


class FactorsNotNestedError(WeilGroupsError):
    code = ErrorCode.FACTORS_NOT_NESTED


class PolygonConditionError(WeilGroupsError):
    code = ErrorCode.POLYGON_CONDITION


class SingularMatrixError(WeilGroupsError):
    code = ErrorCode.SINGULAR_MATRIX


class NotLocalError(WeilGroupsError):
    code = ErrorCode.NOT_LOCAL


class BudgetExceededError(WeilGroupsError):
    code = ErrorCode.BUDGET_EXCEEDED


class ConfigurationError(WeilGroupsError):
    code = ErrorCode.CONFIGURATION
