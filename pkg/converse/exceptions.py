"""
converse/exceptions.py

Exception hierarchy. Every error carries an ErrorCode and a context dict
that ends up in the JSON error payload.
"""

from typing import Any, Dict, Optional

from converse.schemas.errors import ERROR_MESSAGES, ErrorCode


class ConverseError(Exception):
    code: ErrorCode = ErrorCode.INVALID_CONFIG

    def __init__(self, detail: Optional[str] = None, **context: Any):
        self.detail = detail or ERROR_MESSAGES.get(self.code, "")
        self.context: Dict[str, Any] = context
        super().__init__(self.detail)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "code": self.code.value,
            "message": self.detail,
            "context": {k: str(v) for k, v in self.context.items()},
        }


# exact_linalg


class NonPositiveDeterminant(ConverseError):
    code = ErrorCode.NON_POSITIVE_DETERMINANT


class UnsatisfiableConstraint(ConverseError):
    code = ErrorCode.UNSATISFIABLE_CONSTRAINT


class NoRepresentative(ConverseError):
    code = ErrorCode.NO_REPRESENTATIVE


class MatrixParseError(ConverseError):
    code = ErrorCode.MATRIX_PARSE_ERROR


# symscalar


class UnknownSymbol(ConverseError):
    code = ErrorCode.UNKNOWN_SYMBOL


# hecke_ring


class NotPrime(ConverseError):
    code = ErrorCode.NOT_PRIME


class InconsistentLevel(ConverseError):
    code = ErrorCode.INCONSISTENT_LEVEL


class CertificateMismatch(ConverseError):
    code = ErrorCode.CERTIFICATE_MISMATCH

    def __init__(self, detail=None, residual=None, step_index=None, **context):
        self.residual = residual
        self.step_index = step_index
        if residual is not None:
            context["residual"] = residual
        if step_index is not None:
            context["step"] = step_index
        super().__init__(detail, **context)


class SideConditionFailed(ConverseError):
    code = ErrorCode.SIDE_CONDITION_FAILED


class UnknownRelationId(ConverseError):
    code = ErrorCode.UNKNOWN_RELATION_ID


class DuplicateRelationId(ConverseError):
    code = ErrorCode.DUPLICATE_RELATION_ID


class UnsupportedExponent(ConverseError):
    code = ErrorCode.UNSUPPORTED_EXPONENT


class NoSolution(ConverseError):
    code = ErrorCode.NO_SOLUTION


class InvalidLevelShape(ConverseError):
    code = ErrorCode.INVALID_LEVEL_SHAPE


class ScriptParseError(ConverseError):
    code = ErrorCode.SCRIPT_PARSE_ERROR

    def __init__(self, detail=None, line=None, column=None, **context):
        self.line = line
        self.column = column
        if line is not None:
            context["line"] = line
        if column is not None:
            context["column"] = column
        super().__init__(detail, **context)


# congruence_subgroup


class NotUnimodular(ConverseError):
    code = ErrorCode.NOT_UNIMODULAR


class CosetLimitExceeded(ConverseError):
    code = ErrorCode.COSET_LIMIT_EXCEEDED


class MemberNotInGamma0(ConverseError):
    code = ErrorCode.MEMBER_NOT_IN_GAMMA0


# analytic


class NonIntegralLeadingPower(ConverseError):
    code = ErrorCode.NON_INTEGRAL_LEADING_POWER


class MissingPrime(ConverseError):
    code = ErrorCode.MISSING_PRIME


class PrecisionUnreachable(ConverseError):
    code = ErrorCode.PRECISION_UNREACHABLE


class InvalidCuspData(ConverseError):
    code = ErrorCode.INVALID_CUSP_DATA


class InvalidFormSpec(ConverseError):
    code = ErrorCode.INVALID_FORM_SPEC


# cli / config


class UnsupportedLevel(ConverseError):
    code = ErrorCode.UNSUPPORTED_LEVEL


class InvalidConfig(ConverseError):
    code = ErrorCode.INVALID_CONFIG
