"""
converse/schemas/errors.py - Error code definitions
"""

from enum import Enum


class ErrorCode(str, Enum):
    # Exact linear algebra (LIN_XXX)
    NON_POSITIVE_DETERMINANT = "LIN_001"
    UNSATISFIABLE_CONSTRAINT = "LIN_002"
    NO_REPRESENTATIVE = "LIN_003"
    MATRIX_PARSE_ERROR = "LIN_004"

    # Symbolic scalars (SYM_XXX)
    UNKNOWN_SYMBOL = "SYM_001"

    # Group ring and relation store (RING_XXX)
    NOT_PRIME = "RING_001"
    INCONSISTENT_LEVEL = "RING_002"
    CERTIFICATE_MISMATCH = "RING_003"
    SIDE_CONDITION_FAILED = "RING_004"
    UNKNOWN_RELATION_ID = "RING_005"
    UNSUPPORTED_EXPONENT = "RING_006"
    NO_SOLUTION = "RING_007"
    INVALID_LEVEL_SHAPE = "RING_008"
    DUPLICATE_RELATION_ID = "RING_009"

    # Script DSL (DSL_XXX)
    SCRIPT_PARSE_ERROR = "DSL_001"

    # Congruence subgroups (GRP_XXX)
    NOT_UNIMODULAR = "GRP_001"
    COSET_LIMIT_EXCEEDED = "GRP_002"
    MEMBER_NOT_IN_GAMMA0 = "GRP_003"

    # Numerics (NUM_XXX)
    NON_INTEGRAL_LEADING_POWER = "NUM_001"
    MISSING_PRIME = "NUM_002"
    PRECISION_UNREACHABLE = "NUM_003"
    INVALID_CUSP_DATA = "NUM_004"
    INVALID_FORM_SPEC = "NUM_005"

    # Command line (CLI_XXX)
    UNSUPPORTED_LEVEL = "CLI_001"

    # Configuration (CFG_XXX)
    INVALID_CONFIG = "CFG_001"


# Error messages mapping
ERROR_MESSAGES = {
    ErrorCode.NON_POSITIVE_DETERMINANT: "Determinant must be positive",
    ErrorCode.UNSATISFIABLE_CONSTRAINT: "Matrix parameters violate its constraints",
    ErrorCode.NO_REPRESENTATIVE: "No representative in the required range",
    ErrorCode.MATRIX_PARSE_ERROR: "Malformed matrix expression",
    ErrorCode.UNKNOWN_SYMBOL: "Symbol is not declared",
    ErrorCode.NOT_PRIME: "Argument must be prime",
    ErrorCode.INCONSISTENT_LEVEL: "Hypothesis is inconsistent with the level",
    ErrorCode.CERTIFICATE_MISMATCH: "Certificate does not reproduce the target",
    ErrorCode.SIDE_CONDITION_FAILED: "Side condition of the step failed",
    ErrorCode.UNKNOWN_RELATION_ID: "Relation id is not in the store",
    ErrorCode.UNSUPPORTED_EXPONENT: "Prime-power exponent above the supported bound",
    ErrorCode.NO_SOLUTION: "Congruence has no solution",
    ErrorCode.INVALID_LEVEL_SHAPE: "Level does not have the supported shape",
    ErrorCode.DUPLICATE_RELATION_ID: "Relation id already used",
    ErrorCode.SCRIPT_PARSE_ERROR: "Script could not be parsed",
    ErrorCode.NOT_UNIMODULAR: "Matrix is not in SL2(Z)",
    ErrorCode.COSET_LIMIT_EXCEEDED: "Coset enumeration hit its limit",
    ErrorCode.MEMBER_NOT_IN_GAMMA0: "Matrix is not in Gamma0(N)",
    ErrorCode.NON_INTEGRAL_LEADING_POWER: "Eta quotient has a non-integral leading power",
    ErrorCode.MISSING_PRIME: "Local factor missing for a prime",
    ErrorCode.PRECISION_UNREACHABLE: "Truncation tail exceeds the tolerance",
    ErrorCode.INVALID_CUSP_DATA: "Cusp data violates the coprimality conditions",
    ErrorCode.INVALID_FORM_SPEC: "Form specifier not understood",
    ErrorCode.UNSUPPORTED_LEVEL: "Unsupported level",
    ErrorCode.INVALID_CONFIG: "Configuration is invalid",
}
