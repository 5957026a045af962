from converse.exact_linalg.named import (
    P,
    diagonal,
    fricke,
    lower_translation,
    m_family,
    m_minus_two,
    m_two,
    matrix_a,
    matrix_b,
    named_matrix,
    translation,
)
from converse.exact_linalg.projmat import (
    IDENTITY,
    OrderClass,
    OrderKind,
    ProjMat,
    canonicalize,
    classify_order,
    in_gamma0,
    inv,
    mul,
    power,
)

from converse.exact_linalg.expr import MatrixExprParser, eval_matrix_expr, tokenize

__all__ = [
    "IDENTITY",
    "MatrixExprParser",
    "OrderClass",
    "OrderKind",
    "P",
    "ProjMat",
    "canonicalize",
    "classify_order",
    "diagonal",
    "eval_matrix_expr",
    "fricke",
    "in_gamma0",
    "inv",
    "lower_translation",
    "m_family",
    "m_minus_two",
    "m_two",
    "matrix_a",
    "matrix_b",
    "mul",
    "named_matrix",
    "power",
    "tokenize",
    "translation",
]
