from converse.symscalar.parser import parse_scalar
from converse.symscalar.scalar import (
    EPS,
    ONE,
    ZERO,
    SymbolTable,
    SymScalar,
    eigenvalue_symbol,
    scal_add,
    scal_is_zero,
    scal_mul,
    scal_neg,
)

__all__ = [
    "EPS",
    "ONE",
    "ZERO",
    "SymScalar",
    "SymbolTable",
    "eigenvalue_symbol",
    "parse_scalar",
    "scal_add",
    "scal_is_zero",
    "scal_mul",
    "scal_neg",
]
