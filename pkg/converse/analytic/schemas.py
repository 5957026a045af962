"""Numeric report schemas - Compatible with success_response"""

from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator


class LocalFactorSpec(BaseModel):
    """Hecke eigenvalues a_p at primes p not dividing the level"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    level: int = Field(..., ge=1)
    weight: int = Field(..., ge=2)
    ap: Dict[int, Fraction] = Field(default_factory=dict)

    @field_validator("weight")
    @classmethod
    def even_weight(cls, v):
        if v % 2:
            raise ValueError("weight must be even")
        return v

    @field_validator("ap", mode="before")
    @classmethod
    def exact_values(cls, v):
        return {int(p): Fraction(str(a)) for p, a in (v or {}).items()}

    @field_serializer("ap")
    def serialize_ap(self, ap: Dict[int, Fraction]):
        return {str(p): str(a) for p, a in ap.items()}


class SeriesFile(BaseModel):
    """Coefficient export: a_0..a_K as exact fraction strings"""

    level: int = Field(..., ge=1)
    weight: int = Field(..., ge=2)
    K: int = Field(..., ge=0)
    label: str = ""
    coefficients: List[str]

    @field_validator("coefficients")
    @classmethod
    def parse_as_fractions(cls, v):
        for entry in v:
            Fraction(entry)
        return v


class PointResidual(BaseModel):
    z: str
    residual: float
    tail: float


class InvarianceReport(BaseModel):
    form: str
    level: int
    matrix: str
    max_residual: float
    max_tail: float
    tol: float
    passed: bool
    points: List[PointResidual] = Field(default_factory=list)


class EigenReport(BaseModel):
    form: str
    p: int
    estimate_real: float
    estimate_imag: float
    expected: Optional[float] = None
    residual: float
    tol: float
    passed: bool


class FrickeReport(BaseModel):
    form: str
    level: int
    sign: int
    ratio_real: float
    ratio_imag: float
    residual: float
    tol: float
    passed: bool


class CuspReport(BaseModel):
    form: str
    level: int
    cusp: str
    width: int
    height: float
    samples: int
    constant_real: float
    constant_imag: float
    modulus: float
    tail: float
    vanishes: bool


class OrderReport(BaseModel):
    matrix: str
    kind: str
    discriminant: str
    order: Optional[int] = None
    description: str


class ExpansionReport(BaseModel):
    form: str
    level: int
    weight: int
    K: int
    head: List[str]
    output: Optional[str] = None
