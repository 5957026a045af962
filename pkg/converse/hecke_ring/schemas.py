"""Derivation report schemas - compatible with success_response"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class StepReport(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    index: int = Field(..., ge=1)
    kind: str
    id: Optional[str] = None
    provenance: str
    element: str
    residual: str = "0"
    terms: int = 0
    line: Optional[int] = None


class AssertionReport(BaseModel):
    matrix: str
    text: str = ""
    verified: bool
    relation: Optional[str] = None
    line: Optional[int] = None


class Report(BaseModel):
    level: int
    name: str = ""
    session_id: str
    hypotheses: List[str] = Field(default_factory=list)
    steps: List[StepReport] = Field(default_factory=list)
    step_count: int = 0
    assertions: List[AssertionReport] = Field(default_factory=list)
    assumptions: List[str] = Field(default_factory=list)
    residuals: List[str] = Field(default_factory=list)
    result: Optional[str] = None
    ok: bool = True

    def verified(self) -> List[str]:
        return [a.text or a.matrix for a in self.assertions if a.verified]


class FlattenedTerm(BaseModel):
    relation: str
    multiplier: str


class FlattenReport(BaseModel):
    relation: str
    leaves: List[FlattenedTerm]
    residual: str
    ok: bool
