"""Generation certificate schemas - compatible with success_response"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class Verdict(str, Enum):
    GENERATES = "Generates"
    NOT_GENERATING = "NotGenerating"


class MemberReport(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    expression: str
    matrix: str
    in_gamma0: bool
    word: str
    word_length: int = Field(..., ge=0)


class GenerationCertificate(BaseModel):
    level: int = Field(..., ge=1)
    expressions: List[str]
    members: List[MemberReport] = Field(default_factory=list)
    index: Optional[int] = None
    psi: int
    cosets_defined: int = 0
    limit: Optional[int] = None
    verdict: Verdict

    def generates(self) -> bool:
        return self.verdict == Verdict.GENERATES
