"""Run report schema - the data part of every --json envelope"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class RunReport(BaseModel):
    command: str
    level: Optional[int] = None
    ok: bool = True
    exit_code: int = 0
    verdicts: List[str] = Field(default_factory=list)
    residuals: List[str] = Field(default_factory=list)
    indices: List[Optional[int]] = Field(default_factory=list)
    assumptions: List[str] = Field(default_factory=list)
    reports: List[Dict[str, Any]] = Field(default_factory=list)
    wall_time: float = 0.0

    def add(self, report: BaseModel) -> None:
        self.reports.append(report.model_dump(mode="json"))
