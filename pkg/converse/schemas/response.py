"""
converse/schemas/response.py - Envelopes for --json output

    {"success": true,  "timestamp": ..., "data": <report>}
    {"success": false, "timestamp": ..., "error": {"code", "message", "context"}}
"""

from datetime import datetime, timezone
from typing import Any, Dict, Optional

from pydantic import BaseModel, field_validator


class ErrorDetail(BaseModel):
    code: str
    message: str
    context: Dict[str, str] = {}

    @field_validator("context", mode="before")
    @classmethod
    def stringify(cls, value):
        return {str(k): str(v) for k, v in (value or {}).items()}


def _envelope(success: bool, **body) -> Dict[str, Any]:
    return {"success": success, "timestamp": datetime.now(timezone.utc).isoformat(), **body}


def success_response(data: Any) -> Dict[str, Any]:
    if isinstance(data, BaseModel):
        data = data.model_dump(mode="json")
    return _envelope(True, data=data)


def error_response(
    code: str,
    message: str,
    context: Optional[Dict[str, Any]] = None,
    run_id: Optional[str] = None,
) -> Dict[str, Any]:
    detail = ErrorDetail(code=code, message=message, context=context)
    body = _envelope(False, error=detail.model_dump())
    if run_id:
        body["run_id"] = run_id
    return body
