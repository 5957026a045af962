"""
converse/cli/exception_handlers.py

Map exceptions raised during a command to exit codes and error payloads.
"""

import json
import logging
import sys
import traceback
import uuid
from typing import Optional, TextIO

from converse.exceptions import (
    CertificateMismatch,
    ConverseError,
    InvalidConfig,
    InvalidCuspData,
    InvalidFormSpec,
    MatrixParseError,
    PrecisionUnreachable,
    ScriptParseError,
    SideConditionFailed,
    UnsupportedLevel,
)
from converse.schemas.response import error_response

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_CERTIFICATE = 2
EXIT_USAGE = 3
EXIT_PRECISION = 4
EXIT_ERROR = 5

EXIT_CODES = {
    CertificateMismatch: EXIT_CERTIFICATE,
    SideConditionFailed: EXIT_CERTIFICATE,
    ScriptParseError: EXIT_USAGE,
    MatrixParseError: EXIT_USAGE,
    UnsupportedLevel: EXIT_USAGE,
    InvalidFormSpec: EXIT_USAGE,
    InvalidCuspData: EXIT_USAGE,
    InvalidConfig: EXIT_USAGE,
    PrecisionUnreachable: EXIT_PRECISION,
}


def exit_code_for(exc: BaseException) -> int:
    for cls in type(exc).__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]
    return EXIT_ERROR


def handle_exception(
    exc: BaseException,
    as_json: bool = False,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """Report the failure and return the exit code"""
    out = out or sys.stdout
    err = err or sys.stderr
    run_id = str(uuid.uuid4())

    if isinstance(exc, ConverseError):
        code = exit_code_for(exc)
        logger.warning(
            "command failed: %s", exc.detail, extra={"fields": {"run_id": run_id}}
        )
        payload = exc.to_dict()
        if as_json:
            body = error_response(
                payload["code"], payload["message"], exc.context, run_id
            )
            out.write(json.dumps(body, indent=2) + "\n")
        else:
            err.write(f"error [{payload['code']}]: {payload['message']}\n")
            for key, value in payload["context"].items():
                err.write(f"  {key}: {value}\n")
        return code

    logger.error(
        "unexpected error: %s",
        exc,
        extra={"fields": {"run_id": run_id, "traceback": traceback.format_exc()}},
    )
    if as_json:
        body = error_response(
            "INTERNAL", "An unexpected error occurred", {"error": exc}, run_id
        )
        out.write(json.dumps(body, indent=2) + "\n")
    else:
        err.write(f"unexpected error: {exc}\n")
    return EXIT_ERROR
