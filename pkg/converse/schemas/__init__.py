from converse.schemas.errors import ERROR_MESSAGES, ErrorCode
from converse.schemas.response import error_response, success_response

__all__ = ["ERROR_MESSAGES", "ErrorCode", "error_response", "success_response"]
