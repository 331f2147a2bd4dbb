from typing import Any, Dict, Optional
from pydantic import BaseModel

PARSE_ERROR = -32700
INVALID_REQUEST = -32600
METHOD_NOT_FOUND = -32601
INVALID_PARAMS = -32602
TOOL_ERROR = -32000


class JsonRpcRequest(BaseModel):
    jsonrpc: str
    method: str
    id: Optional[Any] = None
    params: Optional[Dict[str, Any]] = None


class JsonRpcResponse(BaseModel):
    jsonrpc: str = "2.0"
    id: Optional[Any]
    result: Optional[Any] = None
    error: Optional[Dict[str, Any]] = None


def rpc_error(code: int, message: str, request_id: str) -> Dict[str, Any]:
    return {"code": code, "message": message, "data": {"request_id": request_id}}
