import logging
import time
import uuid
from typing import Any, Dict, List, Optional

from fastapi import FastAPI, Header, Request
from fastapi.concurrency import run_in_threadpool
from fastapi.responses import JSONResponse

from . import config
from .auth import ensure_bearer_auth
from .errors import ConfigError
from .jsonrpc import (
    INVALID_PARAMS,
    INVALID_REQUEST,
    METHOD_NOT_FOUND,
    PARSE_ERROR,
    TOOL_ERROR,
    JsonRpcRequest,
    JsonRpcResponse,
    rpc_error,
)
from .registry import TOOLS
from .utils import duration_ms


def _reply(rpc_id: Any, req_id: str, result: Any = None, error: Optional[Dict[str, Any]] = None, status_code: int = 200) -> JSONResponse:
    return JSONResponse(
        status_code=status_code,
        headers={"x-request-id": req_id},
        content=JsonRpcResponse(id=rpc_id, result=result, error=error).model_dump(),
    )


def create_app(auth_token: Optional[str] = None) -> FastAPI:
    token = auth_token or config.AUTH_TOKEN
    if not token:
        raise ConfigError("AUTH_TOKEN must be set in environment (.env) to serve experiments")
    app = FastAPI(title="qrelay experiment service", version="0.1.0")

    @app.get("/health")
    async def health() -> Dict[str, str]:
        return {"status": "ok"}

    @app.post("/rpc")
    async def rpc_endpoint(request: Request, authorization: Optional[str] = Header(default=None)):
        ensure_bearer_auth(authorization, token)
        req_id = str(uuid.uuid4())

        try:
            body = await request.json()
        except Exception:
            return _reply(None, req_id, error=rpc_error(PARSE_ERROR, "Parse error", req_id), status_code=400)
        if not isinstance(body, dict):
            return _reply(None, req_id, error=rpc_error(INVALID_REQUEST, "Request must be a JSON object", req_id), status_code=400)

        try:
            rpc = JsonRpcRequest(**body)
        except Exception as e:
            return _reply(body.get("id"), req_id, error=rpc_error(INVALID_REQUEST, f"Invalid request: {e}", req_id), status_code=400)
        if rpc.jsonrpc != "2.0":
            return _reply(rpc.id, req_id, error=rpc_error(INVALID_REQUEST, "Only JSON-RPC 2.0 is supported", req_id), status_code=400)

        if rpc.method == "tools/list":
            tools_public: List[Dict[str, Any]] = [
                {"name": name, "description": entry["description"], "parameters": entry["parameters"]}
                for name, entry in TOOLS.items()
            ]
            return _reply(rpc.id, req_id, result={"request_id": req_id, "tools": tools_public})

        if rpc.method == "tools/call":
            if not rpc.params or "name" not in rpc.params:
                return _reply(rpc.id, req_id, error=rpc_error(INVALID_PARAMS, "Missing name", req_id), status_code=400)
            name = rpc.params["name"]
            arguments = rpc.params.get("arguments") or {}
            tool = TOOLS.get(name)
            if not tool:
                return _reply(rpc.id, req_id, error=rpc_error(METHOD_NOT_FOUND, f"Tool not found: {name}", req_id), status_code=404)
            if not isinstance(arguments, dict):
                return _reply(rpc.id, req_id, error=rpc_error(INVALID_PARAMS, "arguments must be an object", req_id), status_code=400)
            started = time.perf_counter()
            try:
                result = await run_in_threadpool(tool["handler"], arguments)
            except ConfigError as e:
                logging.info("tool_call request_id=%s name=%s duration_ms=%d success=0 error=%s", req_id, name, duration_ms(started), e)
                return _reply(rpc.id, req_id, error=rpc_error(INVALID_PARAMS, f"Invalid params: {e}", req_id), status_code=400)
            except Exception as e:
                logging.exception("tool_call request_id=%s name=%s duration_ms=%d success=0 error=%s", req_id, name, duration_ms(started), e)
                return _reply(rpc.id, req_id, error=rpc_error(TOOL_ERROR, f"Tool execution error: {e}", req_id), status_code=500)
            logging.info("tool_call request_id=%s name=%s duration_ms=%d success=1", req_id, name, duration_ms(started))
            return _reply(rpc.id, req_id, result={"request_id": req_id, **result})

        if rpc.method == "ping":
            return _reply(rpc.id, req_id, result={"request_id": req_id, "pong": True})

        return _reply(rpc.id, req_id, error=rpc_error(METHOD_NOT_FOUND, f"Method not found: {rpc.method}", req_id), status_code=404)

    return app
