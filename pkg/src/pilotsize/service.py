"""Stateless HTTP JSON service exposing every design, precision and CI
operation plus table regeneration.

Every response is a pure function of the request body; results are
bit-identical to the corresponding library call.  Modeled domain errors map
to 4xx with machine-readable codes; only genuine internal faults produce 5xx.
"""

from __future__ import annotations

import logging
import os
from importlib.metadata import PackageNotFoundError, version as _pkg_version

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import api, tables

logger = logging.getLogger("pilotsize.service")

DEFAULT_PORT = 8377


def _version() -> str:
    try:
        return _pkg_version("pilotsize")
    except PackageNotFoundError:  # pragma: no cover - source checkout
        return "0.0.0+src"


def create_app(origins: list[str] | None = None) -> FastAPI:
    app = FastAPI(title="pilotsize calculator", version=_version(), docs_url=None,
                  redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=origins if origins is not None else ["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    @app.middleware("http")
    async def request_log(request: Request, call_next):
        response = await call_next(request)
        logger.info("method=%s path=%s status=%s", request.method,
                    request.url.path, response.status_code)
        return response

    def handle(operation: str, payload) -> JSONResponse:
        if not isinstance(payload, dict):
            return JSONResponse(status_code=422, content={"errors": [
                {"field": "body", "code": "invalid_type",
                 "message": "request body must be a JSON object"}]})
        resolved, errors = api.validate(operation, payload)
        if errors:
            return JSONResponse(status_code=422, content={"errors": errors})
        try:
            return JSONResponse(status_code=200, content=api.compute(operation, resolved))
        except (ValueError, ArithmeticError) as exc:
            return JSONResponse(status_code=400, content={"errors": [
                {"field": "", "code": "domain_error", "message": str(exc)}]})

    @app.post("/api/v1/design")
    async def design(request: Request) -> JSONResponse:
        return handle("design", await _json_body(request))

    @app.post("/api/v1/precision")
    async def precision(request: Request) -> JSONResponse:
        return handle("precision", await _json_body(request))

    @app.post("/api/v1/ci")
    async def ci(request: Request) -> JSONResponse:
        return handle("ci", await _json_body(request))

    @app.get("/api/v1/tables/{table_id}")
    async def table(table_id: str) -> JSONResponse:
        try:
            resolved_id = tables.resolve_table_id(table_id)
        except ValueError as exc:
            return JSONResponse(status_code=404, content={"errors": [
                {"field": "table_id", "code": "unknown_table", "message": str(exc)}]})
        return JSONResponse(status_code=200,
                            content=tables.generate(resolved_id).to_json_obj())

    @app.get("/healthz")
    async def healthz() -> JSONResponse:
        return JSONResponse(status_code=200, content={
            "status": "ok",
            "version": _version(),
            "golden_checksum": tables.golden_checksum(),
        })

    return app


async def _json_body(request: Request):
    try:
        return await request.json()
    except Exception:
        return None


def serve(host: str = "127.0.0.1", port: int | None = None,
          origins: str | None = None) -> None:
    """Run the service until interrupted; in-flight requests finish on shutdown."""
    import uvicorn

    if port is None:
        port = int(os.environ.get("PILOTSIZE_PORT", DEFAULT_PORT))
    origin_list = None if origins is None else [o.strip() for o in origins.split(",")]
    uvicorn.run(create_app(origin_list), host=host, port=port, log_level="info")


def main() -> None:  # pragma: no cover - thin launcher
    import argparse

    parser = argparse.ArgumentParser(prog="pilotsize-service")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=None)
    parser.add_argument("--origins", default=None)
    args = parser.parse_args()
    serve(host=args.host, port=args.port, origins=args.origins)


if __name__ == "__main__":  # pragma: no cover
    main()
