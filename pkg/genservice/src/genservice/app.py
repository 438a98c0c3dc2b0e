"""HTTP app implementing the generator plugin protocol.

POST /negate takes {"id", "claim"} and answers 200 with {"id",
"negative_claim"}; malformed bodies get 400. GET /health reports 200 only
once the model is loaded (503 while loading or after a load failure).
"""
from __future__ import annotations

import threading
from concurrent.futures import TimeoutError as FutureTimeoutError
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .batching import BatchWorker
from .config import ServiceConfig
from .model import Seq2SeqNegator


class NegateRequest(BaseModel):
    id: str
    claim: str = Field(min_length=1)


class NegateResponse(BaseModel):
    id: str
    negative_claim: str


class ServiceState:
    def __init__(self) -> None:
        self.worker: BatchWorker | None = None
        self.load_error: str | None = None
        self.lock = threading.Lock()

    @property
    def ready(self) -> bool:
        return self.worker is not None


def create_app(config: ServiceConfig, negator: Seq2SeqNegator | None = None) -> FastAPI:
    """Build the service app; pass a pre-loaded negator to skip async loading."""
    state = ServiceState()

    def attach(loaded: Seq2SeqNegator) -> None:
        with state.lock:
            state.worker = BatchWorker(loaded.generate_batch, config.max_batch_size)

    def load_in_background() -> None:
        try:
            attach(Seq2SeqNegator(config))
        except Exception as exc:
            state.load_error = str(exc)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        if negator is not None:
            attach(negator)
        else:
            threading.Thread(target=load_in_background, daemon=True).start()
        yield
        if state.worker is not None:
            state.worker.stop()

    app = FastAPI(title="genservice", version="0.1.0", lifespan=lifespan)
    app.state.service = state
    app.state.config = config

    @app.exception_handler(RequestValidationError)
    def malformed_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": "malformed request"})

    @app.get("/health")
    def health():
        if state.ready:
            return {"status": "ok", "model": config.model}
        detail = {"status": "error", "error": state.load_error} if state.load_error \
            else {"status": "loading"}
        return JSONResponse(status_code=503, content=detail)

    @app.post("/negate", response_model=NegateResponse)
    def negate(request: NegateRequest):
        if not state.ready:
            return JSONResponse(
                status_code=503, content={"error": "model not loaded"}
            )
        future = state.worker.submit(request.claim)
        try:
            negative = future.result(timeout=config.request_timeout)
        except FutureTimeoutError:
            future.cancel()
            return JSONResponse(
                status_code=500, content={"error": "generation timed out"}
            )
        except Exception as exc:
            return JSONResponse(
                status_code=500, content={"error": f"generation failed: {exc}"}
            )
        return {"id": request.id, "negative_claim": negative}

    return app
