"""HTTP facade. Endpoints are thin wrappers over the service layer."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .errors import InputError, ZariskiError
from .schemas import (
    DecomposeRequest,
    GenerateRequest,
    GenerateResponse,
    ReportFile,
    VerifyRequest,
    VerifyResponse,
    WitnessReport,
    WitnessRequest,
)
from .service import run_decompose, run_generate, run_verify, run_witness

app = FastAPI(
    title="zariski",
    version=__version__,
    description=(
        "Exact decomposition of effective divisors on surfaces into a nef "
        "part and a contractible negative part, with verifiable certificates."
    ),
)


def _as_http(error: ZariskiError) -> HTTPException:
    status = 400 if isinstance(error, InputError) else 500
    return HTTPException(status_code=status, detail=f"{type(error).__name__}: {error}")


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/decompose", response_model=ReportFile)
def decompose(request: DecomposeRequest) -> ReportFile:
    try:
        return run_decompose(request)
    except ZariskiError as error:
        raise _as_http(error) from error


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    try:
        return run_verify(request)
    except ZariskiError as error:
        raise _as_http(error) from error


@app.post("/witness", response_model=WitnessReport)
def witness(request: WitnessRequest) -> WitnessReport:
    try:
        return run_witness(request)
    except ZariskiError as error:
        raise _as_http(error) from error


@app.post("/generate", response_model=GenerateResponse)
def generate(request: GenerateRequest) -> GenerateResponse:
    try:
        return run_generate(request)
    except ZariskiError as error:
        raise _as_http(error) from error
