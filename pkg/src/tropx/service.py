"""FastAPI service exposing the toolkit over HTTP.

Run with: uvicorn tropx.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import reports
from .errors import TropicalError, VerifyMismatchError
from .schemas import (
    EigResponse,
    ExpRequest,
    ExpResponse,
    GenOrderResponse,
    MatrixRequest,
    OrbitRequest,
    OrbitResponse,
    PeriodRequest,
    PeriodResponse,
    RobustResponse,
    ScalarRequest,
    ScalarResponse,
    SpectrumResponse,
    VectorMatrixRequest,
)

app = FastAPI(
    title="tropx",
    description="Max-plus matrix exponential, spectral and periodicity analysis",
)


@app.exception_handler(VerifyMismatchError)
async def _verify_handler(request: Request, exc: VerifyMismatchError):
    return JSONResponse(
        status_code=409,
        content={"error": "verify-mismatch", "detail": str(exc)},
    )


@app.exception_handler(TropicalError)
async def _domain_handler(request: Request, exc: TropicalError):
    return JSONResponse(
        status_code=422,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.post("/exp", response_model=ExpResponse, response_model_exclude_none=True)
def exp_endpoint(req: ExpRequest):
    return reports.exp_report(req.to_matrix(), steps=req.steps, verify=req.verify)


@app.post("/spectrum", response_model=SpectrumResponse)
def spectrum_endpoint(req: MatrixRequest):
    return reports.spectrum_report(req.to_matrix(), verify=req.verify)


@app.post("/eigenvectors", response_model=EigResponse)
def eig_endpoint(req: MatrixRequest):
    return reports.eig_report(req.to_matrix(), verify=req.verify)


@app.post("/period", response_model=PeriodResponse)
def period_endpoint(req: PeriodRequest):
    return reports.period_report(req.to_matrix(), cap=req.cap, verify=req.verify)


@app.post("/robust", response_model=RobustResponse)
def robust_endpoint(req: MatrixRequest):
    return reports.robust_report(req.to_matrix())


@app.post("/genorder", response_model=GenOrderResponse)
def genorder_endpoint(req: VectorMatrixRequest):
    return reports.genorder_report(req.to_matrix(), req.to_vector(), verify=req.verify)


@app.post("/orbit", response_model=OrbitResponse, response_model_exclude_none=True)
def orbit_endpoint(req: OrbitRequest):
    return reports.orbit_report(
        req.to_matrix(),
        req.to_vector(),
        max_steps=req.max_steps,
        include_states=req.include_states,
    )


@app.post("/scalar", response_model=ScalarResponse)
def scalar_endpoint(req: ScalarRequest):
    return reports.scalar_report(req.op, req.value)
