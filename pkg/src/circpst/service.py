"""Service layer: request -> response handlers and the FastAPI app.

The handlers are plain functions on the pydantic models, so the CLI can
call them in-process while the HTTP service exposes the same behavior
to remote clients.  Domain validation errors surface as ValueError and
map to HTTP 400.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import census as census_mod
from .circulant import (
    ClassViolation,
    collapse,
    spectrum_exact,
    spectrum_numeric,
)
from .pst import (
    PstCertificate,
    fidelity,
    fidelity_trace,
    pst_verdict,
)
from .schemas import (
    CensusRequest,
    CensusResponse,
    CertificateModel,
    ConstructRequest,
    ConstructResponse,
    FidelityRequest,
    FidelityResponse,
    GraphSpec,
    PstRequest,
    PstResponse,
    SpectrumRequest,
    SpectrumResponse,
    TraceModel,
)

_REAL_TOL = 1e-8


def compute_spectrum(req: SpectrumRequest) -> SpectrumResponse:
    row = req.graph.to_row()
    collapsed = None if row.digraph else collapse(row)
    if isinstance(collapsed, ClassViolation):
        collapsed = None
    if collapsed is None:
        numeric = spectrum_numeric(row).values
        all_real = all(abs(v.imag) <= _REAL_TOL for v in numeric)
        return SpectrumResponse(
            n=row.n,
            kind="numeric",
            numeric=[(v.real, v.imag) for v in numeric],
            all_real=all_real,
        )
    exact = spectrum_exact(collapsed).values
    check_passed = None
    if req.check:
        numeric = spectrum_numeric(row).values
        check_passed = all(
            abs(v - e) <= req.tolerance for v, e in zip(numeric, exact)
        )
    return SpectrumResponse(
        n=row.n,
        kind="exact",
        exact=list(exact),
        all_real=True,
        check_passed=check_passed,
    )


def _certificate_model(cert: PstCertificate) -> CertificateModel:
    return CertificateModel(
        m=cert.m,
        time=cert.time,
        time_over_2pi=str(Fraction(1, 2 ** (cert.m + 1))),
        source=cert.source,
        target=cert.target,
        fidelity=cert.fidelity,
    )


def compute_pst(req: PstRequest) -> PstResponse:
    if req.graph.mode == "digraph":
        raise ValueError("PST decision requires graph mode")
    w = req.graph.to_weights()
    verdict = pst_verdict(w)
    trace = None
    if req.trace is not None:
        ft = fidelity_trace(w, 0, w.n // 2, req.trace.t_max, req.trace.steps)
        trace = TraceModel(times=list(ft.times), values=list(ft.values))
    return PstResponse(
        n=w.n,
        exists=verdict.exists,
        reason=verdict.reason.value,
        certificate=(
            _certificate_model(verdict.certificate) if verdict.certificate else None
        ),
        trace=trace,
    )


def compute_fidelity(req: FidelityRequest) -> FidelityResponse:
    if req.graph.mode == "digraph":
        raise ValueError("fidelity requires graph mode")
    w = req.graph.to_weights()
    if req.time is not None:
        return FidelityResponse(
            n=w.n,
            a=req.a,
            b=req.b,
            time=req.time,
            fidelity=fidelity(w, req.a, req.b, req.time),
        )
    ft = fidelity_trace(w, req.a, req.b, req.trace.t_max, req.trace.steps)
    return FidelityResponse(
        n=w.n,
        a=req.a,
        b=req.b,
        trace=TraceModel(times=list(ft.times), values=list(ft.values)),
    )


def compute_census(req: CensusRequest) -> CensusResponse:
    report = census_mod.enumerate_unweighted(req.n)
    return CensusResponse(
        n=report.n,
        predicate_hits=[list(s) for s in report.predicate_hits],
        spectral_hits=[list(s) for s in report.spectral_hits],
        weightable_count=report.weightable_count,
        predicted_weightable=report.predicted_weightable,
        two_divisor_count=report.two_divisor_count,
        predicted_two_divisor=report.predicted_two_divisor,
        consistent=report.consistent(),
    )


def compute_construct(req: ConstructRequest) -> ConstructResponse:
    from .numtheory import proper_divisors

    base = req.base if req.base is not None else list(proper_divisors(req.n))
    w = census_mod.construct_weighted(req.n, req.a, base, req.filler)
    graph = GraphSpec.from_weights(w)
    verdict = compute_pst(PstRequest(graph=graph))
    return ConstructResponse(graph=graph, verdict=verdict)


app = FastAPI(
    title="circpst",
    description=(
        "Decides, constructs, enumerates and numerically certifies perfect "
        "state transfer in weighted integral circulant graphs."
    ),
)


@app.exception_handler(ValueError)
async def _value_error_handler(_: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.post("/spectrum", response_model=SpectrumResponse)
def spectrum_endpoint(req: SpectrumRequest) -> SpectrumResponse:
    return compute_spectrum(req)


@app.post("/pst", response_model=PstResponse)
def pst_endpoint(req: PstRequest) -> PstResponse:
    return compute_pst(req)


@app.post("/fidelity", response_model=FidelityResponse)
def fidelity_endpoint(req: FidelityRequest) -> FidelityResponse:
    return compute_fidelity(req)


@app.post("/census", response_model=CensusResponse)
def census_endpoint(req: CensusRequest) -> CensusResponse:
    return compute_census(req)


@app.post("/construct", response_model=ConstructResponse)
def construct_endpoint(req: ConstructRequest) -> ConstructResponse:
    return compute_construct(req)
