"""HTTP service exposing the labeling library.

Run with:  uvicorn crownmagic.service:app

Every endpoint is a stateless POST wrapping one library call; the CLI offers
the same operations offline.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .arithmetic import bounded_bezout, conflict_values
from .coverage import (
    crown_em_cover,
    crown_labeling_for_valence,
    crown_sem_cover,
    crown_valence_lower_bound,
    cycle_valence_lower_bound,
    em_interval,
    sem_interval,
)
from .exceptions import (
    EmptyInterval,
    GuardExceeded,
    InvalidCertificate,
    InvalidInput,
)
from .oracle import brute_em_spectrum, brute_sem_spectrum
from .schemas import (
    BezoutDocument,
    Certificate,
    CoverReport,
    Family,
    GraphSpec,
    Kind,
    Mode,
    SpectrumDocument,
    certificate_from_labeling,
    cover_report,
    family_graph,
    labeling_from_certificate,
    spectrum_document,
)

app = FastAPI(
    title="crownmagic",
    version="0.1.0",
    description="Edge-magic and super edge-magic labelings of crowns, cycles and looped stars.",
)


@app.exception_handler(InvalidInput)
@app.exception_handler(EmptyInterval)
async def _bad_input(request: Request, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(GuardExceeded)
async def _guard(request: Request, exc: GuardExceeded) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


class IntervalsRequest(BaseModel):
    family: Family
    m: Optional[int] = None
    n: Optional[int] = None
    mode: Mode


class IntervalsResponse(BaseModel):
    graph: GraphSpec
    mode: Mode
    interval: tuple[int, int]


class CoverRequest(BaseModel):
    p: int
    q: int
    n: int
    mode: Mode


class GenerateRequest(BaseModel):
    m: int
    n: int
    valence: int


class VerifyResponse(BaseModel):
    valid: bool
    kind: Optional[Kind] = None
    valence: Optional[int] = None
    error: Optional[str] = None


class SpectrumRequest(BaseModel):
    family: Family
    m: Optional[int] = None
    n: Optional[int] = None
    mode: Mode
    guard: Optional[int] = None


class BezoutRequest(BaseModel):
    p: int
    q: int


class ConflictsRequest(BaseModel):
    p: int
    k: int
    q: int


class ConflictsResponse(BaseModel):
    modulus: int
    values: list[int]


class BoundRequest(BaseModel):
    m: int
    n: Optional[int] = None
    cycle: bool = False


class BoundResponse(BaseModel):
    bound: int


@app.get("/healthz")
async def healthz():
    return {"status": "ok"}


@app.post("/intervals", response_model=IntervalsResponse)
def intervals(req: IntervalsRequest) -> IntervalsResponse:
    spec = GraphSpec(family=req.family, m=req.m, n=req.n)
    graph = family_graph(spec)
    interval = sem_interval(graph) if req.mode == "sem" else em_interval(graph)
    return IntervalsResponse(graph=spec, mode=req.mode, interval=(interval.lo, interval.hi))


@app.post("/cover", response_model=CoverReport)
def cover(req: CoverRequest) -> CoverReport:
    if req.p < 3 or req.p % 2 == 0 or req.q < 1 or req.q % 2 == 0:
        raise InvalidInput(f"cover needs odd p >= 3 and odd q >= 1, got {req.p}, {req.q}")
    m = req.p * req.q
    result = crown_sem_cover(m, req.n) if req.mode == "sem" else crown_em_cover(m, req.n)
    return cover_report(result)


@app.post("/generate", response_model=Certificate)
def generate(req: GenerateRequest):
    labeling = crown_labeling_for_valence(req.m, req.n, req.valence)
    if labeling is None:
        return JSONResponse(
            status_code=404,
            content={
                "detail": f"no implemented construction reaches valence {req.valence} "
                f"for m={req.m}, n={req.n}"
            },
        )
    return certificate_from_labeling(labeling, GraphSpec(family="crown", m=req.m, n=req.n))


@app.post("/verify", response_model=VerifyResponse)
def verify_certificate(cert: Certificate) -> VerifyResponse:
    try:
        labeling = labeling_from_certificate(cert)
    except (InvalidCertificate, InvalidInput) as exc:
        return VerifyResponse(valid=False, error=str(exc))
    return VerifyResponse(valid=True, kind=labeling.kind, valence=labeling.valence)


@app.post("/spectrum", response_model=SpectrumDocument)
def spectrum(req: SpectrumRequest) -> SpectrumDocument:
    spec = GraphSpec(family=req.family, m=req.m, n=req.n)
    graph = family_graph(spec)
    kwargs = {"guard": req.guard} if req.guard else {}
    report = (
        brute_sem_spectrum(graph, **kwargs)
        if req.mode == "sem"
        else brute_em_spectrum(graph, **kwargs)
    )
    return spectrum_document(report, spec)


@app.post("/bezout", response_model=BezoutDocument)
def bezout(req: BezoutRequest) -> BezoutDocument:
    data = bounded_bezout(req.p, req.q)
    return BezoutDocument(
        p=data.p,
        q=data.q,
        alpha=data.alpha,
        beta=data.beta,
        x=data.x,
        x_prime=data.x_prime,
        alpha_prime=data.alpha_prime,
        beta_prime=data.beta_prime,
    )


@app.post("/conflicts", response_model=ConflictsResponse)
def conflicts(req: ConflictsRequest) -> ConflictsResponse:
    values = conflict_values(req.p, req.k, req.q)
    return ConflictsResponse(modulus=req.p**req.k * req.q, values=values)


@app.post("/bound", response_model=BoundResponse)
def bound(req: BoundRequest) -> BoundResponse:
    if req.cycle:
        return BoundResponse(bound=cycle_valence_lower_bound(req.m))
    if req.n is None:
        raise InvalidInput("bound needs n unless cycle is true")
    return BoundResponse(bound=crown_valence_lower_bound(req.m, req.n))
