"""HTTP service exposing the toolkit's queries and verification batches."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import operations, schemas
from .parsing import PolySyntaxError

app = FastAPI(
    title="fanoforge",
    description=(
        "Exact-arithmetic queries on a family of Q-Fano 3-fold constructions: "
        "case enumeration, Hilbert series, terminality of cyclic quotients, "
        "orbifold curve classification and Pfaffian unprojection checks."
    ),
    version="1.0.0",
)


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except PolySyntaxError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except (ValueError, KeyError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.get("/tables/{which}", response_model=schemas.TableResponse)
def tables(which: int):
    return _guard(operations.table, which)


@app.get("/invariants", response_model=schemas.InvariantsResponse)
def invariants(r: int, a: int, e: int):
    return _guard(operations.invariants, r, a, e)


@app.post("/terminal", response_model=schemas.TerminalResponse)
def terminal(request: schemas.TerminalRequest):
    return _guard(operations.terminal, request.singularity)


@app.post("/hilbert", response_model=schemas.HilbertResponse)
def hilbert(request: schemas.HilbertRequest):
    return _guard(
        operations.hilbert_series,
        request.kind,
        r=request.r,
        a=request.a,
        e=request.e,
        weights=request.weights,
        degree=request.degree,
        order=request.order,
    )


@app.post("/classify", response_model=schemas.ClassifyResponse)
def classify(request: schemas.ClassifyRequest):
    return _guard(operations.classify, request.r, request.expression)


@app.get("/moduli", response_model=schemas.ModuliResponse)
def moduli():
    return operations.moduli()


@app.post("/verify", response_model=schemas.VerifyResponse)
def run_verify(request: schemas.VerifyRequest):
    return _guard(
        operations.run_verify, request.target, request.seed, request.trials
    )


@app.post("/parse", response_model=schemas.ParseResponse)
def parse(request: schemas.ParseRequest):
    return _guard(
        operations.parse, request.expression, request.variables, request.weights
    )
