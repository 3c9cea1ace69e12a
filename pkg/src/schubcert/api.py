"""HTTP front end: certificate building, verification suites, composition
and Poincare queries over the core package."""

from typing import Any, Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .errors import (
    DivisibilityError,
    EnumerationBudgetError,
    UnsupportedOperationError,
)
from .service import (
    SUITES,
    compose_payload,
    decompose_payload,
    poincare_payload,
    run_suite,
)

app = FastAPI(
    title="schubcert",
    version=__version__,
    description=(
        "Exact Schubert-calculus certificates: motivic decompositions of "
        "Severi-Brauer varieties, combinatorial identity suites, and "
        "correspondence arithmetic."
    ),
)


class DecomposeRequest(BaseModel):
    n: int = Field(ge=2, description="degree of the algebras")
    d: int = Field(ge=1, description="reduced dimension of ideals")
    r: int = Field(ge=0, description="Brauer-class exponent with [B] = [A^r]")


class VerifyRequest(BaseModel):
    suite: Literal["rs", "cong", "cong2", "pieri", "poincare", "sb", "all"]
    max_d: Optional[int] = Field(default=None, ge=1)
    max_m: Optional[int] = Field(default=None, ge=0)
    max_n: Optional[int] = Field(default=None, ge=2)
    primes: Optional[list[int]] = None
    enumerate_oracle: bool = False


class CorrespondencePayload(BaseModel):
    """Serialized correspondence: spaces, codimension and a term list of
    {h | mu | both, coeff-as-decimal-string} entries."""

    schema_: int = Field(default=1, alias="schema")
    source: dict
    target: dict
    codim: int
    terms: list[dict]

    model_config = {"populate_by_name": True}


class ComposeRequest(BaseModel):
    left: CorrespondencePayload
    right: CorrespondencePayload


def _unprocessable(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok", "version": __version__}


@app.post("/decompose")
def decompose(request: DecomposeRequest) -> dict[str, Any]:
    try:
        return decompose_payload(request.n, request.d, request.r)
    except (UnsupportedOperationError, ValueError) as exc:
        raise _unprocessable(exc)


@app.post("/verify")
def verify(request: VerifyRequest) -> dict[str, Any]:
    try:
        report = run_suite(
            request.suite,
            max_d=request.max_d,
            max_m=request.max_m,
            max_n=request.max_n,
            primes=tuple(request.primes) if request.primes else None,
            iso_primes=None,
            enumerate_oracle=request.enumerate_oracle or None,
        )
    except (EnumerationBudgetError, ValueError) as exc:
        raise _unprocessable(exc)
    return report.to_dict()


@app.post("/compose")
def compose_endpoint(request: ComposeRequest) -> dict[str, Any]:
    try:
        return compose_payload(
            request.left.model_dump(by_alias=True),
            request.right.model_dump(by_alias=True),
        )
    except (UnsupportedOperationError, ValueError) as exc:
        raise _unprocessable(exc)


@app.get("/poincare")
def poincare_polynomials(n: int, d: int) -> dict[str, Any]:
    try:
        return poincare_payload(n, d)
    except (DivisibilityError, ValueError) as exc:
        raise _unprocessable(exc)


@app.get("/suites")
def suites() -> dict[str, Any]:
    return {"suites": list(SUITES)}
