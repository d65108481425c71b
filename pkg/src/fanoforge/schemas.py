"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class TableResponse(BaseModel):
    table: int
    columns: list[str]
    rows: list[dict]


class InvariantsResponse(BaseModel):
    x_form: str
    r: int
    a: int
    e: int
    q: int
    qprime: int
    l: int
    d: int
    divisible: bool
    A3: str
    link: dict | None = None


class TerminalRequest(BaseModel):
    singularity: str = Field(examples=["1/5(1,2,4)"])


class TerminalResponse(BaseModel):
    singularity: str
    isolated: bool
    terminal: bool | None = None
    canonical: str | None = None


class HilbertRequest(BaseModel):
    kind: Literal["lemma1", "wps", "hypersurface", "icecream"]
    r: int | None = None
    a: int | None = None
    e: int | None = None
    weights: list[int] | None = None
    degree: int | None = None
    order: int | None = Field(default=None, ge=0)


class HilbertResponse(BaseModel):
    numerator: str
    denominator: list[int]
    expansion: list[str] | None = None
    identity_ok: bool | None = None
    numerator_over_family_denominator: str | None = None
    family_denominator: list[int] | None = None


class ClassifyRequest(BaseModel):
    r: int = Field(ge=2)
    expression: str = Field(examples=["alpha^8 + beta^4"])


class ClassifyResponse(BaseModel):
    r: int
    equation: str
    vertices: list[list[int]]
    type: str | None = None
    branches: list[int] | None = None
    multiplicity: int | None = None
    degenerate: list[str] | None = None


class ModuliResponse(BaseModel):
    columns: list[str]
    rows: list[dict]


class VerifyRequest(BaseModel):
    target: str = "all"
    seed: int = 0
    trials: int = Field(default=20, ge=1)


class CheckModel(BaseModel):
    name: str
    ok: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    ok: bool
    checks: list[CheckModel]
    target: str
    seed: int
    trials: int


class ParseRequest(BaseModel):
    expression: str
    variables: list[str]
    weights: list[int] | None = None


class ParseResponse(BaseModel):
    canonical: str
    terms: int
    degree: int
    homogeneous: bool


class ErrorResponse(BaseModel):
    detail: str
