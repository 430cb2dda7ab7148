"""Request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class CycleQuery(BaseModel):
    """Identifies one weight-bounded cycle.

    Exactly one of wmin/wmax selects the weight direction; neither means the
    unconstrained cycle over all length-n strings.
    """

    n: int = Field(ge=1)
    k: int = Field(ge=1)
    wmin: int | None = None
    wmax: int | None = None

    @model_validator(mode="after")
    def _one_bound(self):
        if self.wmin is not None and self.wmax is not None:
            raise ValueError("supply at most one of wmin and wmax")
        return self


class GenerateRequest(CycleQuery):
    limit: int | None = Field(default=None, ge=1, description="max symbols to return")


class GenerateResponse(BaseModel):
    sequence: str
    length: int
    truncated: bool


class RankRequest(CycleQuery):
    string: str


class RankResponse(BaseModel):
    rank: int
    length: int


class UnrankRequest(CycleQuery):
    rank: int = Field(ge=1)


class UnrankResponse(BaseModel):
    string: str


class NecklacesResponse(BaseModel):
    necklaces: list[str]
    count: int


class SetRankRequest(BaseModel):
    n: int = Field(ge=1)
    t: int = Field(ge=1)
    elements: list[int]


class SetRankResponse(BaseModel):
    rank: int
    count: int


class SetUnrankRequest(BaseModel):
    n: int = Field(ge=1)
    t: int = Field(ge=1)
    rank: int = Field(ge=1)


class SetUnrankResponse(BaseModel):
    elements: list[int]
    diff: str


class EncodeRequest(BaseModel):
    n: int = Field(ge=1)
    t: int = Field(ge=1)
    elements: list[int]


class EncodeResponse(BaseModel):
    diff: str


class DecodeRequest(BaseModel):
    n: int = Field(ge=1)
    t: int = Field(ge=1)
    diff: str


class DecodeResponse(BaseModel):
    elements: list[int]


class HealthResponse(BaseModel):
    status: str
    version: str
