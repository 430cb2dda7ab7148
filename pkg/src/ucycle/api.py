"""HTTP service wrapping the core package.

Run with ``ucycle-api`` (uvicorn) or mount ``app`` elsewhere. Long-running
deployments benefit from the shared decode-table caches, so repeated rank
and unrank queries against the same cycle stay cheap.
"""

from __future__ import annotations

from itertools import islice

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .cycles import generate_down, generate_up, list_necklaces
from .decode import (
    cycle_length_down,
    cycle_length_up,
    rank_down,
    rank_up,
    unrank_down,
    unrank_up,
)
from .formats import format_symbols, parse_symbols
from .schemas import (
    CycleQuery,
    DecodeRequest,
    DecodeResponse,
    EncodeRequest,
    EncodeResponse,
    GenerateRequest,
    GenerateResponse,
    HealthResponse,
    NecklacesResponse,
    RankRequest,
    RankResponse,
    SetRankRequest,
    SetRankResponse,
    SetUnrankRequest,
    SetUnrankResponse,
    UnrankRequest,
    UnrankResponse,
)
from .subsets import (
    diff_to_multiset,
    diff_to_subset,
    multiset_rank,
    multiset_to_diff,
    multiset_unrank,
    subset_rank,
    subset_to_diff,
    subset_unrank,
)

# refuse to stream silly amounts through one response without an explicit limit
MAX_UNLIMITED_SYMBOLS = 1_000_000

app = FastAPI(title="ucycle", version=__version__)


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


def _length(q: CycleQuery) -> int:
    if q.wmax is not None:
        return cycle_length_down(q.n, q.k, q.wmax)
    return cycle_length_up(q.n, q.k, q.wmin or 0)


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/generate", response_model=GenerateResponse)
def generate(req: GenerateRequest) -> GenerateResponse:
    length = _length(req)
    cap = req.limit if req.limit is not None else MAX_UNLIMITED_SYMBOLS
    if req.limit is None and length > cap:
        raise ValueError(
            f"cycle has {length} symbols; pass limit to fetch a bounded prefix"
        )
    if req.wmax is not None:
        stream = generate_down(req.n, req.k, req.wmax)
    else:
        stream = generate_up(req.n, req.k, req.wmin or 0)
    symbols = list(islice(stream, cap))
    return GenerateResponse(
        sequence=format_symbols(symbols, req.k),
        length=length,
        truncated=len(symbols) < length,
    )


@app.post("/rank", response_model=RankResponse)
def rank(req: RankRequest) -> RankResponse:
    s = parse_symbols(req.string)
    if req.wmax is not None:
        r = rank_down(s, req.n, req.k, req.wmax)
    else:
        r = rank_up(s, req.n, req.k, req.wmin or 0)
    return RankResponse(rank=r, length=_length(req))


@app.post("/unrank", response_model=UnrankResponse)
def unrank(req: UnrankRequest) -> UnrankResponse:
    if req.wmax is not None:
        s = unrank_down(req.rank, req.n, req.k, req.wmax)
    else:
        s = unrank_up(req.rank, req.n, req.k, req.wmin or 0)
    return UnrankResponse(string=format_symbols(s, req.k))


@app.get("/necklaces", response_model=NecklacesResponse)
def necklaces(n: int, k: int, wmin: int = 0) -> NecklacesResponse:
    necks = list_necklaces(n, k, wmin)
    return NecklacesResponse(
        necklaces=[format_symbols(nu, k) for nu in necks], count=len(necks)
    )


@app.post("/subset/rank", response_model=SetRankResponse)
def api_subset_rank(req: SetRankRequest) -> SetRankResponse:
    from math import comb

    r = subset_rank(req.elements, req.n, req.t)
    return SetRankResponse(rank=r, count=comb(req.n, req.t))


@app.post("/subset/unrank", response_model=SetUnrankResponse)
def api_subset_unrank(req: SetUnrankRequest) -> SetUnrankResponse:
    elems = subset_unrank(req.rank, req.n, req.t)
    diff = subset_to_diff(elems, req.n, req.t)
    return SetUnrankResponse(
        elements=list(elems), diff=format_symbols(diff, req.n - req.t + 1)
    )


@app.post("/subset/encode", response_model=EncodeResponse)
def api_subset_encode(req: EncodeRequest) -> EncodeResponse:
    diff = subset_to_diff(req.elements, req.n, req.t)
    return EncodeResponse(diff=format_symbols(diff, req.n - req.t + 1))


@app.post("/subset/decode", response_model=DecodeResponse)
def api_subset_decode(req: DecodeRequest) -> DecodeResponse:
    elems = diff_to_subset(parse_symbols(req.diff), req.n, req.t)
    return DecodeResponse(elements=list(elems))


@app.post("/multiset/rank", response_model=SetRankResponse)
def api_multiset_rank(req: SetRankRequest) -> SetRankResponse:
    from math import comb

    r = multiset_rank(req.elements, req.n, req.t)
    return SetRankResponse(rank=r, count=comb(req.n + req.t - 1, req.t))


@app.post("/multiset/unrank", response_model=SetUnrankResponse)
def api_multiset_unrank(req: SetUnrankRequest) -> SetUnrankResponse:
    elems = multiset_unrank(req.rank, req.n, req.t)
    diff = multiset_to_diff(elems, req.n, req.t)
    return SetUnrankResponse(elements=list(elems), diff=format_symbols(diff, req.n))


@app.post("/multiset/encode", response_model=EncodeResponse)
def api_multiset_encode(req: EncodeRequest) -> EncodeResponse:
    diff = multiset_to_diff(req.elements, req.n, req.t)
    return EncodeResponse(diff=format_symbols(diff, req.n))


@app.post("/multiset/decode", response_model=DecodeResponse)
def api_multiset_decode(req: DecodeRequest) -> DecodeResponse:
    elems = diff_to_multiset(parse_symbols(req.diff), req.n, req.t)
    return DecodeResponse(elements=list(elems))


def serve() -> None:
    """Console entry point: run the service with uvicorn."""
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=8000)
