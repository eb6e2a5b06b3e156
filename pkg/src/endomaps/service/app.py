"""FastAPI application wrapping the analysis library.

Every endpoint is stateless and pure; parse failures map to 422 with a
position-carrying detail, exceeded bounds to 400 with kind
"bound-exceeded".
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..category import hom_set
from ..errors import BoundExceededError, ParseError
from ..factorization import forest_on_cycle_factors, moves_transpositions
from ..parsing import parse_endofunction
from ..reporting import analyze, export_dot, report_json_dict, word_json_dict
from ..verification import run_verification
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    CheckResultModel,
    DotRequest,
    DotResponse,
    FactorRequest,
    FactorResponse,
    HomRequest,
    HomResponse,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="endomaps",
        description="Structural analysis of finite self-maps",
        version="0.1.0",
    )

    @app.exception_handler(ParseError)
    async def handle_parse_error(_: Request, exc: ParseError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={
                "detail": {
                    "kind": "parse-error",
                    "message": str(exc),
                    "line": exc.line,
                    "column": exc.column,
                }
            },
        )

    @app.exception_handler(BoundExceededError)
    async def handle_bound_error(_: Request, exc: BoundExceededError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"detail": {"kind": "bound-exceeded", "message": str(exc)}},
        )

    @app.exception_handler(ValueError)
    async def handle_value_error(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={"detail": {"kind": "invalid-input", "message": str(exc)}},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/analyze", response_model=AnalyzeResponse)
    def analyze_endpoint(request: AnalyzeRequest) -> AnalyzeResponse:
        f = parse_endofunction(request.endofunction)
        return AnalyzeResponse(**report_json_dict(analyze(f)))

    @app.post("/dot", response_model=DotResponse)
    def dot_endpoint(request: DotRequest) -> DotResponse:
        f = parse_endofunction(request.endofunction)
        return DotResponse(flavor=request.flavor, dot=export_dot(f, request.flavor))

    @app.post("/factor", response_model=FactorResponse)
    def factor_endpoint(request: FactorRequest) -> FactorResponse:
        f = parse_endofunction(request.endofunction)
        if request.mode == "components":
            factors = [list(g.images) for g in forest_on_cycle_factors(f)]
            return FactorResponse(mode="components", factors=factors)
        word = moves_transpositions(f)
        return FactorResponse(mode="word", word=word_json_dict(word))

    @app.post("/hom", response_model=HomResponse)
    def hom_endpoint(request: HomRequest) -> HomResponse:
        dom = parse_endofunction(request.dom)
        cod = parse_endofunction(request.cod)
        morphisms = hom_set(dom, cod, max_tables=request.max_tables)
        return HomResponse(
            count=len(morphisms), morphisms=[list(m.table) for m in morphisms]
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify_endpoint(request: VerifyRequest) -> VerifyResponse:
        results = run_verification(
            suite=request.suite, bound=request.bound, force=request.force
        )
        return VerifyResponse(
            suite=request.suite,
            bound=request.bound,
            passed=all(r.passed for r in results),
            results=[
                CheckResultModel(
                    name=r.name,
                    instances=r.instances,
                    elapsed_seconds=r.elapsed,
                    passed=r.passed,
                    witness=r.witness,
                )
                for r in results
            ],
        )

    return app


app = create_app()
