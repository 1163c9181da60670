"""Read-only HTTP API over an immutable index.

Endpoints: GET /api/search, POST /api/suggest, POST /api/refine,
POST /api/ttest. Scores are serialized at full precision; display
formatting is the client's job.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .corpus import PreprocessConfig
from .refine import (
    SLUG_PATTERN,
    DomainTerm,
    RefinementConfig,
    interactive_suggest,
    refine_query,
)
from .stats import paired_t_test
from .vectorindex import Index, Retrieval, retrieve_top_k

SNIPPET_LENGTH = 200


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


def _search_response(index: Index, query: str, retrieval: Retrieval) -> dict:
    hits = []
    for hit in retrieval.hits:
        doc = index.docs[hit.doc_id]
        hits.append(
            {
                "doc_id": hit.doc_id,
                "url": doc.url,
                "title": doc.title,
                "score": hit.score,
                "snippet": doc.text[:SNIPPET_LENGTH],
            }
        )
    return {"query": query, "hits": hits, "out_of_vocabulary": retrieval.out_of_vocabulary}


def create_app(
    index: Index,
    preprocess_config: Optional[PreprocessConfig] = None,
    refinement_config: Optional[RefinementConfig] = None,
    static_dir: Optional[str] = None,
) -> FastAPI:
    if preprocess_config is None:
        preprocess_config = PreprocessConfig()
    if refinement_config is None:
        refinement_config = RefinementConfig()

    app = FastAPI(title="queryrefine")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/search")
    def search(q: Optional[str] = None, k: str = "5"):
        if not q:
            return _error(400, "missing query parameter q")
        try:
            k_int = int(k)
        except ValueError:
            return _error(400, "k must be an integer")
        k_int = max(1, min(100, k_int))
        retrieval = retrieve_top_k(index, q, k_int, preprocess_config)
        return _search_response(index, q, retrieval)

    async def _json_body(request: Request) -> Optional[dict]:
        try:
            body = await request.json()
        except Exception:
            return None
        return body if isinstance(body, dict) else None

    @app.post("/api/suggest")
    async def suggest(request: Request):
        body = await _json_body(request)
        if body is None or not isinstance(body.get("query"), str) or not body["query"]:
            return _error(400, "body must be a JSON object with a non-empty 'query' string")
        query = body["query"]
        retrieval, terms, descriptors = interactive_suggest(
            query, index, refinement_config, preprocess_config
        )
        return {
            **_search_response(index, query, retrieval),
            "domain_terms": [{"slug": t.slug, "frequency": t.frequency} for t in terms],
            "descriptors": descriptors,
        }

    @app.post("/api/refine")
    async def refine(request: Request):
        body = await _json_body(request)
        if body is None or not isinstance(body.get("query"), str) or not body["query"]:
            return _error(400, "body must be a JSON object with a non-empty 'query' string")
        query = body["query"]
        accepted_terms = body.get("accepted_terms", [])
        accepted_descriptors = body.get("accepted_descriptors", [])
        if not isinstance(accepted_terms, list) or not isinstance(accepted_descriptors, list):
            return _error(400, "accepted_terms and accepted_descriptors must be lists")
        for term in accepted_terms:
            if not isinstance(term, str) or not SLUG_PATTERN.match(term):
                return _error(400, f"invalid term: {term!r}")
        terms = [DomainTerm(slug=t, frequency=1) for t in accepted_terms]
        refined = refine_query(query, terms, accepted_descriptors, preprocess_config)
        k = refinement_config.k_top_docs
        baseline = retrieve_top_k(index, query, k, preprocess_config)
        refined_retrieval = retrieve_top_k(index, refined, k, preprocess_config)
        return {
            "refined_query": refined,
            "baseline": _search_response(index, query, baseline),
            "refined": _search_response(index, refined, refined_retrieval),
        }

    @app.post("/api/ttest")
    async def ttest(request: Request):
        body = await _json_body(request)
        if body is None:
            return _error(400, "body must be a JSON object")
        baseline = body.get("baseline")
        refined = body.get("refined")
        if not _is_number_list(baseline) or not _is_number_list(refined):
            return _error(422, "baseline and refined must be lists of numbers")
        try:
            result = paired_t_test(baseline, refined)
        except ValueError as exc:
            return _error(422, str(exc))
        return {
            "mean_diff": result.mean_diff,
            "sd_diff": result.sd_diff,
            "t_stat": result.t_stat,
            "df": result.df,
            "p_two_tailed": result.p_two_tailed,
        }

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def _is_number_list(value) -> bool:
    return isinstance(value, list) and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    )
