#!/usr/bin/env python3
"""Brute-force scoring oracle.

Recomputes tf-idf weights and cosine similarities with dense scalar loops,
independently of the sparse-vector engine, so fixture expectations can be
frozen from a second implementation. Run directly to print the fixture
corpus expectations used by the test suite.

Usage: python3 tools/naive_oracle.py [config.json]
"""

from __future__ import annotations

import math
import sys
from pathlib import Path
from typing import List, Sequence

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from queryrefine.corpus import preprocess  # tokenization is shared; scoring is not


def naive_scores(
    docs_tokens: Sequence[Sequence[str]],
    query_tokens: Sequence[str],
    mode: str = "paper",
) -> List[float]:
    """Cosine score of the query against every document, dense loops only."""
    n_docs = len(docs_tokens)
    terms = sorted({t for tokens in docs_tokens for t in tokens})

    def df(term):
        return sum(1 for tokens in docs_tokens if term in tokens)

    def idf(term):
        if mode == "paper":
            return math.log(n_docs / df(term))
        return math.log((1 + n_docs) / (1 + df(term))) + 1.0

    def dense_vector(tokens):
        vec = []
        for term in terms:
            tf = 0
            for tok in tokens:
                if tok == term:
                    tf += 1
            vec.append(tf * idf(term))
        return vec

    def cosine(a, b):
        dot = 0.0
        na = 0.0
        nb = 0.0
        for x, y in zip(a, b):
            dot += x * y
            na += x * x
            nb += y * y
        if na == 0.0 or nb == 0.0:
            return 0.0
        return dot / (math.sqrt(na) * math.sqrt(nb))

    qvec = dense_vector(query_tokens)
    return [cosine(qvec, dense_vector(tokens)) for tokens in docs_tokens]


def naive_top_score(docs_tokens, query_text, mode="paper", config=None) -> float:
    scores = naive_scores(docs_tokens, preprocess(query_text, config), mode)
    return max(scores) if scores else 0.0


def main(argv: List[str]) -> int:
    from queryrefine import harness

    config_path = argv[1] if len(argv) > 1 else "fixtures/experiment.json"
    cfg = harness.load_config(config_path)
    report = harness.run_all_queries(cfg)
    from queryrefine.corpus import ingest_records

    docs = ingest_records(cfg.corpus_path, cfg.preprocess)
    docs_tokens = [d.tokens for d in docs]
    print("query_id baseline(oracle) refined(oracle) baseline(engine) refined(engine)")
    for i, row in enumerate(report.rows):
        base = naive_top_score(docs_tokens, row.query_text, cfg.weighting_mode, cfg.preprocess)
        refined = naive_top_score(
            docs_tokens, row.refined_query_text, cfg.weighting_mode, cfg.preprocess
        )
        print(
            f"Q{i + 1} {base:.12f} {refined:.12f} "
            f"{row.baseline_top_sim:.12f} {row.refined_top_sim:.12f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
