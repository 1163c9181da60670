"""TF-IDF vocabulary, sparse vectors and cosine top-k retrieval.

Weights follow tf * ln(n_docs / df) in the default "paper" mode; the
"smoothed" mode uses ln((1 + n_docs) / (1 + df)) + 1 for comparison with
toolkit defaults. Log base is natural throughout: any other base rescales
every idf by a constant, which cancels in cosine ranking.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from .corpus import Document, PreprocessConfig, preprocess

MODES = ("paper", "smoothed")

_INDEX_FORMAT_VERSION = 1


@dataclass
class Vocabulary:
    term_to_id: Dict[str, int]
    doc_freq: List[int]  # indexed by term id
    n_docs: int

    def id_to_term(self) -> List[str]:
        terms = [""] * len(self.term_to_id)
        for term, tid in self.term_to_id.items():
            terms[tid] = term
        return terms


def term_frequency(tokens: Sequence[str], term: str) -> int:
    """Raw occurrence count of term in the token stream."""
    return sum(1 for tok in tokens if tok == term)


def idf(term: str, vocab: Vocabulary, mode: str = "paper") -> float:
    """Inverse document frequency of a known term."""
    if term not in vocab.term_to_id:
        raise KeyError(f"unknown term: {term!r}")
    df = vocab.doc_freq[vocab.term_to_id[term]]
    if mode == "paper":
        return math.log(vocab.n_docs / df)
    if mode == "smoothed":
        return math.log((1 + vocab.n_docs) / (1 + df)) + 1.0
    raise ValueError(f"unknown weighting mode: {mode!r}")


@dataclass
class SparseVector:
    """(term_id, weight) pairs, strictly increasing by id, no zero weights."""

    entries: List[Tuple[int, float]]
    norm: float

    @classmethod
    def from_weights(cls, weights: Dict[int, float]) -> "SparseVector":
        entries = sorted((tid, w) for tid, w in weights.items() if w != 0.0)
        norm = math.sqrt(sum(w * w for _, w in entries))
        return cls(entries=entries, norm=norm)

    def is_empty(self) -> bool:
        return not self.entries


def vectorize(tokens: Sequence[str], vocab: Vocabulary, mode: str = "paper") -> SparseVector:
    """Embed a token stream; out-of-vocabulary tokens are dropped."""
    counts = Counter(tokens)
    weights: Dict[int, float] = {}
    for term, tf in counts.items():
        tid = vocab.term_to_id.get(term)
        if tid is None:
            continue
        weight = tf * idf(term, vocab, mode)
        if weight != 0.0:
            weights[tid] = weight
    return SparseVector.from_weights(weights)


def cosine(a: SparseVector, b: SparseVector) -> float:
    """Cosine similarity; 0 by convention when either vector is empty."""
    if a.norm == 0.0 or b.norm == 0.0:
        return 0.0
    dot = 0.0
    i = j = 0
    ea, eb = a.entries, b.entries
    while i < len(ea) and j < len(eb):
        ta, wa = ea[i]
        tb, wb = eb[j]
        if ta == tb:
            dot += wa * wb
            i += 1
            j += 1
        elif ta < tb:
            i += 1
        else:
            j += 1
    return dot / (a.norm * b.norm)


@dataclass
class RankedHit:
    doc_id: int
    score: float


@dataclass
class Index:
    vocabulary: Vocabulary
    doc_vectors: List[SparseVector]
    weighting_mode: str
    docs: List[Document]


def build_index(docs: Sequence[Document], mode: str = "paper") -> Index:
    """Build vocabulary and document vectors; term ids follow sorted term order."""
    if not docs:
        raise ValueError("empty corpus")
    if mode not in MODES:
        raise ValueError(f"unknown weighting mode: {mode!r}")
    df_counter: Counter[str] = Counter()
    for doc in docs:
        df_counter.update(set(doc.tokens))
    terms = sorted(df_counter)
    vocab = Vocabulary(
        term_to_id={term: tid for tid, term in enumerate(terms)},
        doc_freq=[df_counter[term] for term in terms],
        n_docs=len(docs),
    )
    vectors = [vectorize(doc.tokens, vocab, mode) for doc in docs]
    return Index(vocabulary=vocab, doc_vectors=vectors, weighting_mode=mode, docs=list(docs))


@dataclass
class Retrieval:
    """Ranked hits plus a flag for queries with no in-vocabulary token."""

    hits: List[RankedHit]
    out_of_vocabulary: bool


def retrieve_top_k(
    index: Index,
    query_text: str,
    k: int,
    config: PreprocessConfig | None = None,
) -> Retrieval:
    """Score the query against every document vector; top-k by score.

    Ties break by ascending doc_id so ranking is a total order.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    query_vec = vectorize(preprocess(query_text, config), index.vocabulary, index.weighting_mode)
    if query_vec.is_empty():
        return Retrieval(hits=[], out_of_vocabulary=True)
    scored = [
        (doc_vec_id, cosine(query_vec, doc_vec))
        for doc_vec_id, doc_vec in enumerate(index.doc_vectors)
    ]
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    hits = [RankedHit(doc_id=doc_id, score=score) for doc_id, score in scored[:k]]
    return Retrieval(hits=hits, out_of_vocabulary=False)


def save_index(index: Index, path: str | Path) -> None:
    """Persist an index as JSON; weights stored as float hex for bit-exact reload."""
    payload = {
        "version": _INDEX_FORMAT_VERSION,
        "weighting_mode": index.weighting_mode,
        "n_docs": index.vocabulary.n_docs,
        "terms": index.vocabulary.id_to_term(),
        "doc_freq": index.vocabulary.doc_freq,
        "vectors": [
            {
                "entries": [[tid, w.hex()] for tid, w in vec.entries],
                "norm": vec.norm.hex(),
            }
            for vec in index.doc_vectors
        ],
        "docs": [
            {"url": d.url, "title": d.title, "text": d.text, "tokens": d.tokens}
            for d in index.docs
        ],
    }
    Path(path).write_text(json.dumps(payload), encoding="utf-8")


def load_index(path: str | Path) -> Index:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if payload.get("version") != _INDEX_FORMAT_VERSION:
        raise ValueError(f"unsupported index format version: {payload.get('version')!r}")
    terms = payload["terms"]
    vocab = Vocabulary(
        term_to_id={term: tid for tid, term in enumerate(terms)},
        doc_freq=list(payload["doc_freq"]),
        n_docs=payload["n_docs"],
    )
    vectors = [
        SparseVector(
            entries=[(tid, float.fromhex(w)) for tid, w in vec["entries"]],
            norm=float.fromhex(vec["norm"]),
        )
        for vec in payload["vectors"]
    ]
    docs = [
        Document(doc_id=i, url=d["url"], title=d["title"], text=d["text"], tokens=d["tokens"])
        for i, d in enumerate(payload["docs"])
    ]
    return Index(
        vocabulary=vocab,
        doc_vectors=vectors,
        weighting_mode=payload["weighting_mode"],
        docs=docs,
    )
