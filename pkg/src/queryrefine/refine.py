"""Semi-automated query refinement.

Mines hyphenated slugs from the URLs of top-ranked documents, picks
descriptor phrases that overlap the query, and expands the query with
both. Expansion appends a slug verbatim plus its hyphen-split words so
the refined query matches slugs in URLs and split words in page bodies.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import List, Sequence, Tuple
from urllib.parse import urlsplit

from .corpus import PreprocessConfig, preprocess
from .vectorindex import Index, RankedHit, Retrieval, retrieve_top_k

SLUG_PATTERN = re.compile(r"^[a-z0-9]+(?:-[a-z0-9]+)+$")

# Trailing file extension of up to 5 alphanumerics ("interview-tips.html").
_EXTENSION = re.compile(r"\.[a-zA-Z0-9]{1,5}$")


@dataclass
class DomainTerm:
    slug: str
    frequency: int


def load_descriptors(path: str | Path) -> List[str]:
    """Read a descriptor lexicon file: one phrase per line, '#' comments."""
    phrases = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            phrases.append(line)
    return phrases


def default_descriptors() -> List[str]:
    text = resources.files("queryrefine.data").joinpath("descriptors.txt").read_text("utf-8")
    return [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    ]


@dataclass
class RefinementConfig:
    k_top_docs: int = 5
    m_terms: int = 2
    max_iterations: int = 1
    descriptor_lexicon: List[str] = field(default_factory=default_descriptors)
    accept_only_improving: bool = True

    def __post_init__(self):
        if self.k_top_docs < 1:
            raise ValueError("k_top_docs must be positive")
        if self.m_terms < 1:
            raise ValueError("m_terms must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        for phrase in self.descriptor_lexicon:
            if not phrase:
                raise ValueError("descriptor phrases must be non-empty")


def extract_domain_terms(urls: Sequence[str], limit: int) -> List[DomainTerm]:
    """Mine hyphenated path-segment slugs, most frequent first.

    Query strings and fragments are discarded; a short trailing file
    extension is stripped before the slug check. Unparseable URLs are
    skipped.
    """
    counts, _ = _extract_with_diagnostics(urls)
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return [DomainTerm(slug=slug, frequency=freq) for slug, freq in ranked[:limit]]


def _extract_with_diagnostics(urls: Sequence[str]) -> Tuple[Counter, int]:
    counts: Counter[str] = Counter()
    skipped = 0
    for url in urls:
        try:
            # Scheme-less inputs parse as path-only, which is fine here.
            path = urlsplit(url).path
        except ValueError:
            skipped += 1
            continue
        for segment in path.split("/"):
            segment = _EXTENSION.sub("", segment).lower()
            if SLUG_PATTERN.match(segment):
                counts[segment] += 1
    return counts, skipped


def suggest_descriptors(
    query: str,
    lexicon: Sequence[str],
    config: PreprocessConfig | None = None,
) -> List[str]:
    """Lexicon phrases sharing at least one content token with the query."""
    query_tokens = set(preprocess(query, config))
    if not query_tokens:
        return []
    return [
        phrase
        for phrase in lexicon
        if query_tokens & set(preprocess(phrase, config))
    ]


def refine_query(
    query: str,
    terms: Sequence[DomainTerm],
    descriptors: Sequence[str],
    config: PreprocessConfig | None = None,
) -> str:
    """Expand a query with slugs (verbatim plus split words) and descriptors.

    Deduplication works at the preprocessed-token level: a token already
    contributed by the query or an earlier expansion is not re-appended,
    so the original query's tokens are always a subset of the result's.
    """
    seen = set(preprocess(query, config))
    parts = [query] if query else []
    for term in terms:
        for candidate in [term.slug, *term.slug.split("-")]:
            _append_new(candidate, parts, seen, config)
    for phrase in descriptors:
        for candidate in phrase.split():
            _append_new(candidate, parts, seen, config)
    return " ".join(parts)


def _append_new(candidate: str, parts: List[str], seen: set, config) -> None:
    # Stopwords and too-short words normalize away and add nothing.
    fresh = [tok for tok in preprocess(candidate, config) if tok not in seen]
    seen.update(fresh)
    parts.extend(fresh)


@dataclass
class RefinementIteration:
    domain_terms_used: List[DomainTerm]
    descriptors_used: List[str]
    refined_query: str
    top_similarity: float


@dataclass
class RefinementRecord:
    original_query: str
    iterations: List[RefinementIteration]
    final_query: str
    baseline_top_similarity: float


def _top_score(retrieval: Retrieval) -> float:
    return retrieval.hits[0].score if retrieval.hits else 0.0


def _top_urls(index: Index, hits: Sequence[RankedHit]) -> List[str]:
    return [index.docs[hit.doc_id].url for hit in hits]


def refine_one(
    query: str,
    index: Index,
    config: RefinementConfig,
    preprocess_config: PreprocessConfig | None = None,
) -> RefinementRecord:
    """Run the refinement loop for a single query."""
    baseline = retrieve_top_k(index, query, config.k_top_docs, preprocess_config)
    baseline_top = _top_score(baseline)

    current_query = query
    current_hits = baseline.hits
    current_top = baseline_top
    iterations: List[RefinementIteration] = []
    for _ in range(config.max_iterations):
        terms = extract_domain_terms(_top_urls(index, current_hits), config.m_terms)
        descriptors = suggest_descriptors(
            current_query, config.descriptor_lexicon, preprocess_config
        )
        refined = refine_query(current_query, terms, descriptors, preprocess_config)
        if refined == current_query:
            break
        retrieval = retrieve_top_k(index, refined, config.k_top_docs, preprocess_config)
        top = _top_score(retrieval)
        if config.accept_only_improving and top <= current_top:
            break
        iterations.append(
            RefinementIteration(
                domain_terms_used=terms,
                descriptors_used=descriptors,
                refined_query=refined,
                top_similarity=top,
            )
        )
        current_query = refined
        current_hits = retrieval.hits
        current_top = top
    return RefinementRecord(
        original_query=query,
        iterations=iterations,
        final_query=current_query,
        baseline_top_similarity=baseline_top,
    )


def refine_all(
    queries: Sequence[str],
    index: Index,
    config: RefinementConfig,
    preprocess_config: PreprocessConfig | None = None,
) -> List[RefinementRecord]:
    """Refinement loop over a query list (Algorithm: retrieve, mine, expand)."""
    if not queries:
        raise ValueError("queries must be non-empty")
    return [refine_one(q, index, config, preprocess_config) for q in queries]


def interactive_suggest(
    query: str,
    index: Index,
    config: RefinementConfig,
    preprocess_config: PreprocessConfig | None = None,
) -> Tuple[Retrieval, List[DomainTerm], List[str]]:
    """One retrieval pass plus candidate terms/descriptors for human approval.

    No expansion happens here; the caller applies accepted candidates via
    refine_query.
    """
    retrieval = retrieve_top_k(index, query, config.k_top_docs, preprocess_config)
    terms = extract_domain_terms(_top_urls(index, retrieval.hits), config.m_terms)
    descriptors = suggest_descriptors(query, config.descriptor_lexicon, preprocess_config)
    return retrieval, terms, descriptors
