"""Lexical retrieval with semi-automated, URL-slug-driven query refinement."""

from .corpus import Document, PreprocessConfig, preprocess
from .refine import DomainTerm, RefinementConfig, RefinementRecord, refine_all
from .stats import TTestResult, paired_t_test
from .vectorindex import Index, RankedHit, SparseVector, build_index, cosine, retrieve_top_k

__all__ = [
    "Document",
    "PreprocessConfig",
    "preprocess",
    "DomainTerm",
    "RefinementConfig",
    "RefinementRecord",
    "refine_all",
    "TTestResult",
    "paired_t_test",
    "Index",
    "RankedHit",
    "SparseVector",
    "build_index",
    "cosine",
    "retrieve_top_k",
]

__version__ = "0.1.0"
