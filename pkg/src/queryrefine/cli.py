"""Command-line entry points.

Subcommands: index, search, refine, experiment, ttest, serve.
Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import harness, refine, stats, vectorindex
from .corpus import PreprocessConfig, ingest_records, load_stopwords

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="queryrefine", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--mode", choices=vectorindex.MODES, default="paper")
        p.add_argument("--stopwords", help="stopword file (default: bundled list)")

    p_index = sub.add_parser("index", help="build an index from a corpus and persist it")
    p_index.add_argument("--corpus", required=True)
    p_index.add_argument("--out", required=True)
    common(p_index)

    p_search = sub.add_parser("search", help="run one query, print ranked hits")
    p_search.add_argument("--corpus", help="corpus record file to index on the fly")
    p_search.add_argument("--index", dest="index_path", help="previously persisted index")
    p_search.add_argument("--query", required=True)
    p_search.add_argument("--top-k", type=int, default=5)
    common(p_search)

    p_refine = sub.add_parser("refine", help="run one query through the refinement loop")
    p_refine.add_argument("--corpus", help="corpus record file to index on the fly")
    p_refine.add_argument("--index", dest="index_path", help="previously persisted index")
    p_refine.add_argument("--query", required=True)
    p_refine.add_argument("--top-k", type=int, default=5)
    p_refine.add_argument("--m-terms", type=int, default=2)
    p_refine.add_argument("--max-iterations", type=int, default=1)
    p_refine.add_argument("--descriptors", help="descriptor lexicon file")
    common(p_refine)

    p_exp = sub.add_parser("experiment", help="full run: report + CSV + SVG")
    p_exp.add_argument("--config", required=True)
    p_exp.add_argument("--output-dir", help="override the config's output_dir")

    p_ttest = sub.add_parser("ttest", help="paired t-test over a results CSV")
    p_ttest.add_argument("--csv", required=True)

    p_serve = sub.add_parser("serve", help="start the HTTP API over a corpus")
    p_serve.add_argument("--corpus", required=True)
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--static-dir", help="directory of built web UI assets to host at /")
    common(p_serve)

    return parser


def _preprocess_config(args) -> PreprocessConfig:
    if getattr(args, "stopwords", None):
        return PreprocessConfig(stopword_set=load_stopwords(args.stopwords))
    return PreprocessConfig()


def _load_or_build_index(args, config: PreprocessConfig) -> vectorindex.Index:
    if getattr(args, "index_path", None):
        return vectorindex.load_index(args.index_path)
    if getattr(args, "corpus", None):
        docs = ingest_records(args.corpus, config)
        return vectorindex.build_index(docs, args.mode)
    raise _UsageError("one of --corpus or --index is required")


def _print_hits(index: vectorindex.Index, retrieval: vectorindex.Retrieval) -> None:
    if retrieval.out_of_vocabulary:
        print("warning: query is out of vocabulary; no results", file=sys.stderr)
    for rank, hit in enumerate(retrieval.hits, start=1):
        doc = index.docs[hit.doc_id]
        print(f"{rank}. [{hit.score:.5f}] doc {hit.doc_id} {doc.url} {doc.title}")


def _cmd_index(args) -> int:
    config = _preprocess_config(args)
    docs = ingest_records(args.corpus, config)
    index = vectorindex.build_index(docs, args.mode)
    vectorindex.save_index(index, args.out)
    print(f"indexed {len(docs)} documents, {len(index.vocabulary.term_to_id)} terms -> {args.out}")
    return EXIT_OK


def _cmd_search(args) -> int:
    config = _preprocess_config(args)
    index = _load_or_build_index(args, config)
    retrieval = vectorindex.retrieve_top_k(index, args.query, args.top_k, config)
    _print_hits(index, retrieval)
    return EXIT_OK


def _cmd_refine(args) -> int:
    config = _preprocess_config(args)
    index = _load_or_build_index(args, config)
    lexicon = (
        refine.load_descriptors(args.descriptors)
        if args.descriptors
        else refine.default_descriptors()
    )
    refinement = refine.RefinementConfig(
        k_top_docs=args.top_k,
        m_terms=args.m_terms,
        max_iterations=args.max_iterations,
        descriptor_lexicon=lexicon,
    )
    record = refine.refine_one(args.query, index, refinement, config)
    print(f"original: {record.original_query}")
    print(f"baseline top similarity: {record.baseline_top_similarity:.5f}")
    for i, it in enumerate(record.iterations, start=1):
        terms = ", ".join(t.slug for t in it.domain_terms_used) or "-"
        print(f"iteration {i}: terms [{terms}]")
        print(f"  refined: {it.refined_query}")
        print(f"  top similarity: {it.top_similarity:.5f}")
    print(f"final: {record.final_query}")
    return EXIT_OK


def _cmd_experiment(args) -> int:
    config = harness.load_config(args.config)
    if args.output_dir:
        config.output_dir = args.output_dir
    report = harness.run_experiment(config)
    for i, row in enumerate(report.rows):
        print(
            f"Q{i + 1}: baseline {row.baseline_top_sim:.5f} -> refined {row.refined_top_sim:.5f}"
        )
    if report.ttest is not None:
        print(f"t={report.ttest.t_stat:.4f}, p={report.ttest.p_two_tailed:.4f}")
    for note in report.notes:
        print(f"note: {note}")
    out = Path(config.output_dir)
    print(f"wrote {out / 'results.csv'}, {out / 'report.json'}, {out / 'figure.svg'}")
    return EXIT_OK


def _cmd_ttest(args) -> int:
    baseline, refined = harness.read_score_csv(args.csv)
    result = stats.paired_t_test(baseline, refined)
    print(f"n={len(baseline)}, df={result.df}")
    print(f"mean_diff={result.mean_diff:.5f}, sd_diff={result.sd_diff:.5f}")
    print(f"t={result.t_stat:.4f}, p={result.p_two_tailed:.4f}")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    config = _preprocess_config(args)
    docs = ingest_records(args.corpus, config)
    index = vectorindex.build_index(docs, args.mode)
    app = create_app(index, preprocess_config=config, static_dir=args.static_dir)
    uvicorn.run(app, host="127.0.0.1", port=args.port)
    return EXIT_OK


_COMMANDS = {
    "index": _cmd_index,
    "search": _cmd_search,
    "refine": _cmd_refine,
    "experiment": _cmd_experiment,
    "ttest": _cmd_ttest,
    "serve": _cmd_serve,
}


def cli_main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
