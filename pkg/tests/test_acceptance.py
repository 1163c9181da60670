"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
"""

import dataclasses
import math
import random
import time


from naive_oracle import naive_scores
from queryrefine.corpus import PreprocessConfig
from queryrefine.harness import (
    read_score_csv,
    reference_report,
    run_all_queries,
    run_experiment,
)
from queryrefine.refine import extract_domain_terms
from queryrefine.stats import paired_t_test, reg_inc_beta, summarize, t_cdf
from queryrefine.vectorindex import build_index, retrieve_top_k

TABLE_BASELINE = [0.16888, 0.20048, 0.18041, 0.45991, 0.34464]
TABLE_REFINED = [0.24619, 0.29034, 0.43898, 0.50654, 0.42653]


def _report(criterion, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"\nACCEPTANCE {criterion}: {status} {detail}".rstrip())
    assert ok, f"criterion {criterion} failed: {detail}"


def test_criterion_1_ttest_reproduction():
    start = time.monotonic()
    result = paired_t_test(TABLE_BASELINE, TABLE_REFINED)
    elapsed = time.monotonic() - start
    ok = (
        abs(result.t_stat - (-2.9444)) <= 0.0005
        and abs(result.p_two_tailed - 0.0422) <= 0.0005
        and elapsed < 1.0
    )
    _report(1, ok, f"t={result.t_stat:.4f} p={result.p_two_tailed:.4f} ({elapsed:.3f}s)")


def test_criterion_2_oracle_equivalence():
    start = time.monotonic()
    rng = random.Random(20240817)
    no_stopwords = PreprocessConfig(stopword_set=frozenset())
    worst = 0.0
    for _ in range(100):
        vocab = [f"t{i}" for i in range(rng.randint(2, 50))]
        token_lists = [
            [rng.choice(vocab) for _ in range(rng.randint(1, 25))]
            for _ in range(rng.randint(2, 20))
        ]
        from test_vectorindex import make_docs

        index = build_index(make_docs(token_lists))
        query_tokens = [rng.choice(vocab) for _ in range(rng.randint(1, 6))]
        result = retrieve_top_k(index, " ".join(query_tokens), len(token_lists), no_stopwords)
        expected = naive_scores(token_lists, query_tokens)
        got = {h.doc_id: h.score for h in result.hits}
        for doc_id, score in enumerate(expected):
            worst = max(worst, abs(got.get(doc_id, 0.0) - score))
    elapsed = time.monotonic() - start
    ok = worst <= 1e-12 and elapsed < 10.0
    _report(2, ok, f"max |engine - oracle| = {worst:.2e} over 100 corpora ({elapsed:.2f}s)")


def test_criterion_3_special_function_accuracy():
    worst_cdf = 0.0
    t = -10.0
    while t <= 10.0:
        cauchy = 0.5 + math.atan(t) / math.pi
        df2 = 0.5 + t / (2 * math.sqrt(2) * math.sqrt(1 + t * t / 2))
        worst_cdf = max(worst_cdf, abs(t_cdf(t, 1) - cauchy), abs(t_cdf(t, 2) - df2))
        t += 0.01
    worst_beta = 0.0
    for a, b in [(0.5, 0.5), (1, 1), (2, 3), (2.0, 0.5), (7.5, 3.25)]:
        worst_beta = max(worst_beta, abs(reg_inc_beta(a, b, 0.0)), abs(reg_inc_beta(a, b, 1.0) - 1.0))
        for x in (0.1, 0.25, 0.5, 0.75, 0.9):
            worst_beta = max(
                worst_beta, abs(reg_inc_beta(a, b, x) - (1.0 - reg_inc_beta(b, a, 1.0 - x)))
            )
    ok = worst_cdf <= 1e-9 and worst_beta <= 1e-10
    _report(3, ok, f"cdf err {worst_cdf:.2e}, beta err {worst_beta:.2e}")


def test_criterion_4_refinement_fixture(fixture_config):
    report = run_all_queries(fixture_config)
    improvements = [r.refined_top_sim > r.baseline_top_sim for r in report.rows]
    p = report.ttest.p_two_tailed if report.ttest else 1.0
    ok = len(report.rows) == 5 and all(improvements) and p < 0.05
    _report(4, ok, f"improved {sum(improvements)}/5, p={p:.4f}")


def test_criterion_5_slug_extraction(fixtures_dir):
    from test_refine import URL_FIXTURE_EXPECTED

    career_page_url = "https://careers.humber.ca/resources-online-learning/interview-tips.html"
    single = {t.slug for t in extract_domain_terms([career_page_url], 10)}
    urls = (fixtures_dir / "urls.txt").read_text().split()
    ranked = [(t.slug, t.frequency) for t in extract_domain_terms(urls, 100)]
    ok = "resources-online-learning" in single and ranked == URL_FIXTURE_EXPECTED
    _report(5, ok, f"{len(ranked)} slugs ranked as frozen")


def test_criterion_6_determinism_round_trip(fixture_config, tmp_path):
    c1 = dataclasses.replace(fixture_config, output_dir=str(tmp_path / "a"))
    c2 = dataclasses.replace(fixture_config, output_dir=str(tmp_path / "b"))
    report = run_experiment(c1)
    run_experiment(c2)
    identical = all(
        (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
        for name in ("results.csv", "figure.svg")
    )
    baseline, refined = read_score_csv(tmp_path / "a" / "results.csv")
    ok = identical and paired_t_test(baseline, refined) == report.ttest
    _report(6, ok, "csv/svg byte-identical, ttest round-trips")


def test_criterion_7_reference_means_and_discrepancy_note():
    mean_b = summarize(TABLE_BASELINE).mean
    mean_r = summarize(TABLE_REFINED).mean
    notes = " ".join(reference_report().notes)
    ok = (
        abs(mean_b - 0.27086) <= 1e-5
        and abs(mean_r - 0.38172) <= 1e-5
        and "0.18" in notes
        and "0.42" in notes
    )
    _report(7, ok, f"means {mean_b:.5f}/{mean_r:.5f}, note flagged")
