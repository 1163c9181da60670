// HTML renderers. Pure string-in/string-out so they are testable without a
// browser; main.ts mounts the output and wires events.

import type { SearchResponse, TTestResponse } from "./api.js";
import type { SessionState } from "./state.js";
import { comparisonChart } from "./chart.js";
import { escapeHtml, formatScore, formatStat } from "./format.js";

export function renderHits(results: SearchResponse, heading: string): string {
  if (results.out_of_vocabulary) {
    return `<section class="results"><h3>${escapeHtml(heading)}</h3>` +
      `<p class="notice">No matching terms in the corpus vocabulary.</p></section>`;
  }
  const rows = results.hits
    .map(
      (hit) => `<li class="hit">
  <span class="score-badge">${formatScore(hit.score)}</span>
  <div class="hit-body">
    <div class="hit-title">${escapeHtml(hit.title || hit.url || `doc ${hit.doc_id}`)}</div>
    <div class="hit-url">${escapeHtml(hit.url)}</div>
    <div class="hit-snippet">${escapeHtml(hit.snippet)}</div>
  </div>
</li>`,
    )
    .join("\n");
  return `<section class="results"><h3>${escapeHtml(heading)}</h3><ol>${rows}</ol></section>`;
}

export function renderChips(state: SessionState): string {
  if (state.chips.length === 0) {
    return state.baselineResults
      ? '<p class="notice">No suggestions for this query.</p>'
      : "";
  }
  const chips = state.chips
    .map(
      (chip, i) =>
        `<button class="chip chip-${chip.kind}${chip.accepted ? " accepted" : ""}" ` +
        `data-chip-index="${i}">${escapeHtml(chip.value)}</button>`,
    )
    .join("");
  return `<div class="chips">${chips}</div>`;
}

export function renderComparison(state: SessionState): string {
  if (!state.baselineResults || !state.refinedResults) {
    return "";
  }
  const refinedLabel = state.refinedQuery
    ? `Refined: ${state.refinedQuery}`
    : "Refined";
  return `<div class="comparison">
<div class="column">${renderHits(state.baselineResults, "Baseline")}</div>
<div class="column">${renderHits(state.refinedResults, refinedLabel)}</div>
</div>
${comparisonChart(state.comparisonBars)}`;
}

export function renderStatsPanel(state: SessionState, result: TTestResponse | null): string {
  if (state.comparisonBars.length < 2) {
    return '<p class="notice">Run at least two query comparisons to enable the t-test panel.</p>';
  }
  if (result === null) {
    return '<p class="notice">The paired t-test is undefined for these pairs (degenerate or too few differences).</p>';
  }
  const significant = result.p_two_tailed < 0.05;
  return `<dl class="ttest">
<dt>t</dt><dd>${formatStat(result.t_stat)}</dd>
<dt>df</dt><dd>${result.df}</dd>
<dt>p (two-tailed)</dt><dd>${formatStat(result.p_two_tailed)}</dd>
</dl>
<span class="badge ${significant ? "significant" : "not-significant"}">${
    significant ? "significant at 5%" : "not significant at 5%"
  }</span>`;
}

export function renderError(message: string | null): string {
  return message ? `<div class="error-banner">${escapeHtml(message)}</div>` : "";
}
