// Session state for one tab: current query, suggestion chips with accept
// toggles, the latest baseline/refined result pair, and the per-query score
// history feeding the stats panel.

import type { RefineResponse, SearchResponse, SuggestResponse } from "./api.js";

export interface Chip {
  kind: "term" | "descriptor";
  value: string;
  accepted: boolean;
}

export interface ComparisonBar {
  query: string;
  baselineSim: number;
  refinedSim: number;
}

export interface SessionState {
  currentQuery: string;
  chips: Chip[];
  baselineResults: SearchResponse | null;
  refinedResults: SearchResponse | null;
  refinedQuery: string | null;
  comparisonBars: ComparisonBar[];
  error: string | null;
}

export function initialState(): SessionState {
  return {
    currentQuery: "",
    chips: [],
    baselineResults: null,
    refinedResults: null,
    refinedQuery: null,
    comparisonBars: [],
    error: null,
  };
}

export function applySearch(state: SessionState, response: SuggestResponse): SessionState {
  const chips: Chip[] = [
    ...response.domain_terms.map(
      (t): Chip => ({ kind: "term", value: t.slug, accepted: false }),
    ),
    ...response.descriptors.map(
      (d): Chip => ({ kind: "descriptor", value: d, accepted: false }),
    ),
  ];
  return {
    ...state,
    currentQuery: response.query,
    chips,
    baselineResults: response,
    refinedResults: null,
    refinedQuery: null,
    error: null,
  };
}

export function toggleChip(state: SessionState, index: number): SessionState {
  const chips = state.chips.map((chip, i) =>
    i === index ? { ...chip, accepted: !chip.accepted } : chip,
  );
  return { ...state, chips };
}

export function acceptedTerms(state: SessionState): string[] {
  return state.chips.filter((c) => c.kind === "term" && c.accepted).map((c) => c.value);
}

export function acceptedDescriptors(state: SessionState): string[] {
  return state.chips.filter((c) => c.kind === "descriptor" && c.accepted).map((c) => c.value);
}

export function hasAccepted(state: SessionState): boolean {
  return state.chips.some((c) => c.accepted);
}

export function applyRefinement(state: SessionState, response: RefineResponse): SessionState {
  const topBaseline = response.baseline.hits[0]?.score ?? 0;
  const topRefined = response.refined.hits[0]?.score ?? 0;
  const bar: ComparisonBar = {
    query: state.currentQuery,
    baselineSim: topBaseline,
    refinedSim: topRefined,
  };
  // One history entry per query text; re-applying replaces it.
  const bars = state.comparisonBars.filter((b) => b.query !== state.currentQuery);
  return {
    ...state,
    baselineResults: response.baseline,
    refinedResults: response.refined,
    refinedQuery: response.refined_query,
    comparisonBars: [...bars, bar],
    error: null,
  };
}

export function setError(state: SessionState, message: string): SessionState {
  return { ...state, error: message };
}
