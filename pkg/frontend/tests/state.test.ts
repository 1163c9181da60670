import { describe, expect, it } from "vitest";

import type { RefineResponse, SuggestResponse } from "../src/api.js";
import {
  acceptedDescriptors,
  acceptedTerms,
  applyRefinement,
  applySearch,
  hasAccepted,
  initialState,
  toggleChip,
} from "../src/state.js";

const suggestResponse: SuggestResponse = {
  query: "How can I prepare for an interview?",
  hits: [
    {
      doc_id: 0,
      url: "https://x/career-advising/interview-tips.html",
      title: "Interview Tips",
      score: 0.334948214965,
      snippet: "Interview tips...",
    },
  ],
  out_of_vocabulary: false,
  domain_terms: [
    { slug: "career-advising", frequency: 3 },
    { slug: "resources-online-learning", frequency: 2 },
  ],
  descriptors: ["online resume and interview improvement tools"],
};

function refineResponse(baselineTop: number, refinedTop: number): RefineResponse {
  const hit = (score: number) => ({
    doc_id: 0,
    url: "https://x/a",
    title: "A",
    score,
    snippet: "",
  });
  return {
    refined_query: "how can i prepare for an interview career-advising career advising",
    baseline: { query: "q", hits: [hit(baselineTop)], out_of_vocabulary: false },
    refined: { query: "q refined", hits: [hit(refinedTop)], out_of_vocabulary: false },
  };
}

describe("applySearch", () => {
  it("builds term chips before descriptor chips, none accepted", () => {
    const state = applySearch(initialState(), suggestResponse);
    expect(state.chips.map((c) => c.kind)).toEqual(["term", "term", "descriptor"]);
    expect(state.chips.every((c) => !c.accepted)).toBe(true);
    expect(state.baselineResults).toBe(suggestResponse);
    expect(state.refinedResults).toBeNull();
  });

  it("clears a previous refinement", () => {
    let state = applySearch(initialState(), suggestResponse);
    state = applyRefinement(state, refineResponse(0.3, 0.6));
    state = applySearch(state, suggestResponse);
    expect(state.refinedResults).toBeNull();
    expect(state.refinedQuery).toBeNull();
  });
});

describe("chip toggling", () => {
  it("round-trips: accepted chips equal exactly the values sent to the API", () => {
    let state = applySearch(initialState(), suggestResponse);
    state = toggleChip(state, 1);
    state = toggleChip(state, 2);
    expect(acceptedTerms(state)).toEqual(["resources-online-learning"]);
    expect(acceptedDescriptors(state)).toEqual([
      "online resume and interview improvement tools",
    ]);
    state = toggleChip(state, 1);
    expect(acceptedTerms(state)).toEqual([]);
    expect(hasAccepted(state)).toBe(true);
  });
});

describe("applyRefinement", () => {
  it("records a comparison bar with the API's top scores untouched", () => {
    let state = applySearch(initialState(), suggestResponse);
    state = applyRefinement(state, refineResponse(0.334948214965, 0.652131718228));
    expect(state.comparisonBars).toEqual([
      {
        query: "How can I prepare for an interview?",
        baselineSim: 0.334948214965,
        refinedSim: 0.652131718228,
      },
    ]);
  });

  it("replaces the history entry when the same query is re-applied", () => {
    let state = applySearch(initialState(), suggestResponse);
    state = applyRefinement(state, refineResponse(0.3, 0.5));
    state = applyRefinement(state, refineResponse(0.3, 0.61));
    expect(state.comparisonBars).toHaveLength(1);
    expect(state.comparisonBars[0]?.refinedSim).toBe(0.61);
  });
});
