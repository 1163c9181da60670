// DOM glue: owns the session state, calls the API, re-renders panels.

import * as api from "./api.js";
import {
  SessionState,
  acceptedDescriptors,
  acceptedTerms,
  applyRefinement,
  applySearch,
  hasAccepted,
  initialState,
  setError,
  toggleChip,
} from "./state.js";
import { renderChips, renderComparison, renderError, renderHits, renderStatsPanel } from "./render.js";

let state: SessionState = initialState();
let requestSeq = 0; // latest search wins; stale responses are dropped

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function render(): void {
  el("error").innerHTML = renderError(state.error);
  el("suggestions").innerHTML = renderChips(state);
  if (state.refinedResults && state.baselineResults) {
    el("results").innerHTML = renderComparison(state);
  } else if (state.baselineResults) {
    el("results").innerHTML = renderHits(state.baselineResults, "Results");
  } else {
    el("results").innerHTML = "";
  }
  const applyButton = el("apply") as HTMLButtonElement;
  applyButton.disabled = !state.baselineResults || !hasAccepted(state);
  void updateStatsPanel();
}

async function updateStatsPanel(): Promise<void> {
  const panel = el("stats");
  if (state.comparisonBars.length < 2) {
    panel.innerHTML = renderStatsPanel(state, null);
    return;
  }
  try {
    const result = await api.ttest(
      state.comparisonBars.map((b) => b.baselineSim),
      state.comparisonBars.map((b) => b.refinedSim),
    );
    panel.innerHTML = renderStatsPanel(state, result);
  } catch (err) {
    if (err instanceof api.ApiError && err.status === 422) {
      panel.innerHTML = renderStatsPanel(state, null);
    } else {
      panel.innerHTML = renderError(err instanceof Error ? err.message : String(err));
    }
  }
}

async function runSearch(): Promise<void> {
  const input = el("query") as HTMLInputElement;
  const query = input.value.trim();
  if (!query) return;
  const seq = ++requestSeq;
  try {
    const response = await api.suggest(query);
    if (seq !== requestSeq) return;
    state = applySearch(state, response);
  } catch (err) {
    if (seq !== requestSeq) return;
    state = setError(state, err instanceof Error ? err.message : String(err));
  }
  render();
}

async function applyAccepted(): Promise<void> {
  try {
    const response = await api.refine(
      state.currentQuery,
      acceptedTerms(state),
      acceptedDescriptors(state),
    );
    state = applyRefinement(state, response);
  } catch (err) {
    // Chips stay toggled so the user can adjust and retry.
    state = setError(state, err instanceof Error ? err.message : String(err));
  }
  render();
}

function init(): void {
  el("search-form").addEventListener("submit", (event) => {
    event.preventDefault();
    void runSearch();
  });
  const input = el("query") as HTMLInputElement;
  const submit = el("submit") as HTMLButtonElement;
  input.addEventListener("input", () => {
    submit.disabled = input.value.trim() === "";
  });
  submit.disabled = true;
  el("suggestions").addEventListener("click", (event) => {
    const target = (event.target as HTMLElement).closest("[data-chip-index]");
    if (!target) return;
    state = toggleChip(state, Number(target.getAttribute("data-chip-index")));
    render();
  });
  el("apply").addEventListener("click", () => void applyAccepted());
  render();
}

document.addEventListener("DOMContentLoaded", init);
