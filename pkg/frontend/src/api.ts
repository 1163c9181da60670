// Typed client for the retrieval service. All numbers displayed anywhere in
// the UI must originate from these responses; the client never rescores.

export interface Hit {
  doc_id: number;
  url: string;
  title: string;
  score: number;
  snippet: string;
}

export interface SearchResponse {
  query: string;
  hits: Hit[];
  out_of_vocabulary: boolean;
}

export interface DomainTerm {
  slug: string;
  frequency: number;
}

export interface SuggestResponse extends SearchResponse {
  domain_terms: DomainTerm[];
  descriptors: string[];
}

export interface RefineResponse {
  refined_query: string;
  baseline: SearchResponse;
  refined: SearchResponse;
}

export interface TTestResponse {
  mean_diff: number;
  sd_diff: number;
  t_stat: number;
  df: number;
  p_two_tailed: number;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, init);
  const body = await response.json().catch(() => null);
  if (!response.ok) {
    const message = body && typeof body.error === "string" ? body.error : response.statusText;
    throw new ApiError(response.status, message);
  }
  return body as T;
}

function post(payload: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(payload),
  };
}

export function search(query: string, k = 5): Promise<SearchResponse> {
  const params = new URLSearchParams({ q: query, k: String(k) });
  return request(`/api/search?${params}`);
}

export function suggest(query: string): Promise<SuggestResponse> {
  return request("/api/suggest", post({ query }));
}

export function refine(
  query: string,
  acceptedTerms: string[],
  acceptedDescriptors: string[],
): Promise<RefineResponse> {
  return request(
    "/api/refine",
    post({ query, accepted_terms: acceptedTerms, accepted_descriptors: acceptedDescriptors }),
  );
}

export function ttest(baseline: number[], refined: number[]): Promise<TTestResponse> {
  return request("/api/ttest", post({ baseline, refined }));
}
