// Display formatting. Scores show 5 decimals (matching the report tables),
// test statistics 4. Values are formatted, never recomputed.

export function formatScore(value: number): string {
  return value.toFixed(5);
}

export function formatStat(value: number): string {
  return value.toFixed(4);
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
