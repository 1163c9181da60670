// Grouped bar chart (baseline vs refined top similarity) as an SVG string.
// Same 0-1 axis convention as the backend's report figure.

import type { ComparisonBar } from "./state.js";
import { escapeHtml } from "./format.js";

const WIDTH = 560;
const HEIGHT = 300;
const MARGIN = { left: 46, right: 10, top: 16, bottom: 34 };
const BASELINE_COLOR = "#4878a8";
const REFINED_COLOR = "#e08830";

export function comparisonChart(bars: ComparisonBar[]): string {
  if (bars.length === 0) {
    return "";
  }
  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const bottom = MARGIN.top + plotH;
  const yPx = (value: number) => bottom - value * plotH;

  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${WIDTH} ${HEIGHT}" class="comparison-chart" role="img">`,
  ];
  for (let i = 0; i <= 10; i++) {
    const y = yPx(i / 10).toFixed(1);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${MARGIN.left + plotW}" y2="${y}" stroke="#e4e4e4"/>`,
      `<text x="${MARGIN.left - 6}" y="${y}" dy="3" text-anchor="end" font-size="9">${(i / 10).toFixed(1)}</text>`,
    );
  }
  const groupW = plotW / bars.length;
  const barW = Math.min(36, groupW * 0.3);
  bars.forEach((bar, i) => {
    const center = MARGIN.left + (i + 0.5) * groupW;
    const pairs: Array<[number, number, string]> = [
      [center - barW - 2, bar.baselineSim, BASELINE_COLOR],
      [center + 2, bar.refinedSim, REFINED_COLOR],
    ];
    for (const [x, value, color] of pairs) {
      const top = yPx(value);
      parts.push(
        `<rect x="${x.toFixed(1)}" y="${top.toFixed(1)}" width="${barW.toFixed(1)}" height="${(
          bottom - top
        ).toFixed(1)}" fill="${color}"><title>${escapeHtml(bar.query)}</title></rect>`,
      );
    }
    parts.push(
      `<text x="${center.toFixed(1)}" y="${bottom + 14}" text-anchor="middle" font-size="10">Q${
        i + 1
      }</text>`,
    );
  });
  parts.push(
    `<line x1="${MARGIN.left}" y1="${bottom}" x2="${MARGIN.left + plotW}" y2="${bottom}" stroke="#333"/>`,
    "</svg>",
  );
  return parts.join("");
}
