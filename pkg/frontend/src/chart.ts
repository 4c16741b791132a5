/** Minimal SVG line chart for sweep curves (presentation scaling only). */

import type { CurvePoint } from "./sweep.js";

export interface ChartOptions {
  width?: number;
  height?: number;
  pad?: number;
}

export function chartSvg(points: CurvePoint[], opts: ChartOptions = {}): string {
  const width = opts.width ?? 560;
  const height = opts.height ?? 260;
  const pad = opts.pad ?? 36;
  if (points.length === 0) {
    return `<svg viewBox="0 0 ${width} ${height}" class="chart"></svg>`;
  }
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const yMin = Math.min(...ys);
  const yMax = Math.max(...ys);
  const sx = (x: number) => xMax === xMin
    ? width / 2 : pad + ((x - xMin) / (xMax - xMin)) * (width - 2 * pad);
  const sy = (y: number) => yMax === yMin
    ? height / 2 : height - pad - ((y - yMin) / (yMax - yMin)) * (height - 2 * pad);

  const markers = points.map((p) =>
    `<circle cx="${sx(p.x).toFixed(1)}" cy="${sy(p.y).toFixed(1)}" r="3">` +
    `<title>${p.x} → ${p.y}</title></circle>`).join("");
  const path = points.length > 1
    ? `<polyline fill="none" stroke-width="1.5" points="${points.map((p) =>
      `${sx(p.x).toFixed(1)},${sy(p.y).toFixed(1)}`).join(" ")}"/>`
    : "";
  const labels =
    `<text x="${pad}" y="${height - 8}" class="axis">${xMin}</text>` +
    `<text x="${width - pad}" y="${height - 8}" text-anchor="end" class="axis">${xMax}</text>` +
    `<text x="4" y="${height - pad}" class="axis">${yMin}</text>` +
    `<text x="4" y="${pad}" class="axis">${yMax}</text>`;
  return `<svg viewBox="0 0 ${width} ${height}" class="chart">${path}${markers}${labels}</svg>`;
}
