/**
 * Result-panel text, produced exclusively from service response fields.
 * No statistic is ever computed here: functions only select response values
 * and apply display scaling (percent, fixed decimals).
 */

import type { ApiInterval, ApiResponse } from "./types.js";

function pct(value: number, decimals: number): string {
  return `${(value * 100).toFixed(decimals)}%`;
}

function isProportion(estimand: string): boolean {
  return estimand.startsWith("proportion");
}

export function intervalText(interval: ApiInterval, estimand: string,
                             unitScale: boolean): string {
  if (isProportion(estimand)) {
    return `[${(interval.lower * 100).toFixed(1)}%, ${(interval.upper * 100).toFixed(1)}%]`;
  }
  if (estimand === "stddev" && unitScale) {
    return `[${interval.lower.toFixed(4)}s, ${interval.upper.toFixed(4)}s]`;
  }
  if (estimand === "stddev") {
    return `[${interval.lower.toFixed(4)}, ${interval.upper.toFixed(4)}]`;
  }
  return `[${interval.lower.toFixed(2)}, ${interval.upper.toFixed(2)}]`;
}

/** The headline result line for a response (the value a preset pins). */
export function resultText(response: ApiResponse): string {
  if (response.kind === "sample_size") {
    if (response.events !== null) {
      return `E = ${response.events}, N = ${response.sample_size}`;
    }
    return `N = ${response.sample_size}`;
  }
  if (response.kind === "precision") {
    if (response.estimand === "correlation") {
      return `width = ${(response.precision ?? NaN).toFixed(4)}`;
    }
    return `delta = ${pct(response.precision ?? NaN, 2)}`;
  }
  const interval = response.interval;
  if (interval === null) return "";
  const unitScale = response.params["s"] === 1 || response.params["s"] === undefined;
  return intervalText(interval, response.estimand, unitScale);
}

/** Secondary lines: achieved precision, hazard interval, verbatim warnings. */
export function detailLines(response: ApiResponse): string[] {
  const lines: string[] = [];
  if (response.kind === "sample_size" && response.precision !== null) {
    const label = response.estimand === "correlation"
      ? `achieved width = ${response.precision.toFixed(4)}`
      : `achieved precision = ${pct(response.precision, 2)}`;
    lines.push(label);
  }
  if (response.hazard_interval !== null) {
    lines.push(`hazard rate interval = ${intervalText(response.hazard_interval,
      response.estimand, false)}`);
  }
  for (const warning of response.warnings) lines.push(`warning: ${warning}`);
  return lines;
}
