/**
 * Parameter sweeps: vary one input over a range and chart the service's
 * answers.  Every curve point is a value taken from an API response; the
 * client contributes only the swept input grid and the axis ordering.
 */

import type { ApiResponse } from "./types.js";
import type { Operation, Payload } from "./validation.js";

export const SWEEPABLE = ["delta", "k", "n", "confidence"] as const;
export type SweepParam = (typeof SWEEPABLE)[number];

export interface SweepSpec {
  param: SweepParam;
  from: number;
  to: number;
  points: number;
}

export interface CurvePoint {
  x: number;
  y: number;
}

export const MAX_SWEEP_POINTS = 200;

export function sweepError(spec: SweepSpec): string | null {
  if (!(SWEEPABLE as readonly string[]).includes(spec.param)) {
    return `sweep parameter must be one of ${SWEEPABLE.join(", ")}`;
  }
  if (!Number.isFinite(spec.from) || !Number.isFinite(spec.to)) {
    return "sweep range must be finite";
  }
  if (spec.to < spec.from) {
    return "sweep range must have from <= to";
  }
  if (!Number.isInteger(spec.points) || spec.points < 1
      || spec.points > MAX_SWEEP_POINTS) {
    return `sweep needs between 1 and ${MAX_SWEEP_POINTS} points`;
  }
  return null;
}

/** The swept input grid (single-point ranges degenerate to one marker). */
export function sweepValues(spec: SweepSpec): number[] {
  if (spec.points === 1 || spec.from === spec.to) {
    return [spec.from];
  }
  const step = (spec.to - spec.from) / (spec.points - 1);
  const values = [];
  for (let i = 0; i < spec.points; i += 1) {
    let v = spec.from + i * step;
    if (spec.param === "n") v = Math.round(v);
    values.push(v);
  }
  return [...new Set(values)];
}

export function sweepPayloads(base: Payload, spec: SweepSpec): Payload[] {
  return sweepValues(spec).map((value) => ({ ...base, [spec.param]: value }));
}

/** Pair swept inputs with the response values; x strictly ascending. */
export function assembleCurve(xs: number[], responses: ApiResponse[],
                              operation: Operation): CurvePoint[] {
  const points: CurvePoint[] = [];
  responses.forEach((response, i) => {
    const x = xs[i];
    if (x === undefined) return;
    const y = operation === "design" ? response.sample_size : response.precision;
    if (y !== null && y !== undefined) points.push({ x, y });
  });
  points.sort((a, b) => a.x - b.x);
  return points;
}
