/**
 * Form state <-> URL query string, so every calculator configuration is a
 * shareable deep link that restores exactly.
 */

import type { Operation, Payload } from "./validation.js";

export interface FormState {
  operation: Operation;
  payload: Payload;
}

const NUMERIC = new Set(["confidence", "delta", "k", "n", "e", "p", "r", "rho",
  "s", "theta", "mean", "censoring", "p_u", "p_l"]);
const BOOLEAN = new Set(["continuity"]);

export function stateToQuery(state: FormState): string {
  const params = new URLSearchParams();
  params.set("op", state.operation);
  for (const [key, value] of Object.entries(state.payload)) {
    if (value !== undefined && value !== null && value !== "") {
      params.set(key, String(value));
    }
  }
  return params.toString();
}

export function stateFromQuery(query: string): FormState | null {
  const params = new URLSearchParams(query);
  const operation = params.get("op");
  if (operation !== "design" && operation !== "precision" && operation !== "ci") {
    return null;
  }
  const payload: Payload = {};
  for (const [key, raw] of params.entries()) {
    if (key === "op") continue;
    if (NUMERIC.has(key)) {
      const value = Number(raw);
      if (Number.isFinite(value)) payload[key] = value;
    } else if (BOOLEAN.has(key)) {
      payload[key] = raw === "true";
    } else {
      payload[key] = raw;
    }
  }
  return { operation, payload };
}
