/**
 * One preset per worked example; loading a preset fills the form and
 * recomputes through the API.  The payloads are contract-tested against
 * contracts/worked_examples.json so they cannot drift from the recorded
 * service responses.
 */

import type { Operation, Payload } from "./validation.js";

export interface Preset {
  name: string;
  operation: Operation;
  payload: Payload;
}

export const PRESETS: readonly Preset[] = [
  { name: "Standard deviation to 10%", operation: "design",
    payload: { estimand: "stddev", confidence: 0.95, delta: 0.10 } },
  { name: "Standard deviation interval from 5 subjects", operation: "ci",
    payload: { estimand: "stddev", confidence: 0.95, n: 5 } },
  { name: "Mean to 20% of the SD", operation: "design",
    payload: { estimand: "mean", confidence: 0.95, delta: 0.20 } },
  { name: "Proportion interval, 3 of 20", operation: "ci",
    payload: { estimand: "proportion", confidence: 0.95, r: 3, n: 20 } },
  { name: "Proportion interval, 1 of 5", operation: "ci",
    payload: { estimand: "proportion", confidence: 0.95, r: 1, n: 5 } },
  { name: "Rare proportion, 1% to half itself", operation: "design",
    payload: { estimand: "proportion-rare", confidence: 0.95, p: 0.01, k: 0.5 } },
  { name: "Zero-acceptance screen at 1%", operation: "design",
    payload: { estimand: "proportion-one-sided", confidence: 0.95, p_u: 0.01 } },
  { name: "Correlation interval, r = 0.3 from 20 subjects", operation: "ci",
    payload: { estimand: "correlation", confidence: 0.95, rho: 0.3, n: 20 } },
  { name: "Correlation width 0.2 at rho = 0.3", operation: "design",
    payload: { estimand: "correlation", confidence: 0.95, rho: 0.3, delta: 0.2 } },
  { name: "Lifetime to 20%, stop at 90% infected", operation: "design",
    payload: { estimand: "lifetime", confidence: 0.95, k: 0.2, censoring: 0.10 } },
  { name: "Lifetime interval from 20 events", operation: "ci",
    payload: { estimand: "lifetime", confidence: 0.95, e: 20 } },
];
