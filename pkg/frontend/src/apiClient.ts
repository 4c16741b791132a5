/**
 * Thin fetch wrapper for the calculator service.  Each logical slot keeps at
 * most one request in flight: issuing a new one aborts its predecessor, so a
 * fast-typing user only ever sees the answer to the latest form state.
 */

import type { ApiErrorBody, ApiResponse } from "./types.js";
import type { FieldError, Payload } from "./validation.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiFieldErrors extends Error {
  constructor(public readonly errors: FieldError[]) {
    super(errors.map((e) => `${e.field}: ${e.message}`).join("; "));
  }
}

export class ApiClient {
  private controllers = new Map<string, AbortController>();

  constructor(private readonly baseUrl: string = "",
              private readonly fetchFn: FetchLike = fetch.bind(globalThis)) {}

  /** POST one operation; aborts any earlier in-flight call in `slot`. */
  async request(operation: string, payload: Payload,
                slot = "main"): Promise<ApiResponse> {
    this.controllers.get(slot)?.abort();
    const controller = new AbortController();
    this.controllers.set(slot, controller);
    const response = await this.fetchFn(`${this.baseUrl}/api/v1/${operation}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
      signal: controller.signal,
    });
    if (response.status === 422 || response.status === 400) {
      const body = (await response.json()) as ApiErrorBody;
      throw new ApiFieldErrors(body.errors);
    }
    if (!response.ok) {
      throw new Error(`service error ${response.status}`);
    }
    return (await response.json()) as ApiResponse;
  }

  /** Fire a batch of sweep requests as one cancellable unit. */
  async requestBatch(operation: string, payloads: Payload[],
                     slot = "sweep"): Promise<ApiResponse[]> {
    this.controllers.get(slot)?.abort();
    const controller = new AbortController();
    this.controllers.set(slot, controller);
    const results: ApiResponse[] = [];
    for (const payload of payloads) {
      const response = await this.fetchFn(`${this.baseUrl}/api/v1/${operation}`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(payload),
        signal: controller.signal,
      });
      if (!response.ok) {
        const body = (await response.json()) as ApiErrorBody;
        throw new ApiFieldErrors(body.errors);
      }
      results.push((await response.json()) as ApiResponse);
    }
    return results;
  }
}
