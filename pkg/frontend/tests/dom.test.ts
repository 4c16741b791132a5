// @vitest-environment jsdom
/**
 * DOM wiring: presets drive the form and render the pinned value from the
 * (mocked, recorded) API; invalid fields show inline errors without any
 * request; rapid recomputes abort the in-flight predecessor.
 */

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient, FetchLike } from "../src/apiClient.js";
import { App } from "../src/app.js";
import recorded from "../../contracts/worked_examples.json";

interface RecordedPreset {
  name: string;
  operation: string;
  payload: Record<string, unknown>;
  display: string;
  response: unknown;
}

const presets = (recorded as { presets: RecordedPreset[] }).presets;

function canonical(value: Record<string, unknown>): string {
  return JSON.stringify(Object.fromEntries(
    Object.entries(value).sort(([a], [b]) => a.localeCompare(b))));
}

function contractFetch(log: { requests: unknown[] }): FetchLike {
  return async (url, init) => {
    const payload = JSON.parse(String(init?.body ?? "{}"));
    log.requests.push({ url, payload });
    const operation = String(url).split("/").pop();
    const entry = presets.find((p) => p.operation === operation
      && canonical(p.payload) === canonical(payload));
    if (!entry) {
      return new Response(JSON.stringify({ errors: [{ field: "estimand",
        code: "unknown_estimand", message: "no recorded response" }] }),
        { status: 422, headers: { "content-type": "application/json" } });
    }
    return new Response(JSON.stringify(entry.response),
      { status: 200, headers: { "content-type": "application/json" } });
  };
}

describe("calculator app", () => {
  beforeEach(() => {
    document.body.innerHTML = '<main id="app"></main>';
    window.history.replaceState(null, "", "/");
  });

  it("renders every worked-example pin from recorded API responses", async () => {
    const log = { requests: [] as unknown[] };
    const app = new App(document, new ApiClient("", contractFetch(log)));
    for (const preset of presets) {
      await app.applyPreset(preset.name);
      const result = document.getElementById("result")!;
      expect(result.querySelector("strong")!.textContent).toBe(preset.display);
    }
    expect(log.requests.length).toBe(presets.length);
  });

  it("preset buttons exist for all eleven examples", () => {
    new App(document, new ApiClient("", contractFetch({ requests: [] })));
    const buttons = [...document.querySelectorAll("#presets button")];
    expect(buttons.map((b) => b.textContent)).toEqual(presets.map((p) => p.name));
  });

  it("shows inline field errors without calling the service", async () => {
    const log = { requests: [] as unknown[] };
    const app = new App(document, new ApiClient("", contractFetch(log)));
    app.fields = { confidence: 0.95, delta: -1 };
    await app.recompute();
    const span = document.querySelector('[data-error-for="delta"]');
    expect(span?.textContent).toContain("must be positive");
    expect(log.requests.length).toBe(0);
  });

  it("renders service-side field errors inline next to the input", async () => {
    // bypass client validation by answering 422 from the (mock) service
    const fetchFn: FetchLike = async () => new Response(JSON.stringify({
      errors: [{ field: "delta", code: "out_of_range", message: "delta must be positive" }],
    }), { status: 422, headers: { "content-type": "application/json" } });
    const app = new App(document, new ApiClient("", fetchFn));
    app.fields = { confidence: 0.95, delta: 0.1 };
    await app.recompute();
    const span = document.querySelector('[data-error-for="delta"]');
    expect(span?.textContent).toBe("delta must be positive");
  });

  it("aborts the in-flight request when a new one is issued", async () => {
    const signals: AbortSignal[] = [];
    const fetchFn: FetchLike = (url, init) => {
      signals.push(init!.signal as AbortSignal);
      return new Promise((resolve, reject) => {
        (init!.signal as AbortSignal).addEventListener("abort", () => {
          reject(new DOMException("aborted", "AbortError"));
        });
        setTimeout(() => resolve(new Response(JSON.stringify(
          presets[0]!.response), { status: 200 })), 50);
      });
    };
    const app = new App(document, new ApiClient("", fetchFn));
    const first = app.recompute();
    const second = app.recompute();
    await Promise.all([first, second]);
    expect(signals.length).toBe(2);
    expect(signals[0]!.aborted).toBe(true);
    expect(signals[1]!.aborted).toBe(false);
  });

  it("keeps the form state in the URL", async () => {
    const app = new App(document, new ApiClient("", contractFetch({ requests: [] })));
    await app.applyPreset("Mean to 20% of the SD");
    expect(window.location.search).toContain("op=design");
    expect(window.location.search).toContain("estimand=mean");
    expect(window.location.search).toContain("delta=0.2");
  });

  it("restores state from a deep link", () => {
    window.history.replaceState(null, "",
      "/?op=ci&estimand=proportion&confidence=0.95&r=3&n=20");
    const app = new App(document, new ApiClient("", contractFetch({ requests: [] })));
    expect(app.operation).toBe("ci");
    expect(app.estimand).toBe("proportion");
    expect(app.fields).toEqual({ confidence: 0.95, r: 3, n: 20 });
  });
});
