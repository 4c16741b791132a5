/**
 * Calculator UI: a mode + estimand form whose answers come from the service,
 * worked-example presets, a parameter sweep chart, and deep-linkable state.
 *
 * All statistics live on the server; this file moves values between form
 * inputs, request payloads and display strings.
 */

import { ApiClient, ApiFieldErrors } from "./apiClient.js";
import { chartSvg } from "./chart.js";
import { detailLines, resultText } from "./format.js";
import { PRESETS } from "./presets.js";
import { stateFromQuery, stateToQuery } from "./state.js";
import {
  MAX_SWEEP_POINTS, SWEEPABLE, SweepParam, SweepSpec,
  assembleCurve, sweepError, sweepPayloads, sweepValues,
} from "./sweep.js";
import {
  ESTIMANDS, Estimand, Operation, Payload, formFields, validate,
} from "./validation.js";

const MODE_LABELS: Record<Operation, string> = {
  design: "find N",
  precision: "find precision",
  ci: "build CI",
};

const FIELD_LABELS: Record<string, string> = {
  confidence: "confidence level (1 − α)",
  delta: "precision δ",
  k: "relative precision k",
  n: "sample size N",
  e: "events E",
  p: "expected proportion p",
  r: "successes r",
  rho: "correlation ρ",
  s: "sample SD s",
  mean: "sample mean",
  theta: "mean lifetime",
  censoring: "censored fraction C",
  p_u: "upper bound p_U",
  p_l: "lower bound p_L",
};

export class App {
  operation: Operation = "design";
  estimand: Estimand = "stddev";
  fields: Payload = { confidence: 0.95, delta: 0.10 };
  method = "";
  continuity = true;
  direction = "upper";

  private root: HTMLElement;

  constructor(private readonly doc: Document, private readonly client: ApiClient,
              root?: HTMLElement) {
    this.root = root ?? (doc.getElementById("app") as HTMLElement);
    this.renderSkeleton();
    const restored = stateFromQuery(doc.defaultView?.location.search ?? "");
    if (restored) {
      this.operation = restored.operation;
      const { estimand, method, continuity, direction, ...rest } = restored.payload;
      if (typeof estimand === "string"
          && (ESTIMANDS as readonly string[]).includes(estimand)) {
        this.estimand = estimand as Estimand;
      }
      if (typeof method === "string") this.method = method;
      if (typeof continuity === "boolean") this.continuity = continuity;
      if (typeof direction === "string") this.direction = direction;
      this.fields = rest;
    }
    this.renderForm();
  }

  // ------------------------------------------------------------------ form

  private el<T extends HTMLElement>(selector: string): T {
    const found = this.root.querySelector(selector);
    if (!found) throw new Error(`missing element ${selector}`);
    return found as T;
  }

  private renderSkeleton(): void {
    this.root.innerHTML = `
      <section class="panel">
        <h2>Study</h2>
        <div id="selectors"></div>
        <form id="calc-form" novalidate></form>
        <div id="result" class="result" aria-live="polite"></div>
      </section>
      <section class="panel">
        <h2>Worked examples</h2>
        <div id="presets"></div>
      </section>
      <section class="panel">
        <h2>Sweep a parameter</h2>
        <form id="sweep-form" novalidate>
          <label>parameter
            <select id="sweep-param">${SWEEPABLE.map((p) =>
              `<option value="${p}">${p}</option>`).join("")}</select>
          </label>
          <label>from <input id="sweep-from" type="number" step="any" value="0.05"></label>
          <label>to <input id="sweep-to" type="number" step="any" value="1.0"></label>
          <label>points <input id="sweep-points" type="number" value="20"
                 min="1" max="${MAX_SWEEP_POINTS}"></label>
          <button type="submit">sweep</button>
          <span id="sweep-error" class="error"></span>
        </form>
        <div id="chart"></div>
      </section>`;
    const presets = this.el<HTMLElement>("#presets");
    for (const preset of PRESETS) {
      const button = this.doc.createElement("button");
      button.type = "button";
      button.textContent = preset.name;
      button.addEventListener("click", () => { void this.applyPreset(preset.name); });
      presets.appendChild(button);
    }
    this.el<HTMLFormElement>("#sweep-form").addEventListener("submit", (event) => {
      event.preventDefault();
      void this.runSweep();
    });
  }

  private renderForm(): void {
    const selectors = this.el<HTMLElement>("#selectors");
    selectors.innerHTML = `
      <label>mode
        <select id="mode">${(Object.keys(MODE_LABELS) as Operation[]).map((op) =>
          `<option value="${op}"${op === this.operation ? " selected" : ""}>` +
          `${MODE_LABELS[op]}</option>`).join("")}</select>
      </label>
      <label>estimand
        <select id="estimand">${ESTIMANDS.map((e) =>
          `<option value="${e}"${e === this.estimand ? " selected" : ""}>${e}</option>`)
          .join("")}</select>
      </label>`;
    this.el<HTMLSelectElement>("#mode").addEventListener("change", (event) => {
      this.operation = (event.target as HTMLSelectElement).value as Operation;
      this.renderForm();
      void this.recompute();
    });
    this.el<HTMLSelectElement>("#estimand").addEventListener("change", (event) => {
      this.estimand = (event.target as HTMLSelectElement).value as Estimand;
      this.renderForm();
      void this.recompute();
    });

    const spec = formFields(this.operation, this.estimand);
    const form = this.el<HTMLFormElement>("#calc-form");
    const numericFields = ["confidence", ...spec.required,
      ...spec.optional.filter((f) => f !== "continuity" && f !== "r"
        && f !== "direction")];
    if (spec.optional.includes("r")) numericFields.push("r");
    const rows: string[] = numericFields.map((field) => `
      <label>${FIELD_LABELS[field] ?? field}
        <input name="${field}" type="number" step="any"
               value="${this.fields[field] ?? (field === "confidence" ? 0.95 : "")}">
        <span class="error" data-error-for="${field}"></span>
      </label>`);
    if (spec.methods.length > 0) {
      rows.push(`
      <label>method
        <select name="method">${spec.methods.map((m) =>
          `<option value="${m}"${m === this.method ? " selected" : ""}>${m}</option>`)
          .join("")}</select>
        <span class="error" data-error-for="method"></span>
      </label>`);
    }
    if (spec.optional.includes("continuity")) {
      rows.push(`
      <label><input name="continuity" type="checkbox"
             ${this.continuity ? "checked" : ""}> continuity correction
        <span class="error" data-error-for="continuity"></span>
      </label>`);
    }
    if (spec.optional.includes("direction")) {
      rows.push(`
      <label>direction
        <select name="direction">
          <option value="upper"${this.direction === "upper" ? " selected" : ""}>upper</option>
          <option value="lower"${this.direction === "lower" ? " selected" : ""}>lower</option>
        </select>
        <span class="error" data-error-for="direction"></span>
      </label>`);
    }
    form.innerHTML = rows.join("");
    form.querySelectorAll("input, select").forEach((element) => {
      element.addEventListener("input", () => { void this.readFormAndRecompute(); });
      element.addEventListener("change", () => { void this.readFormAndRecompute(); });
    });
  }

  private readFormAndRecompute(): Promise<void> {
    const form = this.el<HTMLFormElement>("#calc-form");
    const fields: Payload = {};
    form.querySelectorAll<HTMLInputElement>("input[type=number]").forEach((input) => {
      if (input.value === "") return;
      const value = Number(input.value);
      if (Number.isFinite(value)) fields[input.name] = value;
    });
    this.fields = fields;
    const method = form.querySelector<HTMLSelectElement>("select[name=method]");
    this.method = method ? method.value : "";
    const continuity = form.querySelector<HTMLInputElement>("input[name=continuity]");
    if (continuity) this.continuity = continuity.checked;
    const direction = form.querySelector<HTMLSelectElement>("select[name=direction]");
    if (direction) this.direction = direction.value;
    return this.recompute();
  }

  buildPayload(): Payload {
    const spec = formFields(this.operation, this.estimand);
    const payload: Payload = { estimand: this.estimand, ...this.fields };
    if (spec.methods.length > 0 && this.method) payload["method"] = this.method;
    if (spec.optional.includes("continuity")) payload["continuity"] = this.continuity;
    if (spec.optional.includes("direction")) payload["direction"] = this.direction;
    return payload;
  }

  // --------------------------------------------------------------- actions

  async applyPreset(name: string): Promise<void> {
    const preset = PRESETS.find((p) => p.name === name);
    if (!preset) throw new Error(`unknown preset ${name}`);
    this.operation = preset.operation;
    const { estimand, method, continuity, direction, ...rest } = preset.payload;
    this.estimand = estimand as Estimand;
    this.method = typeof method === "string" ? method : "";
    if (typeof continuity === "boolean") this.continuity = continuity;
    if (typeof direction === "string") this.direction = direction;
    this.fields = rest;
    this.renderForm();
    await this.recompute();
  }

  async recompute(): Promise<void> {
    const payload = this.buildPayload();
    this.clearFieldErrors();
    this.syncUrl(payload);
    const { errors } = validate(this.operation, payload);
    if (errors.length > 0) {
      this.showFieldErrors(errors);
      this.el<HTMLElement>("#result").textContent = "";
      return;
    }
    try {
      const response = await this.client.request(this.operation, payload);
      const result = this.el<HTMLElement>("#result");
      result.innerHTML = `<strong>${resultText(response)}</strong>` +
        detailLines(response).map((line) => `<div>${line}</div>`).join("");
    } catch (err) {
      if (err instanceof ApiFieldErrors) {
        this.showFieldErrors(err.errors);
      } else if ((err as Error).name !== "AbortError") {
        this.el<HTMLElement>("#result").textContent = `service unavailable: ${err}`;
      }
    }
  }

  async runSweep(): Promise<void> {
    const spec: SweepSpec = {
      param: this.el<HTMLSelectElement>("#sweep-param").value as SweepParam,
      from: Number(this.el<HTMLInputElement>("#sweep-from").value),
      to: Number(this.el<HTMLInputElement>("#sweep-to").value),
      points: Number(this.el<HTMLInputElement>("#sweep-points").value),
    };
    const errorSpan = this.el<HTMLElement>("#sweep-error");
    const problem = sweepError(spec);
    if (problem) {
      errorSpan.textContent = problem;
      return;
    }
    errorSpan.textContent = "";
    const payloads = sweepPayloads(this.buildPayload(), spec);
    try {
      const responses = await this.client.requestBatch(this.operation, payloads);
      const curve = assembleCurve(sweepValues(spec), responses, this.operation);
      this.el<HTMLElement>("#chart").innerHTML = chartSvg(curve);
    } catch (err) {
      if (err instanceof ApiFieldErrors) {
        errorSpan.textContent = err.message;
      } else if ((err as Error).name !== "AbortError") {
        errorSpan.textContent = `service unavailable: ${err}`;
      }
    }
  }

  // --------------------------------------------------------------- helpers

  private clearFieldErrors(): void {
    this.root.querySelectorAll<HTMLElement>("[data-error-for]").forEach((span) => {
      span.textContent = "";
    });
  }

  private showFieldErrors(errors: { field: string; message: string }[]): void {
    for (const fieldError of errors) {
      const span = this.root.querySelector<HTMLElement>(
        `[data-error-for="${fieldError.field}"]`);
      if (span) span.textContent = fieldError.message;
    }
  }

  private syncUrl(payload: Payload): void {
    const win = this.doc.defaultView;
    if (!win || !win.history?.replaceState) return;
    const query = stateToQuery({ operation: this.operation, payload });
    win.history.replaceState(null, "", `?${query}`);
  }
}

export function start(): void {
  const apiBase = new URLSearchParams(window.location.search).get("api")
    ?? (window as unknown as { PILOTSIZE_API?: string }).PILOTSIZE_API ?? "";
  const app = new App(document, new ApiClient(apiBase));
  void app.recompute();
}
