/**
 * Client-side request validation: a faithful mirror of the service's rules.
 * Both sides run the shared fixture in contracts/validation_cases.json, so
 * any drift between the two implementations fails one of the suites.
 */

export type Operation = "design" | "precision" | "ci";

export const OPERATIONS: readonly Operation[] = ["design", "precision", "ci"];

export const ESTIMANDS = [
  "stddev", "mean", "paired", "proportion", "proportion-rare",
  "proportion-one-sided", "correlation", "lifetime",
] as const;

export type Estimand = (typeof ESTIMANDS)[number];

export interface FieldError {
  field: string;
  code: string;
  message: string;
}

export type Payload = Record<string, unknown>;
export type Resolved = Record<string, unknown>;

const METHODS: Record<string, readonly string[]> = {
  "design/proportion": ["exact", "normal"],
  "design/proportion-rare": ["exact", "poisson"],
  "design/proportion-one-sided": ["zero-acceptance", "rule-of-three", "exact"],
  "precision/proportion": ["exact", "normal"],
  "precision/proportion-rare": ["exact"],
  "precision/proportion-one-sided": ["zero-acceptance", "rule-of-three"],
  "ci/proportion": ["exact", "normal"],
  "ci/proportion-rare": ["exact"],
  "ci/proportion-one-sided": ["exact", "rule-of-three"],
};

const INT_FIELDS = new Set(["n", "e", "r"]);
const FLOAT_FIELDS = new Set(["confidence", "delta", "k", "p", "rho", "s",
  "theta", "mean", "censoring", "p_u", "p_l"]);
const BOOL_FIELDS = new Set(["continuity"]);
const STR_FIELDS = new Set(["estimand", "method", "direction"]);

// operation/estimand -> [required fields, defaults]
const RULES: Record<string, [string[], Resolved]> = {
  "design/stddev": [["delta"], {}],
  "design/mean": [["delta"], {}],
  "design/paired": [["delta"], {}],
  "design/proportion": [["p", "delta"], { method: "exact", continuity: true }],
  "design/proportion-rare": [["p", "k"], { method: "exact" }],
  "design/proportion-one-sided": [[], { method: "zero-acceptance" }],
  "design/correlation": [["rho", "delta"], {}],
  "design/lifetime": [["k"], { censoring: 0.0 }],
  "precision/stddev": [["n"], {}],
  "precision/mean": [["n"], {}],
  "precision/paired": [["n"], {}],
  "precision/proportion": [["p", "n"], { method: "exact", continuity: true }],
  "precision/proportion-rare": [["p", "n"], { method: "exact" }],
  "precision/proportion-one-sided": [["n"], { method: "zero-acceptance" }],
  "precision/correlation": [["rho", "n"], {}],
  "precision/lifetime": [["e"], {}],
  "ci/stddev": [["n"], { s: 1.0 }],
  "ci/mean": [["n"], { s: 1.0, mean: 0.0 }],
  "ci/paired": [["n"], { s: 1.0, mean: 0.0 }],
  "ci/proportion": [["r", "n"], { method: "exact" }],
  "ci/proportion-rare": [["r", "n"], { method: "exact" }],
  "ci/proportion-one-sided": [["n"], { r: 0, direction: "upper", method: "exact" }],
  "ci/correlation": [["rho", "n"], {}],
  "ci/lifetime": [["e"], { theta: 1.0 }],
};

const RANGES: Record<string, [(v: number) => boolean, string]> = {
  confidence: [(v) => v > 0 && v < 1, "must be in the open interval (0, 1)"],
  delta: [(v) => v > 0, "must be positive"],
  k: [(v) => v > 0, "must be positive"],
  p: [(v) => v > 0 && v < 1, "must be in the open interval (0, 1)"],
  rho: [(v) => v > -1 && v < 1, "must be in the open interval (-1, 1)"],
  s: [(v) => v >= 0, "must be non-negative"],
  theta: [(v) => v > 0, "must be positive"],
  censoring: [(v) => v >= 0 && v < 1, "must be in [0, 1)"],
  p_u: [(v) => v > 0 && v < 1, "must be in the open interval (0, 1)"],
  p_l: [(v) => v > 0 && v < 1, "must be in the open interval (0, 1)"],
  n: [(v) => v >= 1, "must be at least 1"],
  e: [(v) => v >= 1, "must be at least 1"],
  r: [(v) => v >= 0, "must be non-negative"],
  mean: [() => true, ""],
};

const MIN_N: Record<string, number> = { stddev: 2, mean: 2, paired: 2, correlation: 4 };

function error(field: string, code: string, message: string): FieldError {
  return { field, code, message };
}

function coerce(field: string, value: unknown, errors: FieldError[]): unknown {
  if (INT_FIELDS.has(field)) {
    if (typeof value !== "number" || !Number.isInteger(value)) {
      errors.push(error(field, "invalid_type", `${field} must be an integer`));
      return undefined;
    }
    return value;
  }
  if (FLOAT_FIELDS.has(field)) {
    if (typeof value !== "number" || !Number.isFinite(value)) {
      errors.push(error(field, "invalid_type", `${field} must be a finite number`));
      return undefined;
    }
    return value;
  }
  if (BOOL_FIELDS.has(field)) {
    if (typeof value !== "boolean") {
      errors.push(error(field, "invalid_type", `${field} must be a boolean`));
      return undefined;
    }
    return value;
  }
  if (typeof value !== "string") {
    errors.push(error(field, "invalid_type", `${field} must be a string`));
    return undefined;
  }
  return value;
}

function isKnownField(field: string): boolean {
  return INT_FIELDS.has(field) || FLOAT_FIELDS.has(field)
    || BOOL_FIELDS.has(field) || STR_FIELDS.has(field);
}

export function validate(operation: string, payload: Payload):
    { resolved: Resolved | null; errors: FieldError[] } {
  if (!(OPERATIONS as readonly string[]).includes(operation)) {
    return {
      resolved: null,
      errors: [error("operation", "unknown_operation",
        `operation must be one of ${OPERATIONS.join(", ")}`)],
    };
  }
  const estimand = payload["estimand"];
  if (estimand === undefined || estimand === null) {
    return { resolved: null, errors: [error("estimand", "missing_parameter", "estimand is required")] };
  }
  if (typeof estimand !== "string" || !(ESTIMANDS as readonly string[]).includes(estimand)) {
    return {
      resolved: null,
      errors: [error("estimand", "unknown_estimand",
        `estimand must be one of ${ESTIMANDS.join(", ")}`)],
    };
  }

  const errors: FieldError[] = [];
  const rule = RULES[`${operation}/${estimand}`];
  if (rule === undefined) {
    throw new Error(`rule table incomplete for ${operation}/${estimand}`);
  }
  const [required, defaults] = rule;
  const resolved: Resolved = { estimand, confidence: 0.95, ...defaults };

  for (const [field, value] of Object.entries(payload)) {
    if (field === "estimand") continue;
    if (!isKnownField(field)) {
      errors.push(error(field, "unknown_field", `unknown field '${field}'`));
      continue;
    }
    const coerced = coerce(field, value, errors);
    if (coerced !== undefined) resolved[field] = coerced;
  }

  for (const field of required) {
    if (!(field in resolved)) {
      errors.push(error(field, "missing_parameter",
        `${operation} ${estimand} requires ${field}`));
    }
  }

  if (operation === "design" && estimand === "proportion-one-sided") {
    if (("p_u" in resolved) === ("p_l" in resolved)) {
      errors.push(error("p_u", "missing_parameter",
        "design proportion-one-sided requires exactly one of p_u, p_l"));
    }
  }

  for (const [field, value] of Object.entries(resolved)) {
    const range = RANGES[field];
    if (range !== undefined && typeof value === "number" && !range[0](value)) {
      errors.push(error(field, "out_of_range", `${field} ${range[1]}`));
    }
  }

  const method = resolved["method"];
  const allowed = METHODS[`${operation}/${estimand}`];
  if (method !== undefined && allowed === undefined) {
    delete resolved["method"];
  } else if (allowed !== undefined && !allowed.includes(method as string)) {
    errors.push(error("method", "unknown_method",
      `method for ${operation} ${estimand} must be one of ${allowed.join(", ")}`));
  }

  const direction = resolved["direction"];
  if (direction !== undefined && direction !== "upper" && direction !== "lower") {
    errors.push(error("direction", "out_of_range", "direction must be 'upper' or 'lower'"));
  }

  const minN = MIN_N[estimand];
  const n = resolved["n"];
  if (minN !== undefined && typeof n === "number" && n < minN) {
    errors.push(error("n", "out_of_range", `${estimand} requires n >= ${minN}`));
  }
  const r = resolved["r"];
  if (estimand.startsWith("proportion") && typeof r === "number"
      && typeof n === "number" && r > n) {
    errors.push(error("r", "out_of_range", "r must not exceed n"));
  }

  if (errors.length > 0) {
    errors.sort((a, b) => a.field === b.field
      ? a.code.localeCompare(b.code) : a.field.localeCompare(b.field));
    return { resolved: null, errors };
  }
  return { resolved, errors: [] };
}

export interface FormFields {
  required: string[];
  optional: string[];
  methods: readonly string[];
}

/** Which inputs a (mode, estimand) pair exposes, straight from the rules. */
export function formFields(operation: Operation, estimand: Estimand): FormFields {
  const rule = RULES[`${operation}/${estimand}`];
  if (rule === undefined) throw new Error(`no rule for ${operation}/${estimand}`);
  const [required, defaults] = rule;
  const optional = Object.keys(defaults).filter((f) => f !== "method");
  if (operation === "design" && estimand === "proportion-one-sided") {
    optional.push("p_u", "p_l");
  }
  return {
    required: [...required],
    optional,
    methods: METHODS[`${operation}/${estimand}`] ?? [],
  };
}
