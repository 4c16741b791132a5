"""Request validation and computation shared by the CLI and the HTTP service.

Both front ends resolve a request through `validate` and answer it through
`compute`; neither adds any arithmetic of its own, so their outputs are
bit-identical for the same request.

A request names an operation (design | precision | ci), an estimand, and the
parameters for that pair.  Validation returns either a fully resolved request
(defaults filled in: confidence 0.95, continuity correction on, censoring 0)
or a list of independent field errors with machine-readable codes.
"""

from __future__ import annotations

import math
from typing import Any

from . import intervals as iv
from . import proportions as pr

__all__ = ["OPERATIONS", "ESTIMANDS", "validate", "compute", "API_VERSION"]

API_VERSION = "v1"

OPERATIONS = ("design", "precision", "ci")

ESTIMANDS = ("stddev", "mean", "paired", "proportion", "proportion-rare",
             "proportion-one-sided", "correlation", "lifetime")

_METHODS = {
    ("design", "proportion"): ("exact", "normal"),
    ("design", "proportion-rare"): ("exact", "poisson"),
    ("design", "proportion-one-sided"): ("zero-acceptance", "rule-of-three", "exact"),
    ("precision", "proportion"): ("exact", "normal"),
    ("precision", "proportion-rare"): ("exact",),
    ("precision", "proportion-one-sided"): ("zero-acceptance", "rule-of-three"),
    ("ci", "proportion"): ("exact", "normal"),
    ("ci", "proportion-rare"): ("exact",),
    ("ci", "proportion-one-sided"): ("exact", "rule-of-three"),
}

# field name -> (kind, validator description)
_INT_FIELDS = {"n", "e", "r"}
_FLOAT_FIELDS = {"confidence", "delta", "k", "p", "rho", "s", "theta", "mean",
                 "censoring", "p_u", "p_l"}
_BOOL_FIELDS = {"continuity"}
_STR_FIELDS = {"estimand", "method", "direction"}

_KNOWN_FIELDS = _INT_FIELDS | _FLOAT_FIELDS | _BOOL_FIELDS | _STR_FIELDS

# (operation, estimand) -> (required fields, optional fields with defaults)
_RULES: dict[tuple[str, str], tuple[tuple[str, ...], dict[str, Any]]] = {
    ("design", "stddev"): (("delta",), {}),
    ("design", "mean"): (("delta",), {}),
    ("design", "paired"): (("delta",), {}),
    ("design", "proportion"): (("p", "delta"), {"method": "exact", "continuity": True}),
    ("design", "proportion-rare"): (("p", "k"), {"method": "exact"}),
    ("design", "proportion-one-sided"): ((), {"method": "zero-acceptance"}),
    ("design", "correlation"): (("rho", "delta"), {}),
    ("design", "lifetime"): (("k",), {"censoring": 0.0}),
    ("precision", "stddev"): (("n",), {}),
    ("precision", "mean"): (("n",), {}),
    ("precision", "paired"): (("n",), {}),
    ("precision", "proportion"): (("p", "n"), {"method": "exact", "continuity": True}),
    ("precision", "proportion-rare"): (("p", "n"), {"method": "exact"}),
    ("precision", "proportion-one-sided"): (("n",), {"method": "zero-acceptance"}),
    ("precision", "correlation"): (("rho", "n"), {}),
    ("precision", "lifetime"): (("e",), {}),
    ("ci", "stddev"): (("n",), {"s": 1.0}),
    ("ci", "mean"): (("n",), {"s": 1.0, "mean": 0.0}),
    ("ci", "paired"): (("n",), {"s": 1.0, "mean": 0.0}),
    ("ci", "proportion"): (("r", "n"), {"method": "exact"}),
    ("ci", "proportion-rare"): (("r", "n"), {"method": "exact"}),
    ("ci", "proportion-one-sided"): (("n",), {"r": 0, "direction": "upper",
                                              "method": "exact"}),
    ("ci", "correlation"): (("rho", "n"), {}),
    ("ci", "lifetime"): (("e",), {"theta": 1.0}),
}

# field -> (check, description); checks run on type-correct values
_RANGES: dict[str, tuple[Any, str]] = {
    "confidence": (lambda v: 0.0 < v < 1.0, "must be in the open interval (0, 1)"),
    "delta": (lambda v: v > 0.0, "must be positive"),
    "k": (lambda v: v > 0.0, "must be positive"),
    "p": (lambda v: 0.0 < v < 1.0, "must be in the open interval (0, 1)"),
    "rho": (lambda v: -1.0 < v < 1.0, "must be in the open interval (-1, 1)"),
    "s": (lambda v: v >= 0.0, "must be non-negative"),
    "theta": (lambda v: v > 0.0, "must be positive"),
    "censoring": (lambda v: 0.0 <= v < 1.0, "must be in [0, 1)"),
    "p_u": (lambda v: 0.0 < v < 1.0, "must be in the open interval (0, 1)"),
    "p_l": (lambda v: 0.0 < v < 1.0, "must be in the open interval (0, 1)"),
    "n": (lambda v: v >= 1, "must be at least 1"),
    "e": (lambda v: v >= 1, "must be at least 1"),
    "r": (lambda v: v >= 0, "must be non-negative"),
    "mean": (lambda v: True, ""),
}

_MIN_N = {"stddev": 2, "mean": 2, "paired": 2, "correlation": 4}


def _error(field: str, code: str, message: str) -> dict[str, str]:
    return {"field": field, "code": code, "message": message}


def _coerce(field: str, value: Any, errors: list[dict[str, str]]) -> Any:
    if field in _INT_FIELDS:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            errors.append(_error(field, "invalid_type", f"{field} must be an integer"))
            return None
        if isinstance(value, float) and not value.is_integer():
            errors.append(_error(field, "invalid_type", f"{field} must be an integer"))
            return None
        return int(value)
    if field in _FLOAT_FIELDS:
        if isinstance(value, bool) or not isinstance(value, (int, float)) \
                or not math.isfinite(float(value)):
            errors.append(_error(field, "invalid_type", f"{field} must be a finite number"))
            return None
        return float(value)
    if field in _BOOL_FIELDS:
        if not isinstance(value, bool):
            errors.append(_error(field, "invalid_type", f"{field} must be a boolean"))
            return None
        return value
    if not isinstance(value, str):
        errors.append(_error(field, "invalid_type", f"{field} must be a string"))
        return None
    return value


def validate(operation: str, payload: dict[str, Any]) -> tuple[dict[str, Any] | None,
                                                               list[dict[str, str]]]:
    """Resolve a request or collect per-field errors.

    Returns (resolved, []) on success or (None, errors); every invalid field
    is reported independently.
    """
    errors: list[dict[str, str]] = []
    if operation not in OPERATIONS:
        return None, [_error("operation", "unknown_operation",
                             f"operation must be one of {', '.join(OPERATIONS)}")]
    if not isinstance(payload, dict):
        return None, [_error("body", "invalid_type", "request body must be a JSON object")]

    estimand = payload.get("estimand")
    if estimand is None:
        return None, [_error("estimand", "missing_parameter", "estimand is required")]
    if estimand not in ESTIMANDS:
        return None, [_error("estimand", "unknown_estimand",
                             f"estimand must be one of {', '.join(ESTIMANDS)}")]

    required, defaults = _RULES[(operation, estimand)]
    resolved: dict[str, Any] = {"estimand": estimand, "confidence": 0.95}
    resolved.update(defaults)

    for field, value in payload.items():
        if field == "estimand":
            continue
        if field not in _KNOWN_FIELDS:
            errors.append(_error(field, "unknown_field", f"unknown field {field!r}"))
            continue
        coerced = _coerce(field, value, errors)
        if coerced is not None:
            resolved[field] = coerced

    for field in required:
        if field not in resolved:
            errors.append(_error(field, "missing_parameter",
                                 f"{operation} {estimand} requires {field}"))

    # the one-sided design needs exactly one of p_u / p_l
    if (operation, estimand) == ("design", "proportion-one-sided"):
        if ("p_u" in resolved) == ("p_l" in resolved):
            errors.append(_error("p_u", "missing_parameter",
                                 "design proportion-one-sided requires exactly one of p_u, p_l"))

    for field, value in list(resolved.items()):
        if field in _RANGES and not _RANGES[field][0](value):
            errors.append(_error(field, "out_of_range", f"{field} {_RANGES[field][1]}"))

    method = resolved.get("method")
    allowed = _METHODS.get((operation, estimand))
    if method is not None and allowed is None:
        resolved.pop("method")
    elif allowed is not None and method not in allowed:
        errors.append(_error("method", "unknown_method",
                             f"method for {operation} {estimand} must be one of "
                             f"{', '.join(allowed)}"))

    direction = resolved.get("direction")
    if direction is not None and direction not in ("upper", "lower"):
        errors.append(_error("direction", "out_of_range",
                             "direction must be 'upper' or 'lower'"))

    n_min = _MIN_N.get(estimand)
    if n_min is not None and resolved.get("n", n_min) < n_min:
        errors.append(_error("n", "out_of_range", f"{estimand} requires n >= {n_min}"))
    if estimand.startswith("proportion") and "r" in resolved and "n" in resolved \
            and isinstance(resolved.get("r"), int) and isinstance(resolved.get("n"), int) \
            and resolved["r"] > resolved["n"]:
        errors.append(_error("r", "out_of_range", "r must not exceed n"))

    if errors:
        # deterministic order for replay tests
        errors.sort(key=lambda e: (e["field"], e["code"]))
        return None, errors
    return resolved, []


# ---------------------------------------------------------------------------
# Computation
# ---------------------------------------------------------------------------

def _interval_json(ci: iv.ConfidenceInterval) -> dict[str, Any]:
    return {"lower": ci.lower, "upper": ci.upper, "level": ci.level,
            "sidedness": ci.sidedness.value}


def _base_response(kind: str, resolved: dict[str, Any], method: str) -> dict[str, Any]:
    return {
        "api_version": API_VERSION,
        "kind": kind,
        "estimand": resolved["estimand"],
        "method": method,
        "params": dict(sorted(resolved.items())),
        "sample_size": None,
        "events": None,
        "precision": None,
        "interval": None,
        "hazard_interval": None,
        "valid": True,
        "warnings": [],
    }


def _approximation_warnings(result: iv.DesignResult, p: float) -> list[str]:
    warnings = list(result.warnings)
    if not result.valid:
        n = result.size
        if result.method in ("gaussian", "gaussian_cc"):
            warnings.append(
                f"normal approximation invalid: N*p = {n * p:g} or N*(1-p) = "
                f"{n * (1 - p):g} is not above 5")
        elif result.method == "poisson_gaussian":
            rate = min(p, 1.0 - p)
            warnings.append(
                f"Poisson approximation chain invalid: requires N >= 20, p <= 5% "
                f"and N*p >= 30 (N*p = {n * rate:g})")
    return warnings


def _design(res: dict[str, Any]) -> dict[str, Any]:
    estimand = res["estimand"]
    alpha = 1.0 - res["confidence"]
    if estimand == "stddev":
        result = iv.stddev_sample_size(res["delta"], alpha)
    elif estimand in ("mean", "paired"):
        result = iv.mean_sample_size(res["delta"], alpha)
    elif estimand == "correlation":
        result = iv.correlation_sample_size(res["rho"], res["delta"], alpha)
    elif estimand == "lifetime":
        result = iv.lifetime_required_events(res["k"], alpha)
        out = _base_response("sample_size", res, result.method)
        out["events"] = result.size
        out["sample_size"] = iv.lifetime_sample_size(result.size, res["censoring"])
        out["precision"] = result.achieved
        return out
    elif estimand == "proportion":
        if res["method"] == "exact":
            result = pr.proportion_sample_size_exact(res["p"], res["delta"], alpha)
        else:
            result = pr.proportion_sample_size_normal(res["p"], res["delta"], alpha,
                                                      continuity_correction=res["continuity"])
    elif estimand == "proportion-rare":
        if res["method"] == "exact":
            result = pr.rare_proportion_sample_size_exact(res["p"], res["k"], alpha)
        else:
            result = pr.rare_proportion_sample_size_poisson(res["p"], res["k"], alpha)
    else:  # proportion-one-sided
        direction = "upper" if "p_u" in res else "lower"
        bound = pr.OneSidedBound(direction, res.get("p_u", res.get("p_l", 0.5)), alpha)
        if res["method"] == "zero-acceptance":
            n = pr.zero_acceptance_sample_size(bound)
        elif res["method"] == "rule-of-three":
            n = pr.rule_of_three_sample_size(bound)
        else:
            n = pr.one_sided_exact_sample_size(bound)
        out = _base_response("sample_size", res, res["method"])
        out["sample_size"] = n
        achieved = pr.zero_event_ci(n, alpha).upper if res["method"] != "rule-of-three" \
            else pr.rule_of_three_upper_bound(n, alpha)
        out["precision"] = achieved
        return out
    out = _base_response("sample_size", res, result.method)
    out["sample_size"] = result.size
    out["precision"] = result.achieved
    out["valid"] = result.valid
    p = res.get("p")
    out["warnings"] = _approximation_warnings(result, p) if p is not None \
        else list(result.warnings)
    return out


def _precision(res: dict[str, Any]) -> dict[str, Any]:
    estimand = res["estimand"]
    alpha = 1.0 - res["confidence"]
    if estimand == "stddev":
        out = _base_response("precision", res, "chi2")
        out["precision"] = iv.stddev_precision(res["n"], alpha)
        return out
    if estimand in ("mean", "paired"):
        out = _base_response("precision", res, "student_t")
        out["precision"] = iv.mean_precision(res["n"], alpha)
        return out
    if estimand == "correlation":
        out = _base_response("precision", res, "fisher_z")
        out["precision"] = iv.correlation_width(res["rho"], res["n"], alpha)
        return out
    if estimand == "lifetime":
        out = _base_response("precision", res, "chi2")
        ci = iv.lifetime_ci(1.0, res["e"], alpha)
        out["precision"] = ci.upper - ci.lower
        out["interval"] = _interval_json(ci)
        return out
    if estimand == "proportion":
        p, n = res["p"], res["n"]
        if res["method"] == "exact":
            lower, upper = pr.clopper_pearson_bounds(p * n, n, alpha)
            out = _base_response("precision", res, "clopper_pearson")
            out["precision"] = (upper - lower) / 2.0
        else:
            ci, valid = pr.wald_ci(p, n, alpha)
            out = _base_response("precision", res, "gaussian")
            out["precision"] = (ci.upper - ci.lower) / 2.0
            out["valid"] = valid
            if not valid:
                out["warnings"] = [f"normal approximation invalid: N*p = {n * p:g} or "
                                   f"N*(1-p) = {n * (1 - p):g} is not above 5"]
        return out
    if estimand == "proportion-rare":
        p, n = res["p"], res["n"]
        rate = min(p, 1.0 - p)
        lower, upper = pr.clopper_pearson_bounds(rate * n, n, alpha)
        out = _base_response("precision", res, "clopper_pearson")
        out["precision"] = (upper - lower) / 2.0 / rate
        return out
    # proportion-one-sided: the certifiable upper bound with zero events
    if res["method"] == "zero-acceptance":
        out = _base_response("precision", res, "zero-acceptance")
        out["precision"] = pr.zero_event_ci(res["n"], alpha).upper
    else:
        out = _base_response("precision", res, "rule-of-three")
        out["precision"] = pr.rule_of_three_upper_bound(res["n"], alpha)
    return out


def _ci(res: dict[str, Any]) -> dict[str, Any]:
    estimand = res["estimand"]
    alpha = 1.0 - res["confidence"]
    if estimand == "stddev":
        out = _base_response("interval", res, "chi2")
        out["interval"] = _interval_json(iv.stddev_ci(res["s"], res["n"], alpha))
        return out
    if estimand in ("mean", "paired"):
        out = _base_response("interval", res, "student_t")
        out["interval"] = _interval_json(iv.mean_ci(res["mean"], res["s"], res["n"], alpha))
        return out
    if estimand == "correlation":
        out = _base_response("interval", res, "fisher_z")
        out["interval"] = _interval_json(iv.correlation_ci(res["rho"], res["n"], alpha))
        return out
    if estimand == "lifetime":
        out = _base_response("interval", res, "chi2")
        ci = iv.lifetime_ci(res["theta"], res["e"], alpha)
        out["interval"] = _interval_json(ci)
        out["hazard_interval"] = _interval_json(iv.hazard_rate_ci(ci))
        return out
    if estimand in ("proportion", "proportion-rare"):
        obs = pr.BinomialObservation(res["r"], res["n"])
        if res["method"] == "normal":
            ci, valid = pr.wald_ci(obs.successes / obs.trials, obs.trials, alpha)
            out = _base_response("interval", res, "gaussian")
            out["interval"] = _interval_json(ci)
            out["valid"] = valid
            if not valid:
                p_hat, n = obs.successes / obs.trials, obs.trials
                out["warnings"] = [f"normal approximation invalid: N*p = {n * p_hat:g} or "
                                   f"N*(1-p) = {n * (1 - p_hat):g} is not above 5"]
            return out
        out = _base_response("interval", res, "clopper_pearson")
        out["interval"] = _interval_json(pr.clopper_pearson_ci(obs, alpha))
        return out
    # proportion-one-sided
    if res["method"] == "rule-of-three":
        if res["r"] != 0:
            raise ValueError("the rule-of-three interval requires zero observed events")
        out = _base_response("interval", res, "rule-of-three")
        upper = pr.rule_of_three_upper_bound(res["n"], alpha)
        out["interval"] = {"lower": 0.0, "upper": upper, "level": 1.0 - alpha,
                           "sidedness": iv.Sidedness.UPPER_ONLY.value}
        return out
    sided = iv.Sidedness.UPPER_ONLY if res["direction"] == "upper" \
        else iv.Sidedness.LOWER_ONLY
    obs = pr.BinomialObservation(res["r"], res["n"])
    out = _base_response("interval", res, "clopper_pearson")
    out["interval"] = _interval_json(pr.clopper_pearson_ci(obs, alpha, sided))
    return out


def compute(operation: str, resolved: dict[str, Any]) -> dict[str, Any]:
    """Answer a resolved request.  Domain failures raise ValueError."""
    if operation == "design":
        return _design(resolved)
    if operation == "precision":
        return _precision(resolved)
    if operation == "ci":
        return _ci(resolved)
    raise ValueError(f"unknown operation {operation!r}")
