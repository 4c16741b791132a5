"""Regenerates the design tables (sample-size and accuracy grids) from the
design modules and renders them as csv, tsv, markdown or json.

Every table is generated cell-by-cell from the corresponding design function
and compared against golden files with a per-table tolerance policy:

* closed-form and approximation columns: exact integer match;
* exact-binomial sample sizes: plus/minus one sample (the search convention
  of the source material is not fully specified);
* accuracy percentages: 0.01 percentage points;
* confidence-interval grids: half of the last displayed digit (0.05
  percentage points for percent grids, 0.005 for unit-scale grids).

Rendering is deterministic: fixed grid order, stable float formatting.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Callable, Iterable

from . import intervals as iv
from . import proportions as pr

__all__ = [
    "TableSpec",
    "Cell",
    "RenderedTable",
    "CellMismatch",
    "TABLE_IDS",
    "generate",
    "render",
    "parse_rendered_json",
    "diff_against_golden",
    "golden_dir_path",
    "golden_checksum",
]

CONFIDENCES = (0.90, 0.95, 0.99)

TABLE_IDS = (
    "T1_std_size", "T2_std_acc", "T3_mean_size", "T4_mean_acc",
    "T5_prop_size", "T6_prop_acc", "T7_rare_size", "T8_rare_acc",
    "T9_one_sided", "T10_corr_size", "T11_corr_acc",
    "T12_life_events", "T13_life_acc",
)

DEFAULT_GRIDS: dict[str, dict[str, tuple]] = {
    "T1_std_size": {"deltas": (0.01, 0.05, 0.10, 0.20, 0.50, 1.00)},
    "T2_std_acc": {"ns": (5, 10, 15, 20, 25, 30)},
    "T3_mean_size": {"deltas": (0.01, 0.05, 0.10, 0.20, 0.50, 1.00)},
    "T4_mean_acc": {"ns": (5, 10, 15, 20, 25, 30)},
    "T5_prop_size": {
        "p_hats": (0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50),
        "deltas": (0.01, 0.05, 0.10, 0.15, 0.20, 0.25),
    },
    "T6_prop_acc": {
        "p_hats": (0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50,
                   0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90),
        "ns": (5, 10, 15, 20, 25, 30),
    },
    "T7_rare_size": {"ps": (0.05, 0.025, 0.01), "ks": (0.10, 0.25, 0.50, 1.00)},
    "T8_rare_acc": {
        "p_hats": (0.01, 0.025, 0.05, 0.95, 0.975, 0.99),
        "ns": (5, 10, 15, 20, 25, 30),
    },
    "T9_one_sided": {"bounds": (0.05, 0.025, 0.01)},
    "T10_corr_size": {
        "rhos": (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9),
        "deltas": (0.1, 0.2, 0.3, 0.4, 0.5),
    },
    "T11_corr_acc": {
        "rs": (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9),
        "ns": (5, 10, 15, 20, 25, 30),
    },
    "T12_life_events": {"ks": (0.1, 0.2, 0.3, 0.4, 0.5)},
    "T13_life_acc": {"es": (5, 10, 15, 20, 25, 30)},
}


@dataclass(frozen=True)
class TableSpec:
    """Identifies a table plus its parameter grids (confidence levels and the
    table-specific axis values); omitted entries take the defaults above."""

    table_id: str
    confidences: tuple[float, ...] = CONFIDENCES
    grids: dict[str, tuple] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.table_id not in TABLE_IDS:
            raise ValueError(f"unknown table id {self.table_id!r}; expected one of {TABLE_IDS}")
        if not self.confidences:
            raise ValueError("confidence grid must be non-empty")
        for name, values in self.grids.items():
            if name not in DEFAULT_GRIDS[self.table_id]:
                raise ValueError(f"table {self.table_id} has no grid {name!r}")
            if not values:
                raise ValueError(f"grid {name!r} must be non-empty")

    def grid(self, name: str) -> tuple:
        return tuple(self.grids.get(name, DEFAULT_GRIDS[self.table_id][name]))

    def params(self) -> dict[str, Any]:
        out: dict[str, Any] = {"confidences": list(self.confidences)}
        for name in DEFAULT_GRIDS[self.table_id]:
            out[name] = list(self.grid(name))
        return out


@dataclass(frozen=True)
class Cell:
    """One table cell: a number or CI pair, its display text, a validity flag
    for approximation columns, and an optional paired alternative value."""

    value: Any
    display: str
    valid: bool = True
    alt: Any = None

    def to_json(self) -> dict[str, Any]:
        value = list(self.value) if isinstance(self.value, tuple) else self.value
        return {"value": value, "display": self.display, "valid": self.valid, "alt": self.alt}

    @staticmethod
    def from_json(obj: dict[str, Any]) -> "Cell":
        value = obj["value"]
        if isinstance(value, list):
            value = tuple(value)
        return Cell(value=value, display=obj["display"], valid=obj["valid"], alt=obj["alt"])


@dataclass(frozen=True)
class RenderedTable:
    table_id: str
    params: dict[str, Any]
    headers: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...]

    def to_json_obj(self) -> dict[str, Any]:
        return {
            "table_id": self.table_id,
            "params": self.params,
            "headers": list(self.headers),
            "rows": [[cell.to_json() for cell in row] for row in self.rows],
        }


def _pct(value: float, decimals: int) -> str:
    return f"{value:.{decimals}f}%"


def _axis_pct(fraction: float) -> str:
    """Percent label for an axis value, with decimals only when needed."""
    v = fraction * 100.0
    return _pct(v, 0 if abs(v - round(v)) < 1e-9 else 1)


def _label_cell(text: str, value: Any) -> Cell:
    return Cell(value=value, display=text)


def _int_cell(n: int, alt: int | None = None, valid: bool = True) -> Cell:
    display = str(n) if alt is None else f"{n} ({alt})"
    return Cell(value=n, display=display, valid=valid, alt=alt)


def _ci_cell(lower: float, upper: float, decimals: int) -> Cell:
    return Cell(value=(lower, upper),
                display=f"[{lower:.{decimals}f}, {upper:.{decimals}f}]")


# ---------------------------------------------------------------------------
# Generators (one per table)
# ---------------------------------------------------------------------------

def _conf_label(conf: float) -> str:
    return _pct(conf * 100.0, 0)


def _gen_size_table(spec: TableSpec, axis: str,
                    size_fn: Callable[[float, float], int]) -> RenderedTable:
    values = spec.grid(axis)
    headers = ("confidence",) + tuple(_axis_pct(v) for v in values)
    rows = []
    for conf in spec.confidences:
        row = [_label_cell(_conf_label(conf), conf)]
        row += [_int_cell(size_fn(v, 1.0 - conf)) for v in values]
        rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


def _gen_acc_table(spec: TableSpec, prec_fn: Callable[[int, float], float]) -> RenderedTable:
    ns = spec.grid("ns")
    headers = ("confidence",) + tuple(str(n) for n in ns)
    rows = []
    for conf in spec.confidences:
        row = [_label_cell(_conf_label(conf), conf)]
        for n in ns:
            pct = prec_fn(n, 1.0 - conf) * 100.0
            row.append(Cell(value=pct, display=_pct(pct, 2)))
        rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


def _gen_t1(spec: TableSpec) -> RenderedTable:
    return _gen_size_table(spec, "deltas",
                           lambda d, a: iv.stddev_sample_size(d, a).size)


def _gen_t2(spec: TableSpec) -> RenderedTable:
    return _gen_acc_table(spec, iv.stddev_precision)


def _gen_t3(spec: TableSpec) -> RenderedTable:
    return _gen_size_table(spec, "deltas",
                           lambda d, a: iv.mean_sample_size(d, a).size)


def _gen_t4(spec: TableSpec) -> RenderedTable:
    return _gen_acc_table(spec, iv.mean_precision)


def _gen_t5(spec: TableSpec) -> RenderedTable:
    p_hats, deltas = spec.grid("p_hats"), spec.grid("deltas")
    headers = ("p_hat", "confidence") + tuple(_axis_pct(d) for d in deltas)
    rows = []
    for p in p_hats:
        for conf in spec.confidences:
            alpha = 1.0 - conf
            row = [_label_cell(_axis_pct(p), p), _label_cell(_conf_label(conf), conf)]
            for d in deltas:
                exact = pr.proportion_sample_size_exact(p, d, alpha)
                approx = pr.proportion_sample_size_normal(p, d, alpha, continuity_correction=True)
                row.append(_int_cell(exact.size, alt=approx.size, valid=approx.valid))
            rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


def _gen_t6(spec: TableSpec) -> RenderedTable:
    p_hats, ns = spec.grid("p_hats"), spec.grid("ns")
    headers = ("p_hat", "confidence") + tuple(str(n) for n in ns)
    rows = []
    for p in p_hats:
        for conf in spec.confidences:
            row = [_label_cell(_axis_pct(p), p), _label_cell(_conf_label(conf), conf)]
            for n in ns:
                lower, upper = pr.clopper_pearson_bounds(p * n, n, 1.0 - conf)
                row.append(_ci_cell(lower * 100.0, upper * 100.0, 1))
            rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


def _gen_t7(spec: TableSpec) -> RenderedTable:
    ps, ks = spec.grid("ps"), spec.grid("ks")
    headers = ("p", "confidence") + tuple(_axis_pct(k) for k in ks)
    rows = []
    for p in ps:
        for conf in spec.confidences:
            alpha = 1.0 - conf
            row = [_label_cell(_axis_pct(p), p),
                   _label_cell(_conf_label(conf), conf)]
            for k in ks:
                exact = pr.rare_proportion_sample_size_exact(p, k, alpha)
                approx = pr.rare_proportion_sample_size_poisson(p, k, alpha)
                row.append(_int_cell(exact.size, alt=approx.size, valid=approx.valid))
            rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


def _gen_t8(spec: TableSpec) -> RenderedTable:
    p_hats, ns = spec.grid("p_hats"), spec.grid("ns")
    headers = ("p_hat", "confidence") + tuple(str(n) for n in ns)
    rows = []
    for p in p_hats:
        for conf in spec.confidences:
            row = [_label_cell(_axis_pct(p), p),
                   _label_cell(_conf_label(conf), conf)]
            for n in ns:
                lower, upper = pr.clopper_pearson_bounds(p * n, n, 1.0 - conf)
                row.append(_ci_cell(lower * 100.0, upper * 100.0, 1))
            rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


def _gen_t9(spec: TableSpec) -> RenderedTable:
    bounds = spec.grid("bounds")
    headers = ("p_U", "confidence", "clopper_pearson", "zero_acceptance", "chi2_approximation")
    rows = []
    for p_u in bounds:
        for conf in spec.confidences:
            bound = pr.OneSidedBound("upper", p_u, 1.0 - conf)
            row = [
                _label_cell(_axis_pct(p_u), p_u),
                _label_cell(_conf_label(conf), conf),
                _int_cell(pr.one_sided_exact_sample_size(bound)),
                _int_cell(pr.zero_acceptance_sample_size(bound)),
                _int_cell(pr.rule_of_three_sample_size(bound)),
            ]
            rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


def _gen_t10(spec: TableSpec) -> RenderedTable:
    rhos, deltas = spec.grid("rhos"), spec.grid("deltas")
    headers = ("rho", "confidence") + tuple(f"{d:g}" for d in deltas)
    rows = []
    for rho in rhos:
        for conf in spec.confidences:
            row = [_label_cell(f"{rho:g}", rho), _label_cell(_conf_label(conf), conf)]
            row += [_int_cell(iv.correlation_sample_size(rho, d, 1.0 - conf).size)
                    for d in deltas]
            rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


def _gen_t11(spec: TableSpec) -> RenderedTable:
    rs, ns = spec.grid("rs"), spec.grid("ns")
    headers = ("r", "confidence") + tuple(str(n) for n in ns)
    rows = []
    for r in rs:
        for conf in spec.confidences:
            row = [_label_cell(f"{r:g}", r), _label_cell(_conf_label(conf), conf)]
            for n in ns:
                ci = iv.correlation_ci(r, n, 1.0 - conf)
                row.append(_ci_cell(ci.lower, ci.upper, 2))
            rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


def _gen_t12(spec: TableSpec) -> RenderedTable:
    ks = spec.grid("ks")
    headers = ("confidence",) + tuple(f"{k:g}" for k in ks)
    rows = []
    for conf in spec.confidences:
        row = [_label_cell(_conf_label(conf), conf)]
        row += [_int_cell(iv.lifetime_required_events(k, 1.0 - conf).size) for k in ks]
        rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


def _gen_t13(spec: TableSpec) -> RenderedTable:
    es = spec.grid("es")
    headers = ("confidence",) + tuple(str(e) for e in es)
    rows = []
    for conf in spec.confidences:
        row = [_label_cell(_conf_label(conf), conf)]
        for e in es:
            ci = iv.lifetime_ci(1.0, e, 1.0 - conf)
            row.append(_ci_cell(ci.lower, ci.upper, 2))
        rows.append(tuple(row))
    return RenderedTable(spec.table_id, spec.params(), headers, tuple(rows))


_GENERATORS: dict[str, Callable[[TableSpec], RenderedTable]] = {
    "T1_std_size": _gen_t1, "T2_std_acc": _gen_t2,
    "T3_mean_size": _gen_t3, "T4_mean_acc": _gen_t4,
    "T5_prop_size": _gen_t5, "T6_prop_acc": _gen_t6,
    "T7_rare_size": _gen_t7, "T8_rare_acc": _gen_t8,
    "T9_one_sided": _gen_t9, "T10_corr_size": _gen_t10,
    "T11_corr_acc": _gen_t11, "T12_life_events": _gen_t12,
    "T13_life_acc": _gen_t13,
}

_SHORT_IDS = {tid.split("_")[0]: tid for tid in TABLE_IDS}


def resolve_table_id(name: str) -> str:
    """Accept either the full id (T5_prop_size) or the short form (T5)."""
    if name in _GENERATORS:
        return name
    if name in _SHORT_IDS:
        return _SHORT_IDS[name]
    raise ValueError(f"unknown table id {name!r}; expected one of {TABLE_IDS}")


def generate(spec: TableSpec | str) -> RenderedTable:
    """Build one table; every cell comes from the design modules."""
    if isinstance(spec, str):
        spec = TableSpec(resolve_table_id(spec))
    try:
        return _GENERATORS[spec.table_id](spec)
    except (ValueError, ArithmeticError) as exc:
        raise type(exc)(f"table {spec.table_id}: {exc}") from exc


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _decorated_display(cell: Cell, strike: str = "*") -> str:
    if cell.valid or cell.alt is None:
        if cell.valid:
            return cell.display
        return f"{cell.display}{strike}" if strike == "*" else f"~~{cell.display}~~"
    main = str(cell.value)
    if strike == "*":
        return f"{main} ({cell.alt}*)"
    return f"{main} (~~{cell.alt}~~)"


def render(table: RenderedTable, fmt: str = "markdown") -> str:
    """Serialize a table; output is byte-stable for fixed inputs."""
    if fmt == "json":
        return json.dumps(table.to_json_obj(), sort_keys=True)
    if fmt in ("csv", "tsv"):
        import csv as _csv
        import io
        buf = io.StringIO()
        writer = _csv.writer(buf, delimiter="," if fmt == "csv" else "\t")
        writer.writerow(table.headers)
        for row in table.rows:
            writer.writerow([_decorated_display(c, strike="*") for c in row])
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(table.headers) + " |",
                 "| " + " | ".join("---" for _ in table.headers) + " |"]
        for row in table.rows:
            lines.append("| " + " | ".join(_decorated_display(c, strike="~~") for c in row) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected csv, tsv, markdown or json")


def parse_rendered_json(text: str) -> RenderedTable:
    """Parse the json rendering back into an equal RenderedTable."""
    obj = json.loads(text)
    return RenderedTable(
        table_id=obj["table_id"],
        params=obj["params"],
        headers=tuple(obj["headers"]),
        rows=tuple(tuple(Cell.from_json(c) for c in row) for row in obj["rows"]),
    )


# ---------------------------------------------------------------------------
# Golden comparison
# ---------------------------------------------------------------------------

# tolerance policy: (value tolerance, alt tolerance); int tolerances compare
# rounded integers, float tolerances compare absolutely per bound.
_VALUE_TOL: dict[str, tuple[float, float]] = {
    "T1_std_size": (0.0, 0.0),
    "T2_std_acc": (0.01, 0.0),
    "T3_mean_size": (0.0, 0.0),
    "T4_mean_acc": (0.01, 0.0),
    "T5_prop_size": (1.0, 0.0),   # exact-binomial column +/- 1; approximation exact
    "T6_prop_acc": (0.05, 0.0),
    "T7_rare_size": (1.0, 0.0),
    "T8_rare_acc": (0.05, 0.0),
    "T9_one_sided": (0.0, 0.0),
    "T10_corr_size": (0.0, 0.0),
    "T11_corr_acc": (0.005, 0.0),
    "T12_life_events": (0.0, 0.0),
    "T13_life_acc": (0.005, 0.0),
}


@dataclass(frozen=True)
class CellMismatch:
    table_id: str
    row: int
    col: int
    header: str
    field: str
    expected: Any
    actual: Any


def golden_dir_path() -> str:
    """Directory holding the golden JSON tables; overridable via the
    PILOTSIZE_GOLDEN_DIR environment variable."""
    override = os.environ.get("PILOTSIZE_GOLDEN_DIR")
    if override:
        return override
    return str(resources.files("pilotsize").joinpath("goldens"))


def load_golden(table_id: str, golden_dir: str | None = None) -> RenderedTable:
    table_id = resolve_table_id(table_id)
    directory = golden_dir or golden_dir_path()
    path = os.path.join(directory, f"{table_id}.json")
    if not os.path.exists(path):
        raise FileNotFoundError(f"golden file missing: {path}")
    with open(path, encoding="utf-8") as fh:
        return parse_rendered_json(fh.read())


def _values_match(expected: Any, actual: Any, tol: float) -> bool:
    if isinstance(expected, tuple) or isinstance(actual, tuple):
        if not (isinstance(expected, tuple) and isinstance(actual, tuple)
                and len(expected) == len(actual)):
            return False
        return all(_values_match(e, a, tol) for e, a in zip(expected, actual))
    if isinstance(expected, str) or isinstance(actual, str):
        return expected == actual
    if expected is None or actual is None:
        return expected is None and actual is None
    if tol == 0.0:
        return math.isclose(float(expected), float(actual), rel_tol=0.0, abs_tol=1e-9)
    return abs(float(expected) - float(actual)) <= tol + 1e-12


def diff_against_golden(table_id: str, golden_dir: str | None = None,
                        table: RenderedTable | None = None) -> list[CellMismatch]:
    """Compare a regenerated table against its golden; empty list on pass.

    Label columns and validity flags must match exactly; numeric cells use
    the per-table tolerance policy.
    """
    table_id = resolve_table_id(table_id)
    golden = load_golden(table_id, golden_dir)
    if table is None:
        table = generate(TableSpec(table_id))
    mismatches: list[CellMismatch] = []
    value_tol, alt_tol = _VALUE_TOL[table_id]
    if golden.headers != table.headers or len(golden.rows) != len(table.rows):
        mismatches.append(CellMismatch(table_id, -1, -1, "", "shape",
                                       (golden.headers, len(golden.rows)),
                                       (table.headers, len(table.rows))))
        return mismatches
    n_labels = sum(1 for h in table.headers if h in
                   ("confidence", "p_hat", "p", "p_U", "rho", "r"))
    for i, (grow, arow) in enumerate(zip(golden.rows, table.rows)):
        for j, (gcell, acell) in enumerate(zip(grow, arow)):
            header = table.headers[j]
            tol = 0.0 if j < n_labels else value_tol
            if not _values_match(gcell.value, acell.value, tol):
                mismatches.append(CellMismatch(table_id, i, j, header, "value",
                                               gcell.value, acell.value))
            if not _values_match(gcell.alt, acell.alt, alt_tol):
                mismatches.append(CellMismatch(table_id, i, j, header, "alt",
                                               gcell.alt, acell.alt))
            if gcell.valid != acell.valid:
                mismatches.append(CellMismatch(table_id, i, j, header, "valid",
                                               gcell.valid, acell.valid))
    return mismatches


def golden_checksum(golden_dir: str | None = None) -> str:
    """SHA-256 over all golden files, for deploy verification."""
    import hashlib
    directory = golden_dir or golden_dir_path()
    digest = hashlib.sha256()
    for table_id in TABLE_IDS:
        path = os.path.join(directory, f"{table_id}.json")
        if os.path.exists(path):
            with open(path, "rb") as fh:
                digest.update(fh.read())
    return digest.hexdigest()
