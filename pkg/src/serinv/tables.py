"""Table definitions, grid comparisons and CSV/Markdown rendering."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from . import reference
from .errors import SerinvError
from .oracles import GAUSSIAN, POLYLOG32, Oracle, get_oracle
from .resummation import (
    FactoredPade,
    Kind,
    Pade,
    PartialSum,
    PoweredPade,
    build_direct,
    direct_order,
    parametric_from_direct,
    rho_order,
    solve_rho,
)

ORACLE_TOL = 1e-11
MATCH_TOL = 1e-6


@dataclass(frozen=True)
class Method:
    side: str  # "direct" or "inverse"
    kind: Kind

    @property
    def order(self) -> int:
        return direct_order(self.kind) if self.side == "direct" else rho_order(self.kind)

    @property
    def label(self) -> str:
        return f"{self.side}:{self.kind}"

    @classmethod
    def parse(cls, text: str) -> Method:
        side, _, rest = text.strip().partition(":")
        if side not in ("direct", "inverse"):
            raise ValueError(f"method {text!r} must start with direct: or inverse:")
        return cls(side, Kind.parse(rest))


class Evaluator:
    """A built approximant evaluated row by row."""

    def __init__(self, method: Method, oracle: Oracle):
        self.method = method
        s = oracle.series(method.order)
        if method.side == "direct":
            self.approx = build_direct(s, method.kind)
            self.rep = None
        else:
            self.approx = None
            self.rep = parametric_from_direct(s, method.kind)

    def render(self) -> str:
        if self.approx is not None:
            return f"E = {self.approx.render()}"
        rep = self.rep
        head = "" if rep.E0.rational == 0 else f"{rep.E0} "
        if rep.E1.rational < 0:
            lin = f"- {-rep.E1}*rho" if head else f"-{-rep.E1}*rho"
        else:
            lin = f"+ {rep.E1}*rho" if head else f"{rep.E1}*rho"
        if rep.E1.is_one():
            lin = lin.replace("1*rho", "rho")
        return f"E = {head}{lin},  g = {rep.g_of_rho.render()}"

    def __call__(self, g: float) -> Cell:
        if self.approx is not None:
            return Cell(self.approx(g))
        report = solve_rho(self.rep, g)
        values = tuple(self.rep.E_of_rho(r) for r in report.roots)
        return Cell(values[report.selected], report.rho, report.roots, values)


@dataclass(frozen=True)
class Cell:
    value: float
    rho: float | None = None
    roots: tuple = ()
    branch_values: tuple = ()
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error


def _failed(exc: Exception) -> Cell:
    return Cell(math.nan, error=f"{type(exc).__name__}: {exc}")


@dataclass(frozen=True)
class TableSpec:
    id: str
    title: str
    oracle: Oracle
    grid: tuple
    methods: tuple
    # reference tuple index of each method's printed column
    ref_columns: tuple
    printed: dict = field(default_factory=dict)
    rho_column: bool = True
    digits_column: bool = False


TABLES = {
    t.id: t for t in (
        TableSpec("gaussian-t1", "order-5 partial sums, direct and inverse", GAUSSIAN,
                  (0.04, 0.08, 0.12, 0.16, 0.2),
                  (Method("direct", PartialSum(5)), Method("inverse", PartialSum(5))),
                  (1, 2), reference.GAUSSIAN_T1),
        TableSpec("gaussian-t2", "[2/3] on both series", GAUSSIAN,
                  (0.1, 0.2, 0.3, 0.4, 0.5, 0.6),
                  (Method("direct", Pade(2, 3)), Method("inverse", Pade(2, 3))),
                  (1, 2), reference.GAUSSIAN_T2),
        TableSpec("gaussian-t3", "direct [2/3], inverse [3/2]", GAUSSIAN,
                  (0.1, 1, 10, 100, 1000, 10000),
                  (Method("direct", Pade(2, 3)), Method("inverse", Pade(3, 2))),
                  (1, 2), reference.GAUSSIAN_T3),
        TableSpec("gaussian-t4", "direct [2/3] of E^4, inverse rho*[2/3]^5", GAUSSIAN,
                  (0.1, 1, 10, 100, 1000, 10000),
                  (Method("direct", PoweredPade(2, 3, 4)),
                   Method("inverse", PoweredPade(2, 3, 5))),
                  (1, 2), reference.GAUSSIAN_T4),
        TableSpec("gaussian-t5", "inverse rho*[3/2]^5", GAUSSIAN,
                  (0.1, 1, 10, 100, 1000, 10000),
                  (Method("inverse", PoweredPade(3, 2, 5)),),
                  (2,), reference.GAUSSIAN_T5),
        TableSpec("polylog-t6", "Li_{3/2}(z) near z = 1", POLYLOG32,
                  (0.999999, 0.99999, 0.9999, 0.999, 0.99, 0.9),
                  (Method("direct", FactoredPade(6, 7)),
                   Method("inverse", Pade(5, 6))),
                  (1, 2), reference.POLYLOG_T6, rho_column=False, digits_column=True),
    )
}


def get_table(table_id: str) -> TableSpec:
    try:
        return TABLES[table_id]
    except KeyError:
        raise KeyError(f"unknown table {table_id!r}; choose from {', '.join(TABLES)}") from None


def matched_digits(value: float, exact: float, digits: int = 12) -> int:
    """Leading significant digits ``value`` shares with ``exact`` (truncated)."""
    if not (math.isfinite(value) and math.isfinite(exact)):
        return 0
    a, b = f"{value:.{digits}e}", f"{exact:.{digits}e}"
    if a[0] == "-" != b[0] or a.split("e")[1] != b.split("e")[1]:
        return 0
    ma = a.split("e")[0].replace(".", "").lstrip("-")
    mb = b.split("e")[0].replace(".", "").lstrip("-")
    n = 0
    while n < len(ma) and ma[n] == mb[n]:
        n += 1
    return n


@dataclass(frozen=True)
class Row:
    g: float
    exact: float
    cells: tuple
    rho: float | None = None
    branches: str = ""
    note: str = ""


def _branch_text(method: Method, cell: Cell) -> str:
    if len(cell.roots) < 2:
        return ""
    roots = " ".join(f"{r:.10g}" for r in cell.roots)
    return f"{method.label}: smallest-positive of {len(cell.roots)} roots [{roots}]"


def _printed_note(cell: Cell, printed: float | None) -> str:
    if printed is None or not cell.ok or abs(cell.value - printed) <= MATCH_TOL:
        return ""
    for i, (r, v) in enumerate(zip(cell.roots, cell.branch_values)):
        if abs(v - printed) <= MATCH_TOL:
            return f"printed value is on root #{i + 1} (rho={r:.10g})"
    if cell.branch_values:
        return "printed value matches no enumerated root"
    return "printed value differs"


def _printed_rho_note(cell: Cell, printed: float | None) -> str:
    if printed is None or not cell.roots or abs(cell.rho - printed) <= MATCH_TOL:
        return ""
    for i, r in enumerate(cell.roots):
        if abs(r - printed) <= MATCH_TOL:
            return f"printed rho is root #{i + 1}"
    return "printed rho matches no enumerated root"


def compute_table(spec: TableSpec) -> tuple:
    """``(evaluators, rows)`` for a table, in grid order."""
    evaluators = [Evaluator(m, spec.oracle) for m in spec.methods]
    rows = []
    for g in spec.grid:
        exact = spec.oracle(g, ORACLE_TOL)
        cells = []
        for ev in evaluators:
            try:
                cells.append(ev(g))
            except SerinvError as exc:
                cells.append(_failed(exc))
        printed = spec.printed.get(g)
        branches, notes = [], []
        for m, c, col in zip(spec.methods, cells, spec.ref_columns):
            if c.error:
                notes.append(f"{m.label} unavailable ({c.error})")
                continue
            if b := _branch_text(m, c):
                branches.append(b)
            if printed is not None and m.side == "inverse":
                if spec.rho_column and m is spec.methods[-1]:
                    if n := _printed_rho_note(c, printed[0]):
                        notes.append(n)
                if n := _printed_note(c, printed[col]):
                    notes.append(n)
        rho = next((c.rho for c in cells if c.rho is not None), None)
        rows.append(Row(g, exact, tuple(cells), rho, "; ".join(branches), "; ".join(notes)))
    return evaluators, rows


def _fmt(x, precision: int) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return "n/a"
    return f"{x:.{precision}g}"


def table_records(spec: TableSpec, rows: list, precision: int = 10) -> tuple:
    header = ["g"] + (["rho"] if spec.rho_column else [])
    header += [m.label for m in spec.methods] + ["exact"]
    if spec.digits_column:
        header += [f"digits {m.label}" for m in spec.methods]
    header += ["branches", "note"]
    body = []
    for r in rows:
        line = [_fmt(r.g, precision)]
        if spec.rho_column:
            line.append(_fmt(r.rho, precision))
        line += [_fmt(c.value, precision) for c in r.cells]
        line.append(_fmt(r.exact, precision))
        if spec.digits_column:
            line += [str(matched_digits(c.value, r.exact)) for c in r.cells]
        line += [r.branches, r.note]
        body.append(line)
    return header, body


@dataclass(frozen=True)
class ComparisonRow:
    g: float
    exact: float
    cells: tuple
    errors: tuple
    winner: str
    branches: str = ""
    note: str = ""


def compare(oracle: Oracle | str, methods: list, grid: list) -> list:
    """Evaluate every method on ``grid`` and measure ``|value - oracle|``."""
    if isinstance(oracle, str):
        oracle = get_oracle(oracle)
    methods = [Method.parse(m) if isinstance(m, str) else m for m in methods]
    built, broken = [], {}
    for m in methods:
        try:
            built.append(Evaluator(m, oracle))
        except SerinvError as exc:
            built.append(None)
            broken[m.label] = f"{type(exc).__name__}: {exc}"
    out = []
    for g in grid:
        exact = oracle(g, ORACLE_TOL)
        cells, notes, branches = [], [], []
        for m, ev in zip(methods, built):
            if ev is None:
                cells.append(Cell(math.nan, error=broken[m.label]))
            else:
                try:
                    cells.append(ev(g))
                except SerinvError as exc:
                    cells.append(_failed(exc))
            c = cells[-1]
            if c.error:
                notes.append(f"{m.label} unavailable ({c.error})")
            elif b := _branch_text(m, c):
                branches.append(b)
        errors = tuple(abs(c.value - exact) if c.ok else math.nan for c in cells)
        ranked = [(e, m.label) for e, m in zip(errors, methods) if not math.isnan(e)]
        winner = min(ranked)[1] if ranked else "none"
        out.append(ComparisonRow(g, exact, tuple(cells), errors, winner,
                                 "; ".join(branches), "; ".join(notes)))
    return out


def comparison_records(methods: list, rows: list, precision: int = 10) -> tuple:
    labels = [m if isinstance(m, str) else m.label for m in methods]
    header = ["g", "exact"]
    for lab in labels:
        header += [lab, f"error {lab}"]
    header += ["winner", "branches", "note"]
    body = []
    for r in rows:
        line = [_fmt(r.g, precision), _fmt(r.exact, precision)]
        for c, e in zip(r.cells, r.errors):
            line += [_fmt(c.value, precision), _fmt(e, 3)]
        line += [r.winner, r.branches, r.note]
        body.append(line)
    return header, body


def comparison_summary(rows: list) -> str:
    return "winners: " + ", ".join(f"g={r.g:g} {r.winner}" for r in rows)


def render(header: list, body: list, fmt: str = "csv") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(body)
        return buf.getvalue()
    if fmt == "md":
        def line(cells):
            return "| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |"
        out = [line(header), "|" + "|".join("---" for _ in header) + "|"]
        out += [line(b) for b in body]
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
