"""Report rows and their lossless CSV/JSON serialization.

Interval endpoints are printed with 12 significant digits by default,
rounded outward (lower endpoints toward -inf, upper endpoints toward
+inf) so a printed interval still encloses the certified one.  Rows store
the printed decimal strings, which makes serialize/parse round-trips
exact and the output byte-deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal, ROUND_CEILING, ROUND_FLOOR, localcontext

from .classify import BoundReport
from .interval import Interval

__all__ = [
    "DEFAULT_SIGNIFICANT_DIGITS",
    "REPORT_HEADER",
    "TABLES_HEADER",
    "ReportRow",
    "TablesRow",
    "decimal_string",
    "interval_strings",
    "parse_report_csv",
    "parse_report_json",
    "parse_tables_csv",
    "parse_tables_json",
    "report_row_from",
    "report_rows_to_csv",
    "report_rows_to_json",
    "tables_rows_to_csv",
    "tables_rows_to_json",
]

DEFAULT_SIGNIFICANT_DIGITS = 12


def decimal_string(x: float, sig: int = DEFAULT_SIGNIFICANT_DIGITS, rounding: str = ROUND_FLOOR) -> str:
    """Directed decimal rendering of a float at ``sig`` significant digits."""
    if x == 0.0:
        return "0"
    d = Decimal(x)  # exact binary-to-decimal conversion
    quantum = Decimal(1).scaleb(d.adjusted() - sig + 1)
    with localcontext() as ctx:
        ctx.prec = 60
        return format(d.quantize(quantum, rounding=rounding), "f")


def interval_strings(iv: Interval, sig: int = DEFAULT_SIGNIFICANT_DIGITS) -> tuple[str, str]:
    """Outward-rounded (lo, hi) decimal strings for an interval."""
    return decimal_string(iv.lo, sig, ROUND_FLOOR), decimal_string(iv.hi, sig, ROUND_CEILING)


# ----------------------------------------------------------------------
# Classification report rows
# ----------------------------------------------------------------------

REPORT_HEADER = [
    "n",
    "r",
    "family",
    "m",
    "ell_squared",
    "lower_bound_lo",
    "lower_bound_hi",
    "cover_lo",
    "cover_hi",
    "verdict",
]


@dataclass(frozen=True)
class ReportRow:
    n: int
    r: int
    family: str
    m: int
    ell_squared: int
    lower_bound_lo: str
    lower_bound_hi: str
    cover_lo: str
    cover_hi: str
    verdict: str


def report_row_from(report: BoundReport, sig: int = DEFAULT_SIGNIFICANT_DIGITS) -> ReportRow:
    if report.slope is None or report.lower_bound is None or report.cover_volume is None:
        raise ValueError(f"cannot serialize an error report: {report.reason}")
    bound_lo, bound_hi = interval_strings(report.lower_bound, sig)
    cover_lo, cover_hi = interval_strings(report.cover_volume, sig)
    return ReportRow(
        n=report.id.n,
        r=report.id.r,
        family=report.slope.family.value,
        m=report.slope.m,
        ell_squared=report.slope_length_sq or 0,
        lower_bound_lo=bound_lo,
        lower_bound_hi=bound_hi,
        cover_lo=cover_lo,
        cover_hi=cover_hi,
        verdict=report.verdict.value,
    )


def report_rows_to_csv(rows: list[ReportRow]) -> str:
    lines = [",".join(REPORT_HEADER)]
    for row in rows:
        lines.append(
            ",".join(
                [
                    str(row.n),
                    str(row.r),
                    row.family,
                    str(row.m),
                    str(row.ell_squared),
                    row.lower_bound_lo,
                    row.lower_bound_hi,
                    row.cover_lo,
                    row.cover_hi,
                    row.verdict,
                ]
            )
        )
    return "\n".join(lines) + "\n"


def parse_report_csv(text: str) -> list[ReportRow]:
    lines = text.strip("\n").split("\n")
    if not lines or lines[0].split(",") != REPORT_HEADER:
        raise ValueError("bad report header")
    rows = []
    for line in lines[1:]:
        f = line.split(",")
        rows.append(
            ReportRow(
                n=int(f[0]),
                r=int(f[1]),
                family=f[2],
                m=int(f[3]),
                ell_squared=int(f[4]),
                lower_bound_lo=f[5],
                lower_bound_hi=f[6],
                cover_lo=f[7],
                cover_hi=f[8],
                verdict=f[9],
            )
        )
    return rows


def _report_row_obj(row: ReportRow) -> dict:
    return {
        "n": row.n,
        "r": row.r,
        "family": row.family,
        "m": row.m,
        "ell_squared": row.ell_squared,
        "lower_bound": {"lo": row.lower_bound_lo, "hi": row.lower_bound_hi},
        "cover": {"lo": row.cover_lo, "hi": row.cover_hi},
        "verdict": row.verdict,
    }


def report_rows_to_json(rows: list[ReportRow]) -> str:
    return json.dumps({"rows": [_report_row_obj(r) for r in rows]}, indent=2, sort_keys=True) + "\n"


def parse_report_json(text: str) -> list[ReportRow]:
    data = json.loads(text)
    rows = []
    for obj in data["rows"]:
        rows.append(
            ReportRow(
                n=obj["n"],
                r=obj["r"],
                family=obj["family"],
                m=obj["m"],
                ell_squared=obj["ell_squared"],
                lower_bound_lo=obj["lower_bound"]["lo"],
                lower_bound_hi=obj["lower_bound"]["hi"],
                cover_lo=obj["cover"]["lo"],
                cover_hi=obj["cover"]["hi"],
                verdict=obj["verdict"],
            )
        )
    return rows


# ----------------------------------------------------------------------
# Per-n volume table rows
# ----------------------------------------------------------------------

TABLES_HEADER = [
    "n",
    "cover_lo",
    "cover_hi",
    "bound_lo",
    "bound_hi",
    "exact_even_lo",
    "exact_even_hi",
    "verdict",
]


@dataclass(frozen=True)
class TablesRow:
    """Summary for one minimally twisted chain: cover volume, certified
    lower bound (empty when the 2 pi condition fails), exact even-chain
    volume (empty for odd n), and the verdict."""

    n: int
    cover_lo: str
    cover_hi: str
    bound_lo: str
    bound_hi: str
    exact_even_lo: str
    exact_even_hi: str
    verdict: str


def tables_rows_to_csv(rows: list[TablesRow]) -> str:
    lines = [",".join(TABLES_HEADER)]
    for r in rows:
        lines.append(
            ",".join(
                [
                    str(r.n),
                    r.cover_lo,
                    r.cover_hi,
                    r.bound_lo,
                    r.bound_hi,
                    r.exact_even_lo,
                    r.exact_even_hi,
                    r.verdict,
                ]
            )
        )
    return "\n".join(lines) + "\n"


def parse_tables_csv(text: str) -> list[TablesRow]:
    lines = text.strip("\n").split("\n")
    if not lines or lines[0].split(",") != TABLES_HEADER:
        raise ValueError("bad tables header")
    rows = []
    for line in lines[1:]:
        f = line.split(",")
        rows.append(TablesRow(int(f[0]), f[1], f[2], f[3], f[4], f[5], f[6], f[7]))
    return rows


def _tables_row_obj(r: TablesRow) -> dict:
    return {
        "n": r.n,
        "cover": {"lo": r.cover_lo, "hi": r.cover_hi},
        "bound": None if r.bound_lo == "" else {"lo": r.bound_lo, "hi": r.bound_hi},
        "exact_even": None if r.exact_even_lo == "" else {"lo": r.exact_even_lo, "hi": r.exact_even_hi},
        "verdict": r.verdict,
    }


def tables_rows_to_json(rows: list[TablesRow]) -> str:
    return json.dumps({"rows": [_tables_row_obj(r) for r in rows]}, indent=2, sort_keys=True) + "\n"


def parse_tables_json(text: str) -> list[TablesRow]:
    data = json.loads(text)
    rows = []
    for obj in data["rows"]:
        bound = obj["bound"] or {"lo": "", "hi": ""}
        exact = obj["exact_even"] or {"lo": "", "hi": ""}
        rows.append(
            TablesRow(
                n=obj["n"],
                cover_lo=obj["cover"]["lo"],
                cover_hi=obj["cover"]["hi"],
                bound_lo=bound["lo"],
                bound_hi=bound["hi"],
                exact_even_lo=exact["lo"],
                exact_even_hi=exact["hi"],
                verdict=obj["verdict"],
            )
        )
    return rows
