"""Command-line interface.

Subcommands:

  tables    per-n volume report: cover volume, certified bound, exact
            even-chain volume, verdict
  classify  verdict for one (n, half-twists) chain link
  roots     certified root bracket, critical point, window-radius maximum,
            and all zero windows with exclusion thresholds
  residual  the finite residual check sets, with isometry bookkeeping
  verify    check a reference CSV against the certified machinery

Exit codes follow each command's contract (see README); output is
deterministic: fixed ordering, directed 12-significant-digit decimals.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bounds import bisect_f_root, f_critical_point, scan_r_maximum, thurston_even_volume
from .classify import (
    Verdict,
    classify_chain,
    enumerate_residual,
    exclusion_frontier,
    verify_reference,
)
from .cusp import UnsupportedChainError
from .lobachevsky import DEFAULT_TOLERANCE
from .refdata import ReferenceFormatError, load_reference_csv
from .report import (
    TablesRow,
    interval_strings,
    report_row_from,
    report_rows_to_csv,
    report_rows_to_json,
    tables_rows_to_csv,
    tables_rows_to_json,
)

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_NOT_EXCLUDED = 1  # classify: residual / inapplicable; verify: failures
EXIT_USAGE = 2
EXIT_IO = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chainvol",
        description="Certified volume bounds and classification for chain link complements.",
    )
    parser.add_argument(
        "--tolerance",
        type=float,
        default=DEFAULT_TOLERANCE,
        help="tolerance passed to the special-function layer (default 1e-12)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, figures: bool = False) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", type=Path, default=None, help="output file (default stdout)")
        if figures:
            p.add_argument(
                "--figures",
                type=Path,
                default=None,
                metavar="DIR",
                help="also render figures into DIR",
            )

    p = sub.add_parser("tables", help="per-n volume report")
    p.add_argument("--min-n", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    add_common(p, figures=True)

    p = sub.add_parser("classify", help="verdict for one chain link")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--half-twists", type=int, required=True)
    add_common(p)

    p = sub.add_parser("roots", help="root, extremum, and zero-window report")
    add_common(p, figures=True)

    p = sub.add_parser("residual", help="residual check sets")
    p.add_argument("--range", choices=("small", "large"), required=True)
    p.add_argument("--count-only", action="store_true")
    add_common(p)

    p = sub.add_parser("verify", help="verify a reference CSV")
    p.add_argument("reference", type=Path)
    add_common(p)

    return parser


def _emit(text: str, out: Path | None) -> int:
    try:
        if out is None:
            sys.stdout.write(text)
        else:
            out.write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"chainvol: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_tables(args: argparse.Namespace) -> int:
    if not 5 <= args.min_n <= args.max_n:
        print("chainvol: need 5 <= min-n <= max-n", file=sys.stderr)
        return EXIT_USAGE
    rows: list[TablesRow] = []
    for n in range(args.min_n, args.max_n + 1):
        report = classify_chain(n, 0, tol=args.tolerance)
        assert report.cover_volume is not None and report.lower_bound is not None
        cover_lo, cover_hi = interval_strings(report.cover_volume)
        bound_lo = bound_hi = ""
        if report.applicable:
            bound_lo, bound_hi = interval_strings(report.lower_bound)
        exact_lo = exact_hi = ""
        if n % 2 == 0 and n >= 6:
            exact_lo, exact_hi = interval_strings(thurston_even_volume(n, args.tolerance))
        rows.append(
            TablesRow(
                n=n,
                cover_lo=cover_lo,
                cover_hi=cover_hi,
                bound_lo=bound_lo,
                bound_hi=bound_hi,
                exact_even_lo=exact_lo,
                exact_even_hi=exact_hi,
                verdict=report.verdict.value,
            )
        )
    if args.figures is not None:
        try:
            from .figures import render_tables_figure

            render_tables_figure(rows, args.figures)
        except OSError as exc:
            print(f"chainvol: cannot render figures: {exc}", file=sys.stderr)
            return EXIT_IO
    text = tables_rows_to_csv(rows) if args.format == "csv" else tables_rows_to_json(rows)
    return _emit(text, args.out)


def _cmd_classify(args: argparse.Namespace) -> int:
    if args.n < 5:
        print("chainvol: classification needs n >= 5", file=sys.stderr)
        return EXIT_USAGE
    report = classify_chain(args.n, args.half_twists, tol=args.tolerance)
    row = report_row_from(report)
    text = report_rows_to_csv([row]) if args.format == "csv" else report_rows_to_json([row])
    code = _emit(text, args.out)
    if code != EXIT_OK:
        return code
    return EXIT_OK if report.verdict is Verdict.EXCLUDED_BY_BOUND else EXIT_NOT_EXCLUDED


def _cmd_roots(args: argparse.Namespace) -> int:
    bracket = bisect_f_root()
    critical = f_critical_point()
    r_loc, r_val = scan_r_maximum()
    frontiers = {n: exclusion_frontier(n) for n in range(5, 60)}

    if args.format == "csv":
        lines = ["item,n,case,lo,hi,threshold"]
        lines.append(f"f_root_bracket,,,{bracket.lo!r},{bracket.hi!r},")
        c_lo, c_hi = interval_strings(critical)
        lines.append(f"f_critical_point,,,{c_lo},{c_hi},")
        v_lo, v_hi = interval_strings(r_val)
        lines.append(f"r_max,{r_loc!r},,{v_lo},{v_hi},")
        for n in sorted(frontiers):
            for case, fc in frontiers[n].items():
                if fc.window is None:
                    lines.append(f"zero_window,{n},{case.value},,,{fc.threshold}")
                else:
                    lines.append(
                        f"zero_window,{n},{case.value},"
                        f"{fc.window.outer_lo!r},{fc.window.outer_hi!r},{fc.threshold}"
                    )
        text = "\n".join(lines) + "\n"
    else:
        import json

        v_lo, v_hi = interval_strings(r_val)
        c_lo, c_hi = interval_strings(critical)
        obj = {
            "f_root_bracket": {"lo": repr(bracket.lo), "hi": repr(bracket.hi)},
            "f_critical_point": {"lo": c_lo, "hi": c_hi},
            "r_max": {"location": repr(r_loc), "value": {"lo": v_lo, "hi": v_hi}},
            "zero_windows": [
                {
                    "n": n,
                    "case": case.value,
                    "window": None
                    if fc.window is None
                    else {"lo": repr(fc.window.outer_lo), "hi": repr(fc.window.outer_hi)},
                    "threshold": fc.threshold,
                }
                for n in sorted(frontiers)
                for case, fc in frontiers[n].items()
            ],
        }
        text = json.dumps(obj, indent=2, sort_keys=True) + "\n"

    if args.figures is not None:
        try:
            from .figures import render_roots_figures

            render_roots_figures(bracket, critical, r_loc, r_val, frontiers, args.figures)
        except OSError as exc:
            print(f"chainvol: cannot render figures: {exc}", file=sys.stderr)
            return EXIT_IO
    return _emit(text, args.out)


def _cmd_residual(args: argparse.Namespace) -> int:
    cases = enumerate_residual(args.range)
    if args.count_only:
        if args.format == "csv":
            text = f"range,count\n{args.range},{len(cases)}\n"
        else:
            import json

            text = json.dumps({"range": args.range, "count": len(cases)}, sort_keys=True) + "\n"
        return _emit(text, args.out)
    if args.format == "csv":
        lines = ["family,n,m,canonical"]
        for c in cases:
            lines.append(f"{c.family.value},{c.n},{c.m},{str(c.canonical).lower()}")
        text = "\n".join(lines) + "\n"
    else:
        import json

        text = (
            json.dumps(
                {
                    "range": args.range,
                    "cases": [
                        {"family": c.family.value, "n": c.n, "m": c.m, "canonical": c.canonical}
                        for c in cases
                    ],
                },
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
    return _emit(text, args.out)


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        rows = load_reference_csv(args.reference)
    except OSError as exc:
        print(f"chainvol: cannot read {args.reference}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ReferenceFormatError as exc:
        print(f"chainvol: {args.reference}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verification = verify_reference(rows, tol=args.tolerance)
    failures = verification.failures
    if args.format == "csv":
        lines = ["line,table_id,base,n,m,check,detail"]
        for f in failures:
            m = "" if f.row.m is None else str(f.row.m)
            detail = f.detail.replace(",", ";")
            lines.append(f"{f.row.line},{f.row.table_id},{f.row.base},{f.row.n},{m},{f.check},{detail}")
        text = "\n".join(lines) + "\n"
    else:
        import json

        text = (
            json.dumps(
                {
                    "checks": len(verification.checks),
                    "failures": [
                        {
                            "line": f.row.line,
                            "table_id": f.row.table_id,
                            "base": f.row.base,
                            "n": f.row.n,
                            "m": f.row.m,
                            "check": f.check,
                            "detail": f.detail,
                        }
                        for f in failures
                    ],
                },
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
    code = _emit(text, args.out)
    if code != EXIT_OK:
        return code
    print(
        f"chainvol: verified {len(rows)} rows, {len(verification.checks)} checks, "
        f"{len(failures)} failures",
        file=sys.stderr,
    )
    return EXIT_OK if verification.ok else EXIT_NOT_EXCLUDED


_HANDLERS = {
    "tables": _cmd_tables,
    "classify": _cmd_classify,
    "roots": _cmd_roots,
    "residual": _cmd_residual,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.tolerance <= 0:
        print("chainvol: --tolerance must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except (UnsupportedChainError, OverflowError) as exc:
        print(f"chainvol: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())
