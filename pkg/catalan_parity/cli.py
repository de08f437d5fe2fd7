"""Command-line surface: sequence tables, the triangle, tree figures and the
verification suites.

Exit statuses: 0 success, 1 a verification check failed, 2 usage error.
Logging goes to stderr only, so stdout documents are byte-identical across
runs.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Callable, List, Optional, Sequence

from . import asymptotics, logic_oracle, parity, series, tree_model
from .seqcore import default_engine
from .utils import (
    CensusMode,
    FruitKind,
    OutputFormat,
    SeqKind,
    check_cap,
)
from .verification import Suite, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

RECORD_FORMATS = [
    OutputFormat.TABLE.value,
    OutputFormat.CSV.value,
    OutputFormat.JSON.value,
    OutputFormat.MARKDOWN.value,
]
TREE_FORMATS = [OutputFormat.DOT.value, OutputFormat.TEXT.value]


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    root = logging.getLogger("catalan_parity")
    root.setLevel(level)
    for existing in list(root.handlers):
        if getattr(existing, "_catalan_cli", False):
            # dropped, not flushed: its stream may already be closed
            root.removeHandler(existing)
    handler = logging.StreamHandler(sys.stderr)
    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%b-%d %I:%M %p",
    )
    handler.setFormatter(formatter)
    handler._catalan_cli = True  # type: ignore[attr-defined]
    root.addHandler(handler)


def _render_rows(
    header: Sequence[str], rows: Sequence[Sequence[Any]], fmt: OutputFormat
) -> str:
    cells = [[str(v) for v in row] for row in rows]
    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buffer.getvalue()
    if fmt is OutputFormat.MARKDOWN:
        lines = ["| " + " | ".join(header) + " |"]
        lines.append("|" + "|".join("---" for _ in header) + "|")
        lines.extend("| " + " | ".join(row) + " |" for row in cells)
        return "\n".join(lines) + "\n"
    widths = [len(h) for h in header]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.extend(
        "  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells
    )
    return "\n".join(lines) + "\n"


def _render_json(records: Any) -> str:
    return json.dumps(records, separators=(",", ":"), ensure_ascii=False) + "\n"


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_seq(args: argparse.Namespace) -> int:
    kind = SeqKind(args.kind)
    fmt = OutputFormat(args.format)
    values = default_engine().table(kind, args.start, args.stop)
    if fmt is OutputFormat.JSON:
        _emit(
            _render_json(
                [{"kind": kind.value, "n": n, "value": str(v)} for n, v in values]
            )
        )
    elif fmt is OutputFormat.TABLE:
        # one row of indices over one row of values, like a printed value table
        header = ["n"] + [str(n) for n, _ in values]
        row = [kind.label] + [str(v) for _, v in values]
        widths = [max(len(h), len(r)) for h, r in zip(header, row)]
        _emit(
            " | ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n"
            + " | ".join(r.rjust(w) for r, w in zip(row, widths)) + "\n"
        )
    else:
        rows = [(kind.value, n, v) for n, v in values]
        _emit(_render_rows(["kind", "n", "value"], rows, fmt))
    return EXIT_OK


def _triangle_layout(totals: Sequence[int], terms: Sequence[Sequence[int]]) -> str:
    width = max(len(str(v)) for row in terms for v in row)
    sum_width = max(len(str(s)) for s in totals)
    label_width = max(len(f"f_{len(row) + 1}:") for row in terms)
    longest = max(len(row) for row in terms)
    lines = []
    for total, row in zip(totals, terms):
        label = f"f_{len(row) + 1}:"
        indent = " " * ((longest - len(row)) * (width + 1) // 2)
        body = " ".join(str(v).center(width) for v in row)
        lines.append(
            f"{label.ljust(label_width)} {str(total).rjust(sum_width)} | "
            f"{indent}{body}".rstrip()
        )
    return "\n".join(lines) + "\n"


def cmd_triangle(args: argparse.Namespace) -> int:
    if args.rows < 2:
        raise ValueError(f"--rows must be >= 2, got {args.rows}")
    fmt = OutputFormat(args.format)
    engine = default_engine()
    triangle = [engine.triangle_row(n) for n in range(2, args.rows + 1)]
    if fmt is OutputFormat.JSON:
        _emit(
            _render_json(
                [
                    {
                        "kind": SeqKind.F.value,
                        "n": row.n,
                        "value": str(row.total),
                        "terms": [str(t) for t in row.terms],
                    }
                    for row in triangle
                ]
            )
        )
    elif fmt is OutputFormat.TABLE:
        _emit(
            _triangle_layout(
                [row.total for row in triangle], [row.terms for row in triangle]
            )
        )
    elif fmt is OutputFormat.CSV:
        rows = [
            (row.n, row.total, i, term)
            for row in triangle
            for i, term in enumerate(row.terms, start=1)
        ]
        _emit(_render_rows(["n", "sum", "i", "term"], rows, fmt))
    else:
        rows = [
            (row.n, row.total, ", ".join(str(t) for t in row.terms))
            for row in triangle
        ]
        _emit(_render_rows(["n", "f_n", "terms"], rows, fmt))
    return EXIT_OK


def cmd_tree(args: argparse.Namespace) -> int:
    fmt = OutputFormat(args.format)
    shape = tree_model.build_shape(args.n)
    tree: tree_model.TreeLike = shape
    if args.fruit is not None:
        check_cap(args.n, CensusMode.PRODUCT)
        tree = tree_model.decorate(shape, FruitKind(args.fruit))
    elif fmt is OutputFormat.DOT:
        # one DOT node per bracketing, so the same bound applies
        check_cap(args.n, CensusMode.PRODUCT)
    if fmt is OutputFormat.DOT:
        _emit(tree_model.to_dot(tree))
    else:
        _emit(tree_model.symbolic_repr(tree))
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    result = logic_oracle.census(args.n, CensusMode(args.mode))
    if args.format == OutputFormat.JSON.value:
        _emit(logic_oracle.census_to_json(result))
    else:
        _emit(logic_oracle.census_to_csv(result))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    fmt = OutputFormat(args.format)
    checks = run_suite(Suite(args.suite), args.max_n)
    failed = [c for c in checks if not c.passed]
    if fmt is OutputFormat.JSON:
        _emit(
            _render_json(
                {
                    "passed": not failed,
                    "checks": [
                        {
                            "suite": c.suite.value,
                            "check": c.name,
                            "range": c.scope,
                            "passed": c.passed,
                            "detail": c.detail,
                        }
                        for c in checks
                    ],
                }
            )
        )
    else:
        rows = [
            (c.suite.value, c.name, c.scope, "pass" if c.passed else "FAIL", c.detail)
            for c in checks
        ]
        _emit(_render_rows(["suite", "check", "range", "verdict", "detail"], rows, fmt))
        if fmt is OutputFormat.TABLE:
            _emit(f"{len(checks)} checks, {len(failed)} failed\n")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_series(args: argparse.Namespace) -> int:
    if args.terms < 1:
        raise ValueError(f"--terms must be >= 1, got {args.terms}")
    fmt = OutputFormat(args.format)
    closed = series.expand_A_closed_form(args.terms)
    engine = default_engine()
    verdicts = series.compare_with_sequence(closed, SeqKind.A, engine)
    if fmt is OutputFormat.JSON:
        _emit(
            _render_json(
                [
                    {
                        "kind": SeqKind.A.value,
                        "n": k,
                        "value": str(closed[k]),
                        "match": ok,
                    }
                    for k, ok in verdicts
                ]
            )
        )
    else:
        rows = [
            (k, closed[k], engine.a_total(k), "yes" if ok else "no")
            for k, ok in verdicts
        ]
        _emit(_render_rows(["k", "coefficient", "a_k", "match"], rows, fmt))
    return EXIT_OK if all(ok for _, ok in verdicts) else EXIT_FAILED


def cmd_parity(args: argparse.Namespace) -> int:
    fmt = OutputFormat(args.format)
    verdicts = parity.verify_parity(SeqKind(args.kind), args.max_n)
    if fmt is OutputFormat.JSON:
        _emit(
            _render_json(
                [
                    {
                        "kind": v.kind.value,
                        "n": v.n,
                        "observed": v.observed.value,
                        "predicted": v.predicted.value,
                        "agrees": v.agrees,
                    }
                    for v in verdicts
                ]
            )
        )
    else:
        rows = [
            (v.n, v.observed.value, v.predicted.value, "yes" if v.agrees else "no")
            for v in verdicts
        ]
        _emit(_render_rows(["n", "observed", "predicted", "agrees"], rows, fmt))
    return EXIT_OK if all(v.agrees for v in verdicts) else EXIT_FAILED


def cmd_asymp(args: argparse.Namespace) -> int:
    fmt = OutputFormat(args.format)
    if args.start > args.stop:
        raise ValueError(f"from must be <= to, got from={args.start} to={args.stop}")
    indices = range(args.start, args.stop + 1)
    if args.diagnostics:
        diagnostics = [asymptotics.ratio_diagnostics(n) for n in indices]
        header = ["n", "growth_c", "growth_f", "growth_t", "t_over_f"]
        rows: List[Sequence[Any]] = [
            (
                d.n,
                f"{d.growth_c:.10f}",
                f"{d.growth_f:.10f}",
                f"{d.growth_t:.10f}",
                f"{d.t_over_f:.10f}",
            )
            for d in diagnostics
        ]
    else:
        estimates = [asymptotics.estimate(SeqKind(args.kind), n) for n in indices]
        header = ["n", "log2_estimate", "estimate", "exact_ratio"]
        rows = [
            (
                e.n,
                f"{e.log2_estimate:.10f}",
                f"{e.estimate:.10g}",
                f"{e.exact_ratio:.10f}",
            )
            for e in estimates
        ]
    if fmt is OutputFormat.JSON:
        _emit(_render_json([dict(zip(header, row)) for row in rows]))
    else:
        _emit(_render_rows(header, rows, fmt))
    return EXIT_OK


def _kind(value: str) -> str:
    try:
        return SeqKind(value.lower()).value
    except ValueError:
        choices = ", ".join(k.value for k in SeqKind)
        raise argparse.ArgumentTypeError(
            f"invalid kind {value!r} (choose from {choices})"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-parity",
        description="Catalan-derived sequences, their parities, and a "
        "brute-force oracle over bracketed implications.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr (-vv for debug)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def records(sub: argparse.ArgumentParser, default: str = "table") -> None:
        sub.add_argument("--format", choices=RECORD_FORMATS, default=default)

    seq = subparsers.add_parser("seq", help="print a range of one sequence")
    seq.add_argument("--kind", type=_kind, required=True)
    seq.add_argument("--from", dest="start", type=int, default=0)
    seq.add_argument("--to", dest="stop", type=int, default=10)
    records(seq)
    seq.set_defaults(handler=cmd_seq)

    triangle = subparsers.add_parser("triangle", help="rows of f_n summands")
    triangle.add_argument("--rows", type=int, default=6)
    records(triangle)
    triangle.set_defaults(handler=cmd_triangle)

    tree = subparsers.add_parser("tree", help="Catalan tree as DOT or row text")
    tree.add_argument("n", type=int)
    tree.add_argument("--fruit", choices=[FruitKind.F.value, FruitKind.T.value])
    tree.add_argument("--format", choices=TREE_FORMATS, default="dot")
    tree.set_defaults(handler=cmd_tree)

    census = subparsers.add_parser("census", help="per-tree truth-table counts")
    census.add_argument("n", type=int)
    census.add_argument(
        "--mode", choices=[m.value for m in CensusMode], default="product"
    )
    census.add_argument(
        "--format", choices=[OutputFormat.CSV.value, OutputFormat.JSON.value],
        default="csv",
    )
    census.set_defaults(handler=cmd_census)

    verify = subparsers.add_parser("verify", help="run verification suites")
    verify.add_argument(
        "--suite", choices=[s.value for s in Suite], default=Suite.ALL.value
    )
    verify.add_argument(
        "--max-n",
        dest="max_n",
        type=int,
        default=None,
        help="largest n (series: order K) for the chosen suite; with --suite all "
        "the series and asymptotics suites stop at their defaults, 64 and 400",
    )
    records(verify)
    verify.set_defaults(handler=cmd_verify)

    series_cmd = subparsers.add_parser(
        "series", help="closed-form generating function coefficients"
    )
    series_cmd.add_argument("--terms", type=int, default=16)
    records(series_cmd)
    series_cmd.set_defaults(handler=cmd_series)

    parity_cmd = subparsers.add_parser("parity", help="parity verdicts for a kind")
    parity_cmd.add_argument("--kind", type=_kind, required=True)
    parity_cmd.add_argument("--max-n", dest="max_n", type=int, default=64)
    records(parity_cmd)
    parity_cmd.set_defaults(handler=cmd_parity)

    asymp = subparsers.add_parser("asymp", help="asymptotic estimates")
    asymp.add_argument(
        "--kind",
        type=_kind,
        default=SeqKind.F.value,
        help="one of c, a, f, t",
    )
    asymp.add_argument("--from", dest="start", type=int, default=2)
    asymp.add_argument("--to", dest="stop", type=int, default=10)
    asymp.add_argument(
        "--diagnostics",
        action="store_true",
        help="print growth ratios and t_n / f_n instead of estimates",
    )
    records(asymp)
    asymp.set_defaults(handler=cmd_asymp)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    _configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except ValueError as e:
        logger.debug("usage error in %s", args.command, exc_info=True)
        sys.stderr.write(f"catalan-parity {args.command}: error: {e}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())

