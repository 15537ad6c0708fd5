"""Command-line front end.

Exit codes: 0 consistent, 1 usage or input error, 2 ruled out.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import json
import logging
import sys
from fractions import Fraction
from typing import IO, Iterator, List, Optional, Sequence, Tuple

from . import config
from .core import catalog, catalog_names
from .exceptions import CurvauditError
from .geometry import t_vector_from_lines
from .inequalities import audit
from .io.arrangement_files import arrangement_to_dict, dumps_arrangement, load_arrangement
from .io.line_files import load_lines
from .io.report_json import audit_to_dict, outcome_to_dict, report_to_dict, search_summary_to_dict, sweep_to_dict
from .models import InequalityId
from .orbifold import alpha_sweep
from .pretty import pretty_audit, pretty_outcome, pretty_search_summary, pretty_sweep
from .rationals import format_rational, parse_rational
from .search import FilterPolicy, SearchMode, SearchOutcome, SearchSpec, search_feasible

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ("id", "applicable", "reason", "lhs", "rhs", "slack", "equality", "alpha")
CANDIDATE_COLUMNS = ("components", "t", "eliminated_by")


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_INPUT_ERROR; 2 is reserved for "ruled out"."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(config.EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_output_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", choices=config.OUTPUT_FORMATS, default=default(config.DEFAULT_FORMAT))
    parser.add_argument("--output", "-o", metavar="PATH", default=default(None), help="Write to PATH instead of stdout")
    parser.add_argument("--no-color", action="store_true", default=default(False), help="Disable ANSI colours")
    parser.add_argument(
        "--verbose", "-v", action="count", default=default(0), help="-v for progress, -vv for debug logging"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curvaudit", description="Audit curve arrangements against Hirzebruch-type inequalities")
    _add_output_options(parser, suppress=False)
    shared = _Parser(add_help=False)
    _add_output_options(shared, suppress=True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p_audit = sub.add_parser("audit", parents=[shared], help="Audit an arrangement-class file")
    p_audit.add_argument("path")
    p_audit.add_argument("--alpha", type=_rational_arg, default=None, help='Weight for the parametric checks, e.g. "1/7"')

    p_generate = sub.add_parser("generate", parents=[shared], help="Print a named arrangement class")
    p_generate.add_argument("name", help=f"one of: {', '.join(catalog_names())}")
    p_generate.add_argument("params", nargs="*", type=int)
    p_generate.add_argument("--yaml", action="store_true", help="Emit YAML instead of JSON")

    p_intersect = sub.add_parser("intersect", parents=[shared], help="Derive the class of a line file")
    p_intersect.add_argument("path")
    p_intersect.add_argument("--yaml", action="store_true", help="Emit YAML instead of JSON")

    p_search = sub.add_parser("search", parents=[shared], help="Enumerate t-vectors and filter them")
    mode = p_search.add_mutually_exclusive_group(required=True)
    mode.add_argument("--lines", type=int, metavar="K")
    mode.add_argument("--equal-degree", type=int, nargs=2, metavar=("D", "K"))
    mode.add_argument("--line-conic", type=int, nargs=2, metavar=("L", "K"))
    p_search.add_argument(
        "--filters", nargs="+", default=["all"], help='Inequality names (comma or space separated), "all" or "none"'
    )
    p_search.add_argument("--r-cap", type=int, default=None)
    p_search.add_argument("--policy", choices=[p.value for p in FilterPolicy], default=config.DEFAULT_POLICY)
    p_search.add_argument("--limit", type=int, default=None, help="Stop after this many survivors")
    p_search.add_argument("--workers", type=int, default=config.DEFAULT_WORKERS)
    p_search.add_argument("--show-eliminated", action="store_true", help="Also stream eliminated candidates")

    p_sweep = sub.add_parser("sweep", parents=[shared], help="Evaluate the orbifold bound across the alpha interval")
    p_sweep.add_argument("path")
    p_sweep.add_argument("--steps", type=int, default=config.DEFAULT_SWEEP_STEPS)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@contextlib.contextmanager
def _open_output(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        yield handle


def parse_filters(values: Sequence[str]) -> Tuple[InequalityId, ...]:
    names = [name for value in values for name in value.split(",") if name.strip()]
    lowered = {name.strip().lower() for name in names}
    if lowered == {"none"}:
        return ()
    if lowered == {"all"}:
        return tuple(InequalityId)
    return tuple(InequalityId.parse(name) for name in names)


def _search_spec(args: argparse.Namespace, parser: argparse.ArgumentParser) -> SearchSpec:
    if args.lines is not None:
        mode, params = SearchMode.LINES, (args.lines,)
    elif args.equal_degree is not None:
        mode, params = SearchMode.EQUAL_DEGREE, tuple(args.equal_degree)
    else:
        mode, params = SearchMode.LINE_CONIC, tuple(args.line_conic)
    try:
        filters = parse_filters(args.filters)
    except ValueError as exc:
        parser.error(str(exc))
    return SearchSpec(
        mode=mode,
        params=params,
        r_cap=args.r_cap,
        filters=filters,
        limit=args.limit,
        policy=FilterPolicy.parse(args.policy),
        workers=args.workers,
    )


def _write_json(out: IO[str], data: object) -> None:
    out.write(json.dumps(data, indent=2) + "\n")


def cmd_audit(args: argparse.Namespace, out: IO[str]) -> int:
    arrangement = load_arrangement(args.path)
    result = audit(arrangement, args.alpha)
    if args.format == "json":
        _write_json(out, audit_to_dict(result))
    elif args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=REPORT_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for report in result.reports:
            writer.writerow(report_to_dict(report))
    else:
        out.write(pretty_audit(result) + "\n")
    if not result.identity_valid:
        print(f"identity violated: {result.incidence} ≠ {result.pairs}", file=sys.stderr)
    for report in result.violations:
        logger.info(f"{report.id.slug} violated with slack {format_rational(report.slack)}")  # type: ignore[arg-type]
    return config.EXIT_RULED_OUT if result.ruled_out else config.EXIT_OK


def cmd_generate(args: argparse.Namespace, out: IO[str]) -> int:
    arrangement = catalog(args.name, *args.params)
    out.write(dumps_arrangement(arrangement, "yaml" if args.yaml else "json"))
    return config.EXIT_OK


def cmd_intersect(args: argparse.Namespace, out: IO[str]) -> int:
    arrangement = t_vector_from_lines(load_lines(args.path))
    out.write(dumps_arrangement(arrangement, "yaml" if args.yaml else "json"))
    return config.EXIT_OK


def _candidate_row(outcome: SearchOutcome) -> dict:
    data = arrangement_to_dict(outcome.arrangement)
    return {
        "components": " + ".join(f"{g['count']}x{g['degree']}" for g in data["components"]),
        "t": " ".join(f"{r}:{t}" for r, t in data["t"].items()),
        "eliminated_by": "" if outcome.killer is None else outcome.killer.name,
    }


def cmd_search(args: argparse.Namespace, out: IO[str], spec: SearchSpec) -> int:
    writer = None
    if args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=CANDIDATE_COLUMNS, lineterminator="\n")
        writer.writeheader()

    def emit(outcome: SearchOutcome) -> None:
        if not (outcome.survived or args.show_eliminated):
            return
        if args.format == "json":
            out.write(json.dumps(outcome_to_dict(outcome)) + "\n")
        elif writer is not None:
            writer.writerow(_candidate_row(outcome))
        else:
            out.write(pretty_outcome(outcome) + "\n")
        out.flush()

    result = search_feasible(spec, on_outcome=emit)
    if args.format == "json":
        out.write(json.dumps(search_summary_to_dict(result)) + "\n")
    elif args.format == "csv":
        print(pretty_search_summary(result), file=sys.stderr)
    else:
        out.write(pretty_search_summary(result) + "\n")
    return config.EXIT_OK if result.survivors else config.EXIT_RULED_OUT


def cmd_sweep(args: argparse.Namespace, out: IO[str]) -> int:
    arrangement = load_arrangement(args.path)
    points = alpha_sweep(arrangement, args.steps)
    if args.format == "json":
        _write_json(out, sweep_to_dict(points))
    elif args.format == "csv":
        rows: List[dict] = sweep_to_dict(points)
        writer = csv.DictWriter(out, fieldnames=("alpha", "lhs_bound", "rhs", "gap"), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        out.write(pretty_sweep(arrangement, points) + "\n")
    return config.EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    if args.no_color or args.output is not None:
        config.USE_COLOR = False

    try:
        spec = _search_spec(args, parser) if args.command == "search" else None
        with _open_output(args.output) as out:
            if args.command == "audit":
                return cmd_audit(args, out)
            if args.command == "generate":
                return cmd_generate(args, out)
            if args.command == "intersect":
                return cmd_intersect(args, out)
            if args.command == "search":
                return cmd_search(args, out, spec)  # type: ignore[arg-type]
            return cmd_sweep(args, out)
    except CurvauditError as exc:
        logger.debug("Command failed", exc_info=True)
        print(f"curvaudit: error: {exc}", file=sys.stderr)
        return config.EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"curvaudit: error: {exc}", file=sys.stderr)
        return config.EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
