from __future__ import annotations

from typing import List, Optional, Sequence

from . import config
from .inequalities import AuditResult
from .models import ArrangementClass, InequalityReport
from .orbifold import SweepPoint
from .rationals import format_rational
from .search import SearchOutcome, SearchResult


def _c(text: str, code: str) -> str:
    if not config.USE_COLOR:
        return text
    return f"\033[{code}m{text}\033[0m"


def _b(text: str) -> str:
    return _c(text, "1")


def _red(text: str) -> str:
    return _c(text, "31")


def _green(text: str) -> str:
    return _c(text, "32")


def _yellow(text: str) -> str:
    return _c(text, "33")


def _cyan(text: str) -> str:
    return _c(text, "36")


def _dim(text: str) -> str:
    return _c(text, "2")


def _q(value: Optional[object]) -> str:
    if value is None:
        return "-"
    return format_rational(value)  # type: ignore[arg-type]


def _status(report: InequalityReport) -> str:
    if not report.applicable:
        return _dim("n/a")
    if report.violated:
        return _red("VIOLATED")
    if report.equality:
        return _yellow("equality")
    return _green("ok")


def pretty_arrangement(arrangement: ArrangementClass) -> str:
    return f"{_cyan(str(arrangement.components))}  D={arrangement.degree}  t={arrangement.t}"


def pretty_report_row(report: InequalityReport) -> str:
    name = report.id.slug.ljust(20)
    if not report.applicable:
        return f"  {name} {_status(report):<10} {_dim(report.reason)}"
    alpha = f"  alpha={_q(report.alpha)}" if report.alpha is not None else ""
    return (
        f"  {name} {_status(report)}  lhs={_q(report.lhs)}  rhs={_q(report.rhs)}  slack={_q(report.slack)}{alpha}"
    )


def pretty_audit(result: AuditResult) -> str:
    lines: List[str] = [_b("Arrangement"), f"  {pretty_arrangement(result.arrangement)}"]
    if result.identity_valid:
        lines.append(f"  pair-count identity: {_green('ok')} ({result.incidence} = {result.pairs})")
    else:
        lines.append(f"  pair-count identity: {_red('violated')} ({result.incidence} != {result.pairs})")
    if result.interval is None:
        lines.append(f"  alpha interval: {_dim('empty')}")
    else:
        lines.append(f"  alpha interval: [{_q(result.interval.lo)}, {_q(result.interval.hi)}]")
    if result.euler is not None:
        lines.append(f"  Euler number: {result.euler}")
    lines.append(_b("Inequalities"))
    lines.extend(pretty_report_row(report) for report in result.reports)
    check = result.global_check
    if check is not None:
        verdict = _green("ok") if check.satisfied else _red("VIOLATED")
        bound = "" if check.exact else _dim(" (upper bound for e_orb)")
        lines.append(_b("Global orbifold check"))
        lines.append(f"  alpha={_q(check.alpha)}  (alpha*D - 3)^2={_q(check.lhs)}  3*e_orb={_q(check.rhs)}  {verdict}{bound}")
    elif result.global_error:
        lines.append(_b("Global orbifold check"))
        lines.append(f"  {_dim(result.global_error)}")
    verdict = _red("ruled out") if result.ruled_out else _green("consistent")
    lines.append(f"{_b('Verdict')}: {verdict}")
    return "\n".join(lines)


def pretty_outcome(outcome: SearchOutcome) -> str:
    if outcome.survived:
        return f"  {_green('survives')}  t={outcome.arrangement.t}"
    return f"  {_red('dropped')}   t={outcome.arrangement.t}  by {outcome.killer.slug}"  # type: ignore[union-attr]


def pretty_search_summary(result: SearchResult) -> str:
    parts = [f"examined {result.examined}", f"survivors {len(result.survivors)}", f"eliminated {result.eliminated}"]
    if result.eliminated_by:
        detail = ", ".join(f"{ident.slug}: {count}" for ident, count in sorted(result.eliminated_by.items()))
        parts.append(f"({detail})")
    line = f"{_b('Summary')}: " + "  ".join(parts)
    if result.truncated:
        line += "  " + _yellow("[truncated at limit]")
    return line


def pretty_sweep(arrangement: ArrangementClass, points: Sequence[SweepPoint]) -> str:
    lines = [pretty_arrangement(arrangement), _b(f"  {'alpha':>10}  {'lhs bound':>14}  {'rhs':>14}  {'gap':>14}")]
    for point in points:
        gap = _q(point.gap)
        gap = _red(f"{gap:>14}") if point.gap < 0 else f"{gap:>14}"
        lines.append(f"  {_q(point.alpha):>10}  {_q(point.lhs_bound):>14}  {_q(point.rhs):>14}  {gap}")
    return "\n".join(lines)


__all__ = [
    "pretty_arrangement",
    "pretty_report_row",
    "pretty_audit",
    "pretty_outcome",
    "pretty_search_summary",
    "pretty_sweep",
]
