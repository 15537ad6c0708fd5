"""Report serialisation.

Every rational is written as a ``"p/q"`` string (``"p"`` for integers), so a
report survives a JSON round trip without any loss of precision.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from ..inequalities import AuditResult
from ..models import AlphaInterval, InequalityId, InequalityReport
from ..orbifold import GlobalCheck, SweepPoint
from ..rationals import format_rational, parse_rational
from ..search import SearchOutcome, SearchResult
from .arrangement_files import arrangement_to_dict


def _fmt(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else format_rational(value)


def _parse(value: Optional[str]) -> Optional[Fraction]:
    return None if value is None else parse_rational(value)


def report_to_dict(report: InequalityReport) -> Dict[str, Any]:
    return {
        "id": report.id.name,
        "applicable": report.applicable,
        "reason": report.reason,
        "lhs": _fmt(report.lhs),
        "rhs": _fmt(report.rhs),
        "slack": _fmt(report.slack),
        "equality": report.equality,
        "alpha": _fmt(report.alpha),
    }


def report_from_dict(data: Dict[str, Any]) -> InequalityReport:
    """Inverse of ``report_to_dict``; derived fields (slack, equality) are recomputed."""
    return InequalityReport(
        id=InequalityId.parse(data["id"]),
        applicable=bool(data["applicable"]),
        reason=data.get("reason", ""),
        lhs=_parse(data.get("lhs")),
        rhs=_parse(data.get("rhs")),
        alpha=_parse(data.get("alpha")),
    )


def interval_to_dict(interval: Optional[AlphaInterval]) -> Optional[Dict[str, str]]:
    if interval is None:
        return None
    return {"lo": format_rational(interval.lo), "hi": format_rational(interval.hi)}


def global_check_to_dict(check: GlobalCheck) -> Dict[str, Any]:
    return {
        "alpha": format_rational(check.alpha),
        "lhs": format_rational(check.lhs),
        "rhs": format_rational(check.rhs),
        "slack": format_rational(check.slack),
        "satisfied": check.satisfied,
        "equality": check.equality,
        "exact": check.exact,
    }


def audit_to_dict(result: AuditResult) -> Dict[str, Any]:
    return {
        "arrangement": arrangement_to_dict(result.arrangement),
        "identity": {
            "valid": result.identity_valid,
            "incidence_sum": result.incidence,
            "pair_count": result.pairs,
        },
        "alpha_interval": interval_to_dict(result.interval),
        "euler_number": result.euler,
        "reports": [report_to_dict(report) for report in result.reports],
        "global_check": None if result.global_check is None else global_check_to_dict(result.global_check),
        "global_error": result.global_error,
        "ruled_out": result.ruled_out,
    }


def outcome_to_dict(outcome: SearchOutcome) -> Dict[str, Any]:
    data = arrangement_to_dict(outcome.arrangement)
    data["eliminated_by"] = None if outcome.killer is None else outcome.killer.name
    return data


def search_summary_to_dict(result: SearchResult) -> Dict[str, Any]:
    return {
        "summary": {
            "examined": result.examined,
            "survivors": len(result.survivors),
            "eliminated": result.eliminated,
            "eliminated_by": {ident.name: count for ident, count in sorted(result.eliminated_by.items())},
            "truncated": result.truncated,
        }
    }


def sweep_to_dict(points: Sequence[SweepPoint]) -> List[Dict[str, str]]:
    return [
        {
            "alpha": format_rational(point.alpha),
            "lhs_bound": format_rational(point.lhs_bound),
            "rhs": format_rational(point.rhs),
            "gap": format_rational(point.gap),
        }
        for point in points
    ]


__all__ = [
    "report_to_dict",
    "report_from_dict",
    "interval_to_dict",
    "global_check_to_dict",
    "audit_to_dict",
    "outcome_to_dict",
    "search_summary_to_dict",
    "sweep_to_dict",
]
