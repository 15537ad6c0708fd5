"""Hirzebruch-type inequalities for arrangements with ordinary singularities.

Each ``check_*`` function returns an ``InequalityReport``. A class outside an
inequality's hypotheses gets a not-applicable report whose reason names the
failed hypothesis; a class inside gets exact left- and right-hand sides.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from .core import euler_reduced_curve, incidence_sum, pair_count
from .exceptions import AlphaOutOfRangeError, EmptyAlphaIntervalError
from .models import AlphaInterval, ArrangementClass, InequalityId, InequalityReport, TVector
from .orbifold import GlobalCheck, canonical_alpha, lmy_global_check, require_alpha, try_alpha_interval
from .rationals import RationalLike

logger = logging.getLogger(__name__)

THREE_QUARTERS = Fraction(3, 4)


def chain_coefficients(r: int) -> Tuple[Fraction, int, int]:
    """Right-hand side coefficients of t_r: (r^2/4 - r, 2r - 9, r - 4)."""
    return Fraction(r * r, 4) - r, 2 * r - 9, r - 4


def _tail(t: TVector, coefficient: Callable[[int], Fraction]) -> Fraction:
    return sum((coefficient(r) * count for r, count in t.items() if r >= 5), Fraction(0))


def _quadratic_tail(t: TVector) -> Fraction:
    return _tail(t, lambda r: Fraction(r * r, 4) - r)


def _weighted_low(t: TVector) -> Fraction:
    return t.get(2) + THREE_QUARTERS * t.get(3)


def _multiplicity_gate(arrangement: ArrangementClass, bound_label: str) -> Optional[str]:
    """Reason string when some t_r != 0 with r > 2D/3, else None."""
    degree = arrangement.degree
    for r, count in arrangement.t.items():
        if 3 * r > 2 * degree:
            return f"t_r = 0 for r > {bound_label} = {Fraction(2 * degree, 3)} fails: t_{r} = {count}"
    return None


def check_langer_lines(arrangement: ArrangementClass) -> InequalityReport:
    ident = InequalityId.LANGER_LINES
    spec = arrangement.components
    if not spec.is_lines:
        return InequalityReport.gated(ident, "requires an arrangement of lines")
    reason = _multiplicity_gate(arrangement, "2k/3")
    if reason:
        return InequalityReport.gated(ident, reason)
    t = arrangement.t
    return InequalityReport.evaluated(ident, _weighted_low(t), spec.total_count + _quadratic_tail(t))


def _line_conic_shape(arrangement: ArrangementClass, ident: InequalityId) -> Optional[InequalityReport]:
    spec = arrangement.components
    if not spec.is_line_conic:
        return InequalityReport.gated(ident, "requires components of degree 1 and 2 only")
    if spec.conic_count < 1:
        return InequalityReport.gated(ident, "requires at least one conic (k >= 1)")
    return None


def check_line_conic(arrangement: ArrangementClass) -> InequalityReport:
    ident = InequalityId.LINE_CONIC
    gated = _line_conic_shape(arrangement, ident)
    if gated:
        return gated
    reason = _multiplicity_gate(arrangement, "2(l+2k)/3")
    if reason:
        return InequalityReport.gated(ident, reason)
    spec = arrangement.components
    l, k = spec.line_count, spec.conic_count  # noqa: E741
    t = arrangement.t
    lhs = _weighted_low(t) + (4 * k + 2 * l - 4) * k
    return InequalityReport.evaluated(ident, lhs, l + _quadratic_tail(t))


def check_line_conic_parametric(arrangement: ArrangementClass, alpha: RationalLike) -> InequalityReport:
    """(6/alpha - 4) k + t_2 + 3/4 t_3 >= l + sum_{r>=5} (r^2/4 - r) t_r; alpha must lie in the interval."""
    ident = InequalityId.LINE_CONIC_PARAM
    gated = _line_conic_shape(arrangement, ident)
    if gated:
        return gated
    a = require_alpha(arrangement, alpha)
    spec = arrangement.components
    l, k = spec.line_count, spec.conic_count  # noqa: E741
    t = arrangement.t
    lhs = (6 / a - 4) * k + _weighted_low(t)
    return InequalityReport.evaluated(ident, lhs, l + _quadratic_tail(t), alpha=a)


def _equal_degree_shape(arrangement: ArrangementClass, ident: InequalityId) -> Optional[InequalityReport]:
    if arrangement.components.common_degree is None:
        return InequalityReport.gated(ident, "requires all components of the same degree")
    return None


def check_equal_degree(arrangement: ArrangementClass) -> InequalityReport:
    ident = InequalityId.EQUAL_DEGREE
    gated = _equal_degree_shape(arrangement, ident)
    if gated:
        return gated
    reason = _multiplicity_gate(arrangement, "2dk/3")
    if reason:
        return InequalityReport.gated(ident, reason)
    spec = arrangement.components
    d, k = spec.common_degree, spec.total_count
    t = arrangement.t
    lhs = _weighted_low(t) + d * d * k * (d * k - k - 1)
    return InequalityReport.evaluated(ident, lhs, _quadratic_tail(t))


def check_equal_degree_parametric(arrangement: ArrangementClass, alpha: RationalLike) -> InequalityReport:
    """t_2 + 3/4 t_3 + (3/alpha) d k (d - 1) >= d^2 k + sum_{r>=5} (r^2/4 - r) t_r."""
    ident = InequalityId.EQUAL_DEGREE_PARAM
    gated = _equal_degree_shape(arrangement, ident)
    if gated:
        return gated
    a = require_alpha(arrangement, alpha)
    spec = arrangement.components
    d, k = spec.common_degree, spec.total_count
    t = arrangement.t
    lhs = _weighted_low(t) + 3 / a * d * k * (d - 1)
    return InequalityReport.evaluated(ident, lhs, d * d * k + _quadratic_tail(t), alpha=a)


def check_mixed_degree_parametric(arrangement: ArrangementClass, alpha: RationalLike) -> InequalityReport:
    """Arbitrary smooth components, S = sum d_i^2:
    t_2 + 3/4 t_3 + (3/alpha)(S - D) >= S + sum_{r>=5} (r^2/4 - r) t_r.
    """
    ident = InequalityId.MIXED_DEGREE_PARAM
    a = require_alpha(arrangement, alpha)
    spec = arrangement.components
    squares = spec.sum_of_squared_degrees
    t = arrangement.t
    lhs = _weighted_low(t) + 3 / a * (squares - spec.total_degree)
    return InequalityReport.evaluated(ident, lhs, squares + _quadratic_tail(t), alpha=a)


def _hirzebruch_gate(arrangement: ArrangementClass, ident: InequalityId) -> Optional[InequalityReport]:
    spec = arrangement.components
    if not spec.is_lines:
        return InequalityReport.gated(ident, "requires an arrangement of lines")
    k = spec.total_count
    if k < 6:
        return InequalityReport.gated(ident, f"requires k >= 6 lines, received k = {k}")
    for r in (k, k - 1, k - 2):
        if arrangement.t.get(r):
            return InequalityReport.gated(ident, f"requires t_k = t_(k-1) = t_(k-2) = 0, but t_{r} = {arrangement.t.get(r)}")
    return None


def check_hirzebruch_classic(arrangement: ArrangementClass) -> InequalityReport:
    """t_2 + t_3 >= k + sum_{r>=5} (r - 4) t_r."""
    ident = InequalityId.HIRZEBRUCH_CLASSIC
    gated = _hirzebruch_gate(arrangement, ident)
    if gated:
        return gated
    t = arrangement.t
    rhs = arrangement.components.total_count + _tail(t, lambda r: Fraction(r - 4))
    return InequalityReport.evaluated(ident, Fraction(t.get(2) + t.get(3)), rhs)


def check_hirzebruch_improved(arrangement: ArrangementClass) -> InequalityReport:
    """t_2 + 3/4 t_3 >= k + sum_{r>=5} (2r - 9) t_r."""
    ident = InequalityId.HIRZEBRUCH_IMPROVED
    gated = _hirzebruch_gate(arrangement, ident)
    if gated:
        return gated
    t = arrangement.t
    rhs = arrangement.components.total_count + _tail(t, lambda r: Fraction(2 * r - 9))
    return InequalityReport.evaluated(ident, _weighted_low(t), rhs)


def check_prsz_lt(arrangement: ArrangementClass) -> InequalityReport:
    """(7/2 d^2 - 9/2 d) k + t_2 + t_3 >= sum_{r>=5} (r - 4) t_r for curves of degree d >= 2."""
    ident = InequalityId.PRSZ_LT
    spec = arrangement.components
    d = spec.common_degree
    if d is None or d < 2:
        return InequalityReport.gated(ident, "requires all components of the same degree d >= 2")
    k = spec.total_count
    # With two curves every singular point lies on all of them; the condition only bites from k = 3.
    if k >= 3 and arrangement.t.get(k):
        return InequalityReport.gated(ident, f"requires t_k = 0, but t_{k} = {arrangement.t.get(k)}")
    t = arrangement.t
    lhs = (Fraction(7, 2) * d * d - Fraction(9, 2) * d) * k + t.get(2) + t.get(3)
    return InequalityReport.evaluated(ident, lhs, _tail(t, lambda r: Fraction(r - 4)))


_FIXED_CHECKS: Dict[InequalityId, Callable[[ArrangementClass], InequalityReport]] = {
    InequalityId.LANGER_LINES: check_langer_lines,
    InequalityId.LINE_CONIC: check_line_conic,
    InequalityId.EQUAL_DEGREE: check_equal_degree,
    InequalityId.HIRZEBRUCH_CLASSIC: check_hirzebruch_classic,
    InequalityId.HIRZEBRUCH_IMPROVED: check_hirzebruch_improved,
    InequalityId.PRSZ_LT: check_prsz_lt,
}

_PARAMETRIC_CHECKS: Dict[InequalityId, Callable[[ArrangementClass, RationalLike], InequalityReport]] = {
    InequalityId.LINE_CONIC_PARAM: check_line_conic_parametric,
    InequalityId.EQUAL_DEGREE_PARAM: check_equal_degree_parametric,
    InequalityId.MIXED_DEGREE_PARAM: check_mixed_degree_parametric,
}


def check_inequality(
    arrangement: ArrangementClass, ident: InequalityId, alpha: Optional[RationalLike] = None
) -> InequalityReport:
    """Evaluate one inequality; parametric ones default to the canonical alpha = 3/D.

    An explicit alpha outside the interval raises; with the default alpha an
    empty interval yields a not-applicable report.
    """
    if not ident.is_parametric:
        return _FIXED_CHECKS[ident](arrangement)
    shape = _shape_gate(arrangement, ident)
    if shape is not None:
        return shape
    if alpha is None:
        if try_alpha_interval(arrangement) is None:
            return InequalityReport.gated(ident, "alpha interval empty (3/D > 2/r_max)")
        alpha = canonical_alpha(arrangement)
    return _PARAMETRIC_CHECKS[ident](arrangement, alpha)


def _shape_gate(arrangement: ArrangementClass, ident: InequalityId) -> Optional[InequalityReport]:
    if ident is InequalityId.LINE_CONIC_PARAM:
        return _line_conic_shape(arrangement, ident)
    if ident is InequalityId.EQUAL_DEGREE_PARAM:
        return _equal_degree_shape(arrangement, ident)
    return None


@dataclass(frozen=True)
class AuditResult:
    arrangement: ArrangementClass
    incidence: int
    pairs: int
    interval: Optional[AlphaInterval]
    euler: Optional[int]
    reports: Tuple[InequalityReport, ...]
    global_check: Optional[GlobalCheck] = None
    global_error: str = ""

    @property
    def identity_valid(self) -> bool:
        return self.incidence == self.pairs

    @property
    def violations(self) -> Tuple[InequalityReport, ...]:
        return tuple(report for report in self.reports if report.violated)

    @property
    def ruled_out(self) -> bool:
        """True when the identity fails, an applicable inequality fails, or the global check fails."""
        if not self.identity_valid or self.violations:
            return True
        return self.global_check is not None and not self.global_check.satisfied

    def report(self, ident: InequalityId) -> InequalityReport:
        for report in self.reports:
            if report.id is ident:
                return report
        raise KeyError(ident)


def audit(arrangement: ArrangementClass, alpha: Optional[RationalLike] = None) -> AuditResult:
    """Run every inequality in canonical order, parametric ones at ``alpha`` or 3/D."""
    reports = []
    for ident in InequalityId:
        try:
            reports.append(check_inequality(arrangement, ident, alpha))
        except (AlphaOutOfRangeError, EmptyAlphaIntervalError) as exc:
            reports.append(InequalityReport.gated(ident, str(exc)))

    incidence = incidence_sum(arrangement)
    pairs = pair_count(arrangement)
    euler = euler_reduced_curve(arrangement) if incidence == pairs else None

    global_check = None
    global_error = ""
    if alpha is not None:
        if incidence != pairs:
            global_error = "global check needs the pair-count identity"
        else:
            try:
                global_check = lmy_global_check(arrangement, alpha)
            except (AlphaOutOfRangeError, EmptyAlphaIntervalError) as exc:
                global_error = str(exc)

    result = AuditResult(
        arrangement=arrangement,
        incidence=incidence,
        pairs=pairs,
        interval=try_alpha_interval(arrangement),
        euler=euler,
        reports=tuple(reports),
        global_check=global_check,
        global_error=global_error,
    )
    logger.debug(f"Audited {arrangement}: {len(result.violations)} violation(s)")
    return result


__all__ = [
    "chain_coefficients",
    "check_langer_lines",
    "check_line_conic",
    "check_line_conic_parametric",
    "check_equal_degree",
    "check_equal_degree_parametric",
    "check_mixed_degree_parametric",
    "check_hirzebruch_classic",
    "check_hirzebruch_improved",
    "check_prsz_lt",
    "check_inequality",
    "AuditResult",
    "audit",
]
