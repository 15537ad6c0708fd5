"""Orbifold Euler numbers and the orbifold Miyaoka-Yau inequality on the plane.

For an arrangement C with ordinary singularities and the divisor alpha*C, the
global inequality reads (K + alpha*C)^2 <= 3 e_orb(P^2, alpha*C). Summing the
local contributions turns it into the point-wise form

    sum_p 3 (alpha (mu_p - 1) + 1 - e_orb(p)) <= (3 alpha - alpha^2) D^2 - 3 alpha D,

and substituting the upper bounds of the local Euler numbers gives the lower
bound 3 alpha f_2 - 3 alpha f_1 - 3/4 alpha^2 f_2 for the left-hand side.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .core import f_number, milnor_ordinary, require_identity
from .exceptions import AlphaOutOfRangeError, EmptyAlphaIntervalError
from .models import AlphaInterval, ArrangementClass, LocalEulerValue, WeightVector
from .rationals import RationalLike, parse_rational

logger = logging.getLogger(__name__)

ONE = Fraction(1)


def local_orbifold_euler(weights: WeightVector) -> LocalEulerValue:
    """Local orbifold Euler number at an ordinary point with branch weights ``weights``.

    Returns the exact value when a > 2 or 2 a_n >= a, and the upper bound
    (1 - a/2)^2 when 2 a_n < a <= 2.
    """
    a = weights.total
    a_n = weights.largest
    if a > 2:
        return LocalEulerValue(Fraction(0), True)
    if 2 * a_n >= a:
        return LocalEulerValue((1 - a + a_n) * (1 - a_n), True)
    return LocalEulerValue((1 - a / 2) ** 2, False)


def effective_r_max(arrangement: ArrangementClass) -> int:
    """Largest multiplicity, or 2 for a class without singular points."""
    r_max = arrangement.t.r_max()
    return 2 if r_max is None else r_max


def canonical_alpha(arrangement: ArrangementClass) -> Fraction:
    """alpha = 3/D, the choice that specializes the parametric inequalities."""
    return Fraction(3, arrangement.degree)


def alpha_interval(arrangement: ArrangementClass) -> AlphaInterval:
    """Weights for which K + alpha*C is effective and (P^2, alpha*C) log canonical."""
    lo = canonical_alpha(arrangement)
    hi = Fraction(2, effective_r_max(arrangement))
    if lo > hi:
        raise EmptyAlphaIntervalError(lo, hi)
    return AlphaInterval(lo, hi)


def try_alpha_interval(arrangement: ArrangementClass) -> Optional[AlphaInterval]:
    try:
        return alpha_interval(arrangement)
    except EmptyAlphaIntervalError:
        return None


def log_canonical_range(arrangement: ArrangementClass) -> AlphaInterval:
    """Weights 0 <= alpha <= 2/r_max, where the local upper bounds may be substituted."""
    return AlphaInterval(Fraction(0), min(ONE, Fraction(2, effective_r_max(arrangement))))


def require_alpha(arrangement: ArrangementClass, alpha: RationalLike) -> Fraction:
    """Parse alpha and check it lies in the alpha interval."""
    value = parse_rational(alpha)
    interval = alpha_interval(arrangement)
    if value not in interval:
        raise AlphaOutOfRangeError(value, interval.lo, interval.hi)
    return value


def _require_log_canonical(arrangement: ArrangementClass, alpha: RationalLike) -> Fraction:
    value = parse_rational(alpha)
    bounds = log_canonical_range(arrangement)
    if value not in bounds:
        raise AlphaOutOfRangeError(value, bounds.lo, bounds.hi, what="log canonical range")
    return value


def lmy_lhs_bound(arrangement: ArrangementClass, alpha: RationalLike) -> Fraction:
    """Lower bound 3 alpha f_2 - 3 alpha f_1 - 3/4 alpha^2 f_2 of the point-wise left-hand side."""
    a = _require_log_canonical(arrangement, alpha)
    f1 = f_number(arrangement, 1)
    f2 = f_number(arrangement, 2)
    return 3 * a * f2 - 3 * a * f1 - Fraction(3, 4) * a * a * f2


def lmy_lhs_local_sum(arrangement: ArrangementClass, alpha: RationalLike) -> Fraction:
    """Point-wise left-hand side with every local Euler number replaced by its value or bound."""
    a = _require_log_canonical(arrangement, alpha)
    total = Fraction(0)
    for r, t in arrangement.t.items():
        local = local_orbifold_euler(WeightVector.equal(a, r)).value
        total += 3 * t * (a * (milnor_ordinary(r) - 1) + 1 - local)
    return total


def lmy_rhs(arrangement: ArrangementClass, alpha: RationalLike) -> Fraction:
    """(3 alpha - alpha^2) D^2 - 3 alpha D."""
    a = parse_rational(alpha)
    degree = arrangement.degree
    return (3 * a - a * a) * degree * degree - 3 * a * degree


def _global_orbifold_euler(arrangement: ArrangementClass, a: Fraction) -> LocalEulerValue:
    require_identity(arrangement)
    # e_top of a smooth plane curve of degree d is 3d - d^2; each of them loses its f_1 incidences.
    smooth_part = sum(count * (3 * degree - degree * degree) for degree, count in arrangement.components.groups)
    value = 3 - a * (smooth_part - f_number(arrangement, 1))
    exact = True
    for r, t in arrangement.t.items():
        local = local_orbifold_euler(WeightVector.equal(a, r))
        value += t * (local.value - 1)
        exact = exact and local.exact
    return LocalEulerValue(value, exact)


def global_orbifold_euler_bound(arrangement: ArrangementClass, alpha: RationalLike) -> Fraction:
    """Upper bound of e_orb(P^2, alpha*C); exact when only double points occur."""
    a = _require_log_canonical(arrangement, alpha)
    return _global_orbifold_euler(arrangement, a).value


@dataclass(frozen=True)
class GlobalCheck:
    """(K + alpha*C)^2 <= 3 e_orb evaluated with the bound for e_orb."""

    alpha: Fraction
    lhs: Fraction
    rhs: Fraction
    exact: bool

    @property
    def satisfied(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    @property
    def slack(self) -> Fraction:
        return self.rhs - self.lhs


def lmy_global_check(arrangement: ArrangementClass, alpha: RationalLike) -> GlobalCheck:
    """Compare (alpha*D - 3)^2 with three times the orbifold Euler bound.

    A failed check rules the class out for arrangements with ordinary
    singularities; with ``exact`` False a passing check only means the class
    is consistent with the bound.
    """
    a = require_alpha(arrangement, alpha)
    euler = _global_orbifold_euler(arrangement, a)
    lhs = (a * arrangement.degree - 3) ** 2
    return GlobalCheck(alpha=a, lhs=lhs, rhs=3 * euler.value, exact=euler.exact)


@dataclass(frozen=True)
class SweepPoint:
    alpha: Fraction
    lhs_bound: Fraction
    rhs: Fraction

    @property
    def gap(self) -> Fraction:
        return self.rhs - self.lhs_bound


def alpha_sweep(arrangement: ArrangementClass, steps: int) -> List[SweepPoint]:
    """Evaluate both sides of the point-wise inequality at evenly spaced alphas of the interval."""
    interval = alpha_interval(arrangement)
    points = [
        SweepPoint(alpha, lmy_lhs_bound(arrangement, alpha), lmy_rhs(arrangement, alpha))
        for alpha in interval.sample(steps)
    ]
    logger.debug(f"Swept {len(points)} alphas over [{interval.lo}, {interval.hi}] for {arrangement}")
    return points


__all__ = [
    "local_orbifold_euler",
    "effective_r_max",
    "canonical_alpha",
    "alpha_interval",
    "try_alpha_interval",
    "log_canonical_range",
    "require_alpha",
    "lmy_lhs_bound",
    "lmy_lhs_local_sum",
    "lmy_rhs",
    "global_orbifold_euler_bound",
    "GlobalCheck",
    "lmy_global_check",
    "SweepPoint",
    "alpha_sweep",
]
