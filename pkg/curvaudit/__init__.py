from __future__ import annotations

from . import config
from .core import (
    catalog,
    catalog_names,
    euler_by_components,
    euler_reduced_curve,
    f_number,
    incidence_sum,
    milnor_ordinary,
    pair_count,
    validate_identity,
)
from .geometry import ProjectiveLine, ProjectivePoint, line_intersection, t_vector_from_lines
from .inequalities import AuditResult, audit, check_inequality
from .models import ArrangementClass, ComponentSpec, InequalityId, InequalityReport, TVector, WeightVector
from .orbifold import (
    alpha_interval,
    global_orbifold_euler_bound,
    lmy_global_check,
    lmy_lhs_bound,
    lmy_rhs,
    local_orbifold_euler,
)
from .rationals import ExactRational, format_rational, parse_rational
from .search import FilterPolicy, SearchMode, SearchResult, SearchSpec, enumerate_tvectors, search_feasible

__all__ = [
    "config",
    "ExactRational",
    "parse_rational",
    "format_rational",
    "TVector",
    "ComponentSpec",
    "ArrangementClass",
    "WeightVector",
    "InequalityId",
    "InequalityReport",
    "f_number",
    "incidence_sum",
    "pair_count",
    "validate_identity",
    "milnor_ordinary",
    "euler_reduced_curve",
    "euler_by_components",
    "catalog",
    "catalog_names",
    "local_orbifold_euler",
    "alpha_interval",
    "lmy_lhs_bound",
    "lmy_rhs",
    "global_orbifold_euler_bound",
    "lmy_global_check",
    "check_inequality",
    "AuditResult",
    "audit",
    "ProjectiveLine",
    "ProjectivePoint",
    "line_intersection",
    "t_vector_from_lines",
    "SearchMode",
    "FilterPolicy",
    "SearchSpec",
    "SearchResult",
    "enumerate_tvectors",
    "search_feasible",
]
