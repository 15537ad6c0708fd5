"""Combinatorial data model of curve arrangements.

Every quantity here is a pure function of an ``ArrangementClass``: f-numbers,
the pair-count (Bezout) identity, Milnor numbers of ordinary points, Euler
numbers of reduced curves, and the catalog of named arrangements.
"""
from __future__ import annotations

import logging
from math import comb
from typing import Callable, Dict, Tuple

from .exceptions import CatalogError, IdentityViolationError, MultiplicityError
from .io.catalog_yaml import load_catalog
from .models import ArrangementClass, ComponentSpec, TVector

logger = logging.getLogger(__name__)


def f_number(arrangement: ArrangementClass, i: int) -> int:
    """Return f_i = sum_r r^i * t_r for i in {0, 1, 2}."""
    if i not in (0, 1, 2):
        raise ValueError(f"f-numbers are defined for i in {{0, 1, 2}}, received {i}")
    return sum(r**i * t for r, t in arrangement.t.items())


def incidence_sum(arrangement: ArrangementClass) -> int:
    """Return sum_r t_r * C(r, 2), the pairs of components meeting at the singular points."""
    return sum(t * comb(r, 2) for r, t in arrangement.t.items())


def pair_count(arrangement: ArrangementClass) -> int:
    """Return sum_{i<j} d_i d_j over unordered pairs of components."""
    spec = arrangement.components
    total = spec.total_degree
    return (total * total - spec.sum_of_squared_degrees) // 2


def validate_identity(arrangement: ArrangementClass) -> bool:
    return incidence_sum(arrangement) == pair_count(arrangement)


def require_identity(arrangement: ArrangementClass) -> None:
    """Raise ``IdentityViolationError`` unless the pair-count identity holds."""
    incidence = incidence_sum(arrangement)
    pairs = pair_count(arrangement)
    if incidence != pairs:
        raise IdentityViolationError(incidence, pairs)


def milnor_ordinary(m: int) -> int:
    """Milnor number (m - 1)^2 of an ordinary m-fold point."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise MultiplicityError(f"an ordinary singular point has multiplicity >= 2, received {m!r}")
    return (m - 1) ** 2


def euler_reduced_curve(arrangement: ArrangementClass) -> int:
    """e_top(C) = -D(D - 3) + sum of Milnor numbers."""
    require_identity(arrangement)
    degree = arrangement.degree
    return -degree * (degree - 3) + sum(t * milnor_ordinary(r) for r, t in arrangement.t.items())


def euler_by_components(arrangement: ArrangementClass) -> int:
    """e_top(C) by inclusion-exclusion: smooth components glued at the singular points.

    A point of multiplicity m is counted m times over the components and once
    in the union, so the sum over components overcounts by f_1 - f_0.
    """
    components = sum(count * (3 * degree - degree * degree) for degree, count in arrangement.components.groups)
    return components - (f_number(arrangement, 1) - f_number(arrangement, 0))


def _fermat(n: int) -> ArrangementClass:
    if n < 3:
        raise CatalogError(f"fermat(n) needs n >= 3, received {n}")
    counts: Dict[int, int] = {3: n * n}
    # At n = 3 the three n-fold points are triple points as well.
    counts[n] = counts.get(n, 0) + 3
    return ArrangementClass.lines(3 * n, counts)


def _generic_lines(k: int) -> ArrangementClass:
    if k < 1:
        raise CatalogError(f"generic_lines(k) needs k >= 1, received {k}")
    return ArrangementClass.lines(k, {2: comb(k, 2)})


def _pencil(k: int) -> ArrangementClass:
    if k < 2:
        raise CatalogError(f"pencil(k) needs k >= 2, received {k}")
    return ArrangementClass.lines(k, {k: 1})


def _generic_curves(d: int, k: int) -> ArrangementClass:
    if d < 1 or k < 1:
        raise CatalogError(f"generic_curves(d, k) needs d >= 1 and k >= 1, received ({d}, {k})")
    return ArrangementClass(ComponentSpec.equal_degree(d, k), TVector.of({2: d * d * comb(k, 2)}))


_FAMILIES: Dict[str, Tuple[int, Callable[..., ArrangementClass]]] = {
    "fermat": (1, _fermat),
    "generic_lines": (1, _generic_lines),
    "pencil": (1, _pencil),
    "generic_curves": (2, _generic_curves),
}


def _normalize_name(name: str) -> str:
    return str(name).strip().lower().replace("-", "_")


def catalog_names() -> Tuple[str, ...]:
    return tuple(sorted(set(load_catalog()) | set(_FAMILIES)))


def catalog_arity(name: str) -> int:
    """Number of integer parameters the named entry takes."""
    key = _normalize_name(name)
    if key in _FAMILIES:
        return _FAMILIES[key][0]
    if key in load_catalog():
        return 0
    raise CatalogError(f"unknown arrangement {name!r}; known: {', '.join(catalog_names())}")


def catalog(name: str, *params: int) -> ArrangementClass:
    """Return the published combinatorial class of a named arrangement."""
    key = _normalize_name(name)
    arity = catalog_arity(key)
    if len(params) != arity:
        raise CatalogError(f"{key} takes {arity} integer parameter(s), received {len(params)}")
    for value in params:
        if isinstance(value, bool) or not isinstance(value, int):
            raise CatalogError(f"{key} parameters must be integers, received {value!r}")
    if key in _FAMILIES:
        return _FAMILIES[key][1](*params)
    return load_catalog()[key]


__all__ = [
    "f_number",
    "incidence_sum",
    "pair_count",
    "validate_identity",
    "require_identity",
    "milnor_ordinary",
    "euler_reduced_curve",
    "euler_by_components",
    "catalog",
    "catalog_arity",
    "catalog_names",
]
