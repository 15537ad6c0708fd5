"""Exact projective geometry over the rationals.

Lines and points of the projective plane are integer triples kept in a
canonical form (primitive, first nonzero entry positive), so equality and
hashing are exact. The t-vector of a line arrangement is read off by grouping
the pairwise intersections.
"""
from __future__ import annotations

import functools
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Set, Tuple

import numpy as np

from .core import require_identity
from .exceptions import DegenerateLineError, DuplicateLineError, GeometryError, IdenticalLinesError
from .models import ArrangementClass, ComponentSpec, TVector
from .rationals import RationalLike, parse_rational

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def _canonical(values: Sequence[int], what: str) -> Triple:
    if len(values) != 3:
        raise GeometryError(f"{what} needs exactly three coordinates, received {len(values)}")
    if any(isinstance(v, bool) or not isinstance(v, int) for v in values):
        raise GeometryError(f"{what} coordinates must be integers, received {list(values)!r}")
    a, b, c = values
    g = math.gcd(math.gcd(a, b), c)
    if g == 0:
        raise DegenerateLineError(f"the zero triple does not define a {what}")
    lead = next(v for v in (a, b, c) if v != 0)
    if lead < 0:
        g = -g
    return (a // g, b // g, c // g)


def _clear_denominators(values: Iterable[RationalLike]) -> Tuple[int, ...]:
    fractions = [parse_rational(v) for v in values]
    scale = functools.reduce(lambda acc, f: acc * f.denominator // math.gcd(acc, f.denominator), fractions, 1)
    return tuple(int(f * scale) for f in fractions)


def _cross(u: Triple, v: Triple) -> Triple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True, order=True)
class ProjectiveLine:
    """The line a*x + b*y + c*z = 0."""

    coefficients: Triple

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _canonical(self.coefficients, "line"))

    @classmethod
    def from_rationals(cls, a: RationalLike, b: RationalLike, c: RationalLike) -> "ProjectiveLine":
        return cls(_clear_denominators((a, b, c)))  # type: ignore[arg-type]

    @classmethod
    def parse(cls, entry: Sequence[RationalLike]) -> "ProjectiveLine":
        """Build a line from three integers or "p/q" strings."""
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise GeometryError(f"a line needs three coefficients, received {entry!r}")
        return cls.from_rationals(*entry)

    def __str__(self) -> str:
        a, b, c = self.coefficients
        return f"[{a}, {b}, {c}]"


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    coordinates: Triple

    def __post_init__(self) -> None:
        object.__setattr__(self, "coordinates", _canonical(self.coordinates, "point"))

    def lies_on(self, line: ProjectiveLine) -> bool:
        return sum(p * q for p, q in zip(self.coordinates, line.coefficients)) == 0

    def __str__(self) -> str:
        x, y, z = self.coordinates
        return f"[{x}:{y}:{z}]"


def line_intersection(first: ProjectiveLine, second: ProjectiveLine) -> ProjectivePoint:
    """The unique common point of two distinct lines."""
    if first == second:
        raise IdenticalLinesError(f"lines {first} and {second} are identical")
    return ProjectivePoint(_cross(first.coefficients, second.coefficients))


def _require_distinct(lines: Sequence[ProjectiveLine]) -> None:
    seen: Dict[ProjectiveLine, int] = {}
    for index, line in enumerate(lines):
        if line in seen:
            raise DuplicateLineError(f"line {index} duplicates line {seen[line]}: {line}")
        seen[line] = index


def intersection_points(lines: Sequence[ProjectiveLine]) -> List[Tuple[ProjectivePoint, int]]:
    """Distinct intersection points with the number of lines through each, sorted by coordinates."""
    _require_distinct(lines)
    through: Dict[ProjectivePoint, Set[int]] = defaultdict(set)
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            point = line_intersection(lines[i], lines[j])
            through[point].update((i, j))
    return sorted((point, len(members)) for point, members in through.items())


def incidence_matrix(lines: Sequence[ProjectiveLine], points: Sequence[ProjectivePoint]) -> np.ndarray:
    """Exact integer matrix M[i, j] = line_i . point_j; zero entries are incidences."""
    line_rows = np.array([line.coefficients for line in lines], dtype=object).reshape(len(lines), 3)
    point_rows = np.array([point.coordinates for point in points], dtype=object).reshape(len(points), 3)
    return line_rows @ point_rows.T


def t_vector_from_lines(lines: Sequence[ProjectiveLine]) -> ArrangementClass:
    """Arrangement class of a set of distinct lines.

    Every point where exactly r lines meet contributes to t_r.
    """
    lines = list(lines)
    if len(lines) < 2:
        raise GeometryError(f"need at least 2 lines, received {len(lines)}")
    grouped = intersection_points(lines)
    points = [point for point, _ in grouped]
    counted = (incidence_matrix(lines, points) == 0).sum(axis=0)
    counts: Dict[int, int] = defaultdict(int)
    for (point, r), incident in zip(grouped, counted):
        if int(incident) != r:
            raise GeometryError(f"point {point} lies on {int(incident)} lines but was met by {r}")
        counts[r] += 1
    arrangement = ArrangementClass(ComponentSpec.lines(len(lines)), TVector.of(counts))
    require_identity(arrangement)
    logger.debug(f"{len(lines)} lines meet in {len(points)} points: t={arrangement.t}")
    return arrangement


__all__ = [
    "ProjectiveLine",
    "ProjectivePoint",
    "line_intersection",
    "intersection_points",
    "incidence_matrix",
    "t_vector_from_lines",
]
