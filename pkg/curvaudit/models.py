from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from .exceptions import InvalidArrangementError, WeightError

PairsLike = Union[Mapping[int, int], Iterable[Tuple[int, int]]]


def _as_pairs(source: PairsLike) -> Iterable[Tuple[int, int]]:
    if isinstance(source, Mapping):
        return source.items()
    return source


def _require_int(value: object, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidArrangementError(f"{what} must be an integer, received {value!r}")
    return value


def _normalize_counts(source: PairsLike) -> Tuple[Tuple[int, int], ...]:
    counts: Dict[int, int] = {}
    for r, t in _as_pairs(source):
        r = _require_int(r, "multiplicity")
        t = _require_int(t, f"t_{r}")
        if r < 2:
            raise InvalidArrangementError(f"multiplicity keys must be >= 2, received {r}")
        if t < 0:
            raise InvalidArrangementError(f"t_{r} must be >= 0, received {t}")
        if r in counts:
            raise InvalidArrangementError(f"multiplicity {r} listed twice")
        counts[r] = t
    return tuple(sorted((r, t) for r, t in counts.items() if t > 0))


@dataclass(frozen=True)
class TVector:
    """Sparse map r -> t_r; absent keys mean t_r = 0."""

    counts: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", _normalize_counts(self.counts))

    @classmethod
    def of(cls, source: PairsLike) -> "TVector":
        return cls(tuple(_as_pairs(source)))

    def get(self, r: int) -> int:
        for key, value in self.counts:
            if key == r:
                return value
        return 0

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self.counts)

    def r_max(self) -> Optional[int]:
        return self.counts[-1][0] if self.counts else None

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)

    def __bool__(self) -> bool:
        return bool(self.counts)

    def __str__(self) -> str:
        inner = ", ".join(f"t{r}:{t}" for r, t in self.counts)
        return "{" + inner + "}"


@dataclass(frozen=True)
class ComponentSpec:
    """Arrangement composition as (degree, count) groups, order preserved."""

    groups: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        groups = []
        for degree, count in self.groups:
            degree = _require_int(degree, "degree")
            count = _require_int(count, "count")
            if degree < 1:
                raise InvalidArrangementError(f"component degree must be >= 1, received {degree}")
            if count < 1:
                raise InvalidArrangementError(f"component count must be >= 1, received {count}")
            groups.append((degree, count))
        if not groups:
            raise InvalidArrangementError("an arrangement needs at least one component")
        object.__setattr__(self, "groups", tuple(groups))

    @classmethod
    def lines(cls, k: int) -> "ComponentSpec":
        return cls(((1, k),))

    @classmethod
    def equal_degree(cls, d: int, k: int) -> "ComponentSpec":
        return cls(((d, k),))

    @classmethod
    def line_conic(cls, l: int, k: int) -> "ComponentSpec":  # noqa: E741
        groups = tuple((degree, count) for degree, count in ((1, l), (2, k)) if count > 0)
        return cls(groups)

    @property
    def total_count(self) -> int:
        return sum(count for _, count in self.groups)

    @property
    def total_degree(self) -> int:
        return sum(degree * count for degree, count in self.groups)

    @property
    def sum_of_squared_degrees(self) -> int:
        return sum(degree * degree * count for degree, count in self.groups)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({degree for degree, _ in self.groups}))

    def count_of_degree(self, d: int) -> int:
        return sum(count for degree, count in self.groups if degree == d)

    @property
    def line_count(self) -> int:
        return self.count_of_degree(1)

    @property
    def conic_count(self) -> int:
        return self.count_of_degree(2)

    @property
    def common_degree(self) -> Optional[int]:
        degrees = self.degrees
        return degrees[0] if len(degrees) == 1 else None

    @property
    def is_lines(self) -> bool:
        return self.degrees == (1,)

    def is_equal_degree(self, d: int) -> bool:
        return self.degrees == (d,)

    @property
    def is_line_conic(self) -> bool:
        return set(self.degrees) <= {1, 2}

    def __str__(self) -> str:
        names = {1: "line", 2: "conic"}
        parts = []
        for degree, count in self.groups:
            noun = names.get(degree, f"degree-{degree} curve")
            parts.append(f"{count} {noun}{'' if count == 1 else 's'}")
        return " + ".join(parts)


@dataclass(frozen=True)
class ArrangementClass:
    """Combinatorial class: composition plus t-vector.

    Realizability is never checked, and a class that violates the pair-count
    identity is still representable (see ``core.validate_identity``).
    """

    components: ComponentSpec
    t: TVector = field(default_factory=TVector)

    @classmethod
    def lines(cls, k: int, t: PairsLike = ()) -> "ArrangementClass":
        return cls(ComponentSpec.lines(k), TVector.of(t))

    @classmethod
    def equal_degree(cls, d: int, k: int, t: PairsLike = ()) -> "ArrangementClass":
        return cls(ComponentSpec.equal_degree(d, k), TVector.of(t))

    @classmethod
    def line_conic(cls, l: int, k: int, t: PairsLike = ()) -> "ArrangementClass":  # noqa: E741
        return cls(ComponentSpec.line_conic(l, k), TVector.of(t))

    @property
    def degree(self) -> int:
        return self.components.total_degree

    def __str__(self) -> str:
        return f"{self.components}, t={self.t}"


@dataclass(frozen=True)
class WeightVector:
    """Local branch weights a_1 <= ... <= a_n, each in [0, 1]."""

    weights: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.weights:
            raise WeightError("a weight vector needs at least one weight")
        weights = tuple(sorted(Fraction(w) for w in self.weights))
        for w in weights:
            if w < 0 or w > 1:
                raise WeightError(f"weights must lie in [0, 1], received {w}")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def equal(cls, alpha: Fraction, n: int) -> "WeightVector":
        return cls((Fraction(alpha),) * n)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    @property
    def largest(self) -> Fraction:
        return self.weights[-1]


@dataclass(frozen=True)
class LocalEulerValue:
    value: Fraction
    exact: bool  # False: value is only an upper bound


@dataclass(frozen=True)
class AlphaInterval:
    lo: Fraction
    hi: Fraction

    def __contains__(self, alpha: object) -> bool:
        if not isinstance(alpha, (int, Fraction)):
            return False
        return self.lo <= alpha <= self.hi

    def sample(self, steps: int) -> Tuple[Fraction, ...]:
        """Evenly spaced rationals lo + (hi - lo) * j / steps for j = 0..steps."""
        if steps <= 0:
            return (self.lo,)
        width = self.hi - self.lo
        return tuple(self.lo + width * Fraction(j, steps) for j in range(steps + 1))


class InequalityId(IntEnum):
    LANGER_LINES = 0
    LINE_CONIC = 1
    LINE_CONIC_PARAM = 2
    EQUAL_DEGREE = 3
    EQUAL_DEGREE_PARAM = 4
    HIRZEBRUCH_CLASSIC = 5
    HIRZEBRUCH_IMPROVED = 6
    PRSZ_LT = 7
    MIXED_DEGREE_PARAM = 8

    @property
    def is_parametric(self) -> bool:
        return self.name.endswith("_PARAM")

    @property
    def slug(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, text: str) -> "InequalityId":
        key = str(text).strip().upper().replace("-", "_")
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"Unknown inequality {text!r}; expected one of {', '.join(m.slug for m in cls)}") from None


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of one inequality; lhs/rhs are set only when applicable."""

    id: InequalityId
    applicable: bool
    reason: str = ""
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    alpha: Optional[Fraction] = None

    @classmethod
    def gated(cls, ident: InequalityId, reason: str, alpha: Optional[Fraction] = None) -> "InequalityReport":
        return cls(id=ident, applicable=False, reason=reason, alpha=alpha)

    @classmethod
    def evaluated(cls, ident: InequalityId, lhs: Fraction, rhs: Fraction,
                  alpha: Optional[Fraction] = None) -> "InequalityReport":
        return cls(id=ident, applicable=True, lhs=Fraction(lhs), rhs=Fraction(rhs), alpha=alpha)

    @property
    def slack(self) -> Optional[Fraction]:
        if not self.applicable or self.lhs is None or self.rhs is None:
            return None
        return self.lhs - self.rhs

    @property
    def equality(self) -> bool:
        return self.slack == 0

    @property
    def satisfied(self) -> bool:
        """Not-applicable reports are vacuously satisfied."""
        slack = self.slack
        return slack is None or slack >= 0

    @property
    def violated(self) -> bool:
        slack = self.slack
        return slack is not None and slack < 0


__all__ = [
    "TVector",
    "ComponentSpec",
    "ArrangementClass",
    "WeightVector",
    "LocalEulerValue",
    "AlphaInterval",
    "InequalityId",
    "InequalityReport",
]
