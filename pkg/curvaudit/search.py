"""Feasibility search over t-vectors.

Candidates are the nonnegative solutions of sum_r t_r C(r, 2) = pair_total for
the pair count of the chosen composition. Each candidate is run through the
selected inequalities in canonical order and attributed to the first one that
kills it. No realizability pruning is done, so the candidate set over-counts
what line combinatorics allows.
"""
from __future__ import annotations

import itertools
import logging
import math
from collections import deque
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Deque, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .core import pair_count, require_identity
from .exceptions import InvalidArrangementError, SearchError
from .inequalities import check_inequality
from .models import ArrangementClass, ComponentSpec, InequalityId, TVector

logger = logging.getLogger(__name__)

# Inequalities whose hypothesis includes r_max <= 2D/3 (or the equivalent non-empty alpha interval).
MULTIPLICITY_GATED = frozenset(
    {
        InequalityId.LANGER_LINES,
        InequalityId.LINE_CONIC,
        InequalityId.LINE_CONIC_PARAM,
        InequalityId.EQUAL_DEGREE,
        InequalityId.EQUAL_DEGREE_PARAM,
        InequalityId.MIXED_DEGREE_PARAM,
    }
)

# Candidates per work item when several workers classify in parallel.
CHUNK_SIZE = 32


class SearchMode(Enum):
    LINES = "lines"
    EQUAL_DEGREE = "equal_degree"
    LINE_CONIC = "line_conic"

    @property
    def arity(self) -> int:
        return 1 if self is SearchMode.LINES else 2


class FilterPolicy(Enum):
    PASS = "pass"  # a not-applicable filter lets the candidate through
    REQUIRE = "require"  # a not-applicable filter eliminates the candidate

    @classmethod
    def parse(cls, text: str) -> "FilterPolicy":
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            raise SearchError(f"Unknown filter policy {text!r}; expected pass or require") from None


@dataclass(frozen=True)
class SearchSpec:
    mode: SearchMode
    params: Tuple[int, ...]
    r_cap: Optional[int] = None
    filters: Tuple[InequalityId, ...] = ()
    limit: Optional[int] = None
    policy: FilterPolicy = FilterPolicy.PASS
    workers: int = 1

    def __post_init__(self) -> None:
        params = tuple(self.params)
        if len(params) != self.mode.arity:
            raise SearchError(f"{self.mode.value} takes {self.mode.arity} parameter(s), received {len(params)}")
        if any(isinstance(p, bool) or not isinstance(p, int) or p < 0 for p in params):
            raise SearchError(f"search parameters must be nonnegative integers, received {params}")
        if self.r_cap is not None and self.r_cap < 2:
            raise SearchError(f"r_cap must be >= 2, received {self.r_cap}")
        if self.limit is not None and self.limit < 1:
            raise SearchError(f"limit must be >= 1, received {self.limit}")
        if self.workers < 1:
            raise SearchError(f"workers must be >= 1, received {self.workers}")
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "filters", tuple(sorted(set(self.filters))))
        _ = self.components  # raises SearchError for an empty composition

    @property
    def components(self) -> ComponentSpec:
        try:
            if self.mode is SearchMode.LINES:
                return ComponentSpec.lines(self.params[0])
            if self.mode is SearchMode.EQUAL_DEGREE:
                return ComponentSpec.equal_degree(*self.params)
            return ComponentSpec.line_conic(*self.params)
        except InvalidArrangementError as exc:
            raise SearchError(f"invalid {self.mode.value} composition {self.params}: {exc}") from exc

    @property
    def degree(self) -> int:
        return self.components.total_degree

    @property
    def pair_total(self) -> int:
        return pair_count(ArrangementClass(self.components))

    @property
    def effective_r_cap(self) -> int:
        """min(user cap, D), lowered to floor(2D/3) when REQUIRE meets a multiplicity-gated filter."""
        cap = self.degree
        if self.r_cap is not None:
            cap = min(cap, self.r_cap)
        if self.policy is FilterPolicy.REQUIRE and MULTIPLICITY_GATED.intersection(self.filters):
            cap = min(cap, 2 * self.degree // 3)
        return max(cap, 2)


@dataclass(frozen=True)
class SearchOutcome:
    arrangement: ArrangementClass
    killer: Optional[InequalityId] = None

    @property
    def survived(self) -> bool:
        return self.killer is None


@dataclass
class SearchResult:
    survivors: List[ArrangementClass] = field(default_factory=list)
    examined: int = 0
    eliminated_by: Dict[InequalityId, int] = field(default_factory=dict)
    truncated: bool = False

    @property
    def eliminated(self) -> int:
        return sum(self.eliminated_by.values())

    def record(self, outcome: SearchOutcome) -> None:
        self.examined += 1
        if outcome.killer is None:
            self.survivors.append(outcome.arrangement)
        else:
            self.eliminated_by[outcome.killer] = self.eliminated_by.get(outcome.killer, 0) + 1


Branch = Tuple[int, int, Tuple[Tuple[int, int], ...]]


def _largest_fitting(pair_total: int) -> int:
    """Largest r with C(r, 2) <= pair_total (1 when nothing fits)."""
    return (1 + math.isqrt(1 + 8 * pair_total)) // 2


def _walk(r: int, remaining: int, prefix: Tuple[Tuple[int, int], ...], bound: int, prune: bool) -> Iterator[TVector]:
    if r <= 2:
        if r == 2 and remaining >= 0:
            yield TVector.of(prefix + ((2, remaining),))
        elif remaining == 0:
            yield TVector.of(prefix)
        return
    cost = math.comb(r, 2)
    top = (remaining if prune else bound) // cost
    for t in range(max(top, 0), -1, -1):
        yield from _walk(r - 1, remaining - t * cost, prefix + ((r, t),), bound, prune)


def _branches(pair_total: int, r_cap: int, prune: bool) -> List[Branch]:
    """Top-level DFS branches (one per value of the highest multiplicity), in canonical order."""
    r_top = min(r_cap, _largest_fitting(pair_total)) if prune else r_cap
    if r_top <= 2:
        return [(r_top, pair_total, ())]
    cost = math.comb(r_top, 2)
    return [(r_top - 1, pair_total - t * cost, ((r_top, t),)) for t in range(pair_total // cost, -1, -1)]


def _walk_branch(branch: Branch, pair_total: int, prune: bool) -> Iterator[TVector]:
    r, remaining, prefix = branch
    return _walk(r, remaining, prefix, pair_total, prune)


def _check_args(pair_total: int, r_cap: int) -> None:
    if pair_total < 0:
        raise SearchError(f"pair_total must be >= 0, received {pair_total}")
    if r_cap < 2:
        raise SearchError(f"r_cap must be >= 2, received {r_cap}")


def iter_tvectors(pair_total: int, r_cap: int, prune: bool = True) -> Iterator[TVector]:
    """Lazily yield every t-vector with sum t_r C(r, 2) = pair_total and t_r = 0 for r > r_cap.

    Order is lexicographic by descending r: larger high-multiplicity counts first.
    With ``prune`` False every count up to pair_total // C(r, 2) is tried and
    overshooting branches are dropped only at the leaves.
    """
    _check_args(pair_total, r_cap)
    for branch in _branches(pair_total, r_cap, prune):
        yield from _walk_branch(branch, pair_total, prune)


def enumerate_tvectors(pair_total: int, r_cap: int, prune: bool = True) -> List[TVector]:
    return list(iter_tvectors(pair_total, r_cap, prune))


def classify(
    arrangement: ArrangementClass, filters: Sequence[InequalityId], policy: FilterPolicy = FilterPolicy.PASS
) -> Optional[InequalityId]:
    """First filter that eliminates the class, or None when it survives all of them."""
    for ident in sorted(filters):
        report = check_inequality(arrangement, ident)
        if report.violated:
            return ident
        if not report.applicable and policy is FilterPolicy.REQUIRE:
            return ident
    return None


def _outcomes(spec: SearchSpec, tvectors: Iterable[TVector]) -> Iterator[SearchOutcome]:
    components = spec.components
    for t in tvectors:
        candidate = ArrangementClass(components, t)
        require_identity(candidate)
        yield SearchOutcome(candidate, classify(candidate, spec.filters, spec.policy))


def _chunk_outcomes(spec: SearchSpec, chunk: List[TVector]) -> List[SearchOutcome]:
    return list(_outcomes(spec, chunk))


def _chunks(tvectors: Iterator[TVector], size: int) -> Iterator[List[TVector]]:
    while True:
        chunk = list(itertools.islice(tvectors, size))
        if not chunk:
            return
        yield chunk


def iter_search(spec: SearchSpec) -> Iterator[SearchOutcome]:
    """Stream (candidate, killer) outcomes in canonical order.

    With several workers, consecutive chunks of candidates are classified by a
    thread pool. At most ``workers`` chunks are in flight and results are
    replayed in submission order, so the stream is the same as the sequential
    one and closing it early stops further submissions.
    """
    pair_total = spec.pair_total
    r_cap = spec.effective_r_cap
    logger.debug(f"Searching {spec.components}: pair total {pair_total}, r_cap {r_cap}, policy {spec.policy.value}")
    tvectors = iter_tvectors(pair_total, r_cap)
    if spec.workers == 1:
        yield from _outcomes(spec, tvectors)
        return
    chunks = _chunks(tvectors, CHUNK_SIZE)
    with ThreadPoolExecutor(max_workers=spec.workers) as pool:
        pending: Deque["Future[List[SearchOutcome]]"] = deque(
            pool.submit(_chunk_outcomes, spec, chunk) for chunk in itertools.islice(chunks, spec.workers)
        )
        try:
            while pending:
                outcomes = pending.popleft().result()
                chunk = next(chunks, None)
                if chunk is not None:
                    pending.append(pool.submit(_chunk_outcomes, spec, chunk))
                yield from outcomes
        finally:
            for future in pending:
                future.cancel()


def search_feasible(
    spec: SearchSpec, on_outcome: Optional[Callable[[SearchOutcome], None]] = None
) -> SearchResult:
    """Run the search; with a limit, stop at the limit-th survivor and flag truncation if more candidates remain.

    ``on_outcome`` sees every recorded outcome as soon as it is known.
    """
    result = SearchResult()
    stream = iter_search(spec)
    for outcome in stream:
        result.record(outcome)
        if on_outcome is not None:
            on_outcome(outcome)
        if spec.limit is not None and len(result.survivors) >= spec.limit:
            result.truncated = next(stream, None) is not None
            break
    stream.close()
    if result.truncated:
        logger.warning(f"Search stopped at {spec.limit} survivors after {result.examined} candidates")
    logger.info(
        f"Examined {result.examined} candidates: {len(result.survivors)} survivors, {result.eliminated} eliminated"
    )
    return result


__all__ = [
    "MULTIPLICITY_GATED",
    "CHUNK_SIZE",
    "SearchMode",
    "FilterPolicy",
    "SearchSpec",
    "SearchOutcome",
    "SearchResult",
    "iter_tvectors",
    "enumerate_tvectors",
    "classify",
    "iter_search",
    "search_feasible",
]
