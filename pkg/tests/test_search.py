"""Tests for t-vector enumeration and the feasibility search."""
from __future__ import annotations

import dataclasses
import itertools
from math import comb

import pytest

import curvaudit.search as search_module
from curvaudit.core import catalog
from curvaudit.exceptions import SearchError
from curvaudit.models import ArrangementClass, InequalityId, TVector
from curvaudit.search import (
    CHUNK_SIZE,
    FilterPolicy,
    SearchMode,
    SearchSpec,
    classify,
    enumerate_tvectors,
    iter_search,
    iter_tvectors,
    search_feasible,
)
from tests.conftest import EXTREMAL_NAMES

ALL = tuple(InequalityId)


def _brute_force(pair_total, r_cap):
    """Every solution, ordered by descending (t_rcap, ..., t_3)."""
    high = list(range(r_cap, 2, -1))
    ranges = [range(pair_total // comb(r, 2), -1, -1) for r in high]
    found = []
    for counts in itertools.product(*ranges):
        used = sum(t * comb(r, 2) for r, t in zip(high, counts))
        if used <= pair_total:
            solution = dict(zip(high, counts))
            solution[2] = pair_total - used
            found.append(TVector.of(solution))
    return found


class TestEnumeration:
    @pytest.mark.parametrize("pair_total,r_cap,count", [(1, 2, 1), (3, 3, 2), (6, 4, 4), (0, 5, 1)])
    def test_counts(self, pair_total, r_cap, count):
        assert len(enumerate_tvectors(pair_total, r_cap)) == count

    def test_order_for_four_lines(self):
        assert [t.as_dict() for t in enumerate_tvectors(6, 4)] == [
            {4: 1},
            {3: 2},
            {3: 1, 2: 3},
            {2: 6},
        ]

    @pytest.mark.slow
    def test_matches_brute_force(self):
        """
        Given: every pair total up to 30 and every cap up to 8
        When: t-vectors are enumerated
        Then: the list equals a brute-force solution list in the same order
        """
        for pair_total in range(31):
            for r_cap in range(2, 9):
                assert enumerate_tvectors(pair_total, r_cap) == _brute_force(pair_total, r_cap), (pair_total, r_cap)

    @pytest.mark.parametrize("pair_total,r_cap", [(10, 5), (21, 7), (28, 3), (15, 2)])
    def test_pruning_changes_nothing(self, pair_total, r_cap):
        assert enumerate_tvectors(pair_total, r_cap, prune=False) == enumerate_tvectors(pair_total, r_cap)

    def test_every_candidate_satisfies_identity(self):
        for t in iter_tvectors(45, 6):
            assert sum(count * comb(r, 2) for r, count in t.items()) == 45
            assert (t.r_max() or 2) <= 6

    def test_is_lazy(self):
        stream = iter_tvectors(10**6, 50)
        assert next(stream).as_dict() == {50: 816, 28: 1, 7: 1, 2: 1}

    @pytest.mark.parametrize("pair_total,r_cap", [(-1, 3), (4, 1)])
    def test_invalid(self, pair_total, r_cap):
        with pytest.raises(SearchError):
            list(iter_tvectors(pair_total, r_cap))


class TestSearchSpec:
    def test_derived_values(self):
        spec = SearchSpec(SearchMode.LINE_CONIC, (2, 1))
        assert spec.degree == 4
        assert spec.pair_total == 5
        assert spec.effective_r_cap == 4

    def test_filters_sorted_and_deduplicated(self):
        spec = SearchSpec(
            SearchMode.LINES, (4,), filters=(InequalityId.PRSZ_LT, InequalityId.LANGER_LINES, InequalityId.PRSZ_LT)
        )
        assert spec.filters == (InequalityId.LANGER_LINES, InequalityId.PRSZ_LT)

    def test_effective_r_cap(self):
        langer = (InequalityId.LANGER_LINES,)
        assert SearchSpec(SearchMode.LINES, (5,), filters=langer, policy=FilterPolicy.REQUIRE).effective_r_cap == 3
        assert SearchSpec(SearchMode.LINES, (5,), filters=langer).effective_r_cap == 5
        assert SearchSpec(SearchMode.LINES, (5,), r_cap=10).effective_r_cap == 5
        classic = (InequalityId.HIRZEBRUCH_CLASSIC,)
        assert SearchSpec(SearchMode.LINES, (5,), filters=classic, policy=FilterPolicy.REQUIRE).effective_r_cap == 5

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"mode": SearchMode.LINES, "params": (4, 1)},
            {"mode": SearchMode.EQUAL_DEGREE, "params": (2,)},
            {"mode": SearchMode.LINES, "params": (-4,)},
            {"mode": SearchMode.LINES, "params": (0,)},
            {"mode": SearchMode.LINE_CONIC, "params": (0, 0)},
            {"mode": SearchMode.LINES, "params": (4,), "r_cap": 1},
            {"mode": SearchMode.LINES, "params": (4,), "limit": 0},
            {"mode": SearchMode.LINES, "params": (4,), "workers": 0},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(SearchError):
            SearchSpec(**kwargs)

    def test_policy_parse(self):
        assert FilterPolicy.parse("REQUIRE") is FilterPolicy.REQUIRE
        with pytest.raises(SearchError):
            FilterPolicy.parse("maybe")


class TestClassify:
    def test_catalog_survives_every_filter(self):
        for name in EXTREMAL_NAMES:
            assert classify(catalog(name), ALL) is None, name

    def test_first_killer_in_canonical_order(self):
        three_triples = ArrangementClass.lines(5, {3: 3, 2: 1})
        assert classify(three_triples, (InequalityId.EQUAL_DEGREE, InequalityId.LANGER_LINES)) is (
            InequalityId.LANGER_LINES
        )

    def test_require_policy(self):
        pencil = catalog("pencil", 5)
        assert classify(pencil, (InequalityId.LANGER_LINES,)) is None
        assert classify(pencil, (InequalityId.LANGER_LINES,), FilterPolicy.REQUIRE) is InequalityId.LANGER_LINES


class TestSearchFeasible:
    def test_three_lines(self):
        result = search_feasible(SearchSpec(SearchMode.LINES, (3,), filters=ALL))
        assert result.examined == 2
        assert len(result.survivors) == 2

    def test_five_lines_require(self):
        spec = SearchSpec(
            SearchMode.LINES, (5,), filters=(InequalityId.LANGER_LINES,), policy=FilterPolicy.REQUIRE
        )
        result = search_feasible(spec)
        assert result.examined == 4
        assert [a.t.as_dict() for a in result.survivors] == [{3: 2, 2: 4}, {3: 1, 2: 7}, {2: 10}]
        assert result.eliminated_by == {InequalityId.LANGER_LINES: 1}

    def test_two_conics(self):
        spec = SearchSpec(SearchMode.EQUAL_DEGREE, (2, 2), filters=(InequalityId.EQUAL_DEGREE,))
        survivors = search_feasible(spec).survivors
        assert ArrangementClass.equal_degree(2, 2, {2: 4}) in survivors

    def test_no_filters_keeps_everything(self):
        result = search_feasible(SearchSpec(SearchMode.LINES, (4,)))
        assert result.examined == 4
        assert result.eliminated == 0

    @pytest.mark.parametrize("name,k,r_max", [("hesse", 12, 4), ("klein", 21, 4), ("icosahedron", 15, 5)])
    def test_extremal_classes_found(self, name, k, r_max):
        spec = SearchSpec(SearchMode.LINES, (k,), r_cap=r_max, filters=(InequalityId.LANGER_LINES,))
        assert catalog(name) in search_feasible(spec).survivors

    def test_examined_accounts_for_everything(self):
        for spec in (
            SearchSpec(SearchMode.LINES, (8,), filters=ALL),
            SearchSpec(SearchMode.LINE_CONIC, (3, 2), filters=ALL, policy=FilterPolicy.REQUIRE),
            SearchSpec(SearchMode.EQUAL_DEGREE, (3, 3), filters=(InequalityId.PRSZ_LT,)),
        ):
            result = search_feasible(spec)
            assert result.examined == len(result.survivors) + result.eliminated
            assert result.examined == len(enumerate_tvectors(spec.pair_total, spec.effective_r_cap))
            assert not result.truncated

    def test_workers_do_not_change_the_stream(self):
        spec = SearchSpec(SearchMode.LINES, (9,), filters=ALL)
        sequential = list(iter_search(spec))
        threaded = list(iter_search(dataclasses.replace(spec, workers=4)))
        assert threaded == sequential

    def test_limit(self):
        spec = SearchSpec(SearchMode.LINES, (21,), filters=(InequalityId.LANGER_LINES,), limit=5)
        first = search_feasible(spec)
        second = search_feasible(spec)
        assert len(first.survivors) == 5
        assert first.truncated
        assert first.survivors == second.survivors
        assert first.examined >= 5

    def test_limit_not_reached(self):
        result = search_feasible(SearchSpec(SearchMode.LINES, (4,), limit=4))
        assert len(result.survivors) == 4
        assert not result.truncated

    def test_callback_sees_every_outcome(self):
        seen = []
        spec = SearchSpec(SearchMode.LINES, (6,), filters=ALL)
        result = search_feasible(spec, on_outcome=seen.append)
        assert len(seen) == result.examined
        assert [o.arrangement for o in seen if o.survived] == result.survivors

    def test_threaded_limit_stops_early(self, monkeypatch):
        """
        Given: a limited search over a large candidate space
        When: it runs with one worker and with several
        Then: both return the same survivors and the threaded run classifies at most a window more candidates
        """
        calls = []

        def counting_classify(arrangement, filters, policy=FilterPolicy.PASS):
            calls.append(arrangement)
            return classify(arrangement, filters, policy)

        monkeypatch.setattr(search_module, "classify", counting_classify)
        spec = SearchSpec(SearchMode.LINES, (18,), filters=(InequalityId.LANGER_LINES,), limit=1)
        sequential = search_feasible(spec)
        sequential_calls = len(calls)
        calls.clear()
        workers = 2
        threaded = search_feasible(dataclasses.replace(spec, workers=workers))
        assert threaded.survivors == sequential.survivors
        assert threaded.truncated and sequential.truncated
        assert len(calls) <= sequential_calls + (workers + 1) * CHUNK_SIZE

    def test_threaded_stream_matches_on_uneven_chunks(self):
        spec = SearchSpec(SearchMode.LINE_CONIC, (5, 2), filters=ALL, workers=3)
        assert list(iter_search(spec)) == list(iter_search(dataclasses.replace(spec, workers=1)))
