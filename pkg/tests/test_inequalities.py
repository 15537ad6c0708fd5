"""Tests for the Hirzebruch-type inequalities and the audit."""
from __future__ import annotations

from fractions import Fraction

import pytest

from curvaudit.core import catalog
from curvaudit.exceptions import AlphaOutOfRangeError
from curvaudit.inequalities import (
    audit,
    chain_coefficients,
    check_equal_degree,
    check_equal_degree_parametric,
    check_hirzebruch_classic,
    check_hirzebruch_improved,
    check_inequality,
    check_langer_lines,
    check_line_conic,
    check_line_conic_parametric,
    check_mixed_degree_parametric,
    check_prsz_lt,
)
from curvaudit.models import ArrangementClass, InequalityId
from curvaudit.orbifold import alpha_interval, canonical_alpha, lmy_lhs_bound, lmy_rhs, try_alpha_interval
from tests.conftest import random_valid_class

F = Fraction


def _sides(report):
    return report.lhs, report.rhs


class TestLangerLines:
    def test_klein_and_wiman_equality(self, klein, wiman):
        assert _sides(check_langer_lines(klein)) == (21, 21)
        assert _sides(check_langer_lines(wiman)) == (90, 90)
        assert check_langer_lines(wiman).equality

    def test_generic_six(self, generic_six):
        report = check_langer_lines(generic_six)
        assert _sides(report) == (15, 6)
        assert report.slack == 9

    def test_pencil_gated(self):
        report = check_langer_lines(catalog("pencil", 4))
        assert not report.applicable
        assert report.lhs is None and report.slack is None
        assert report.satisfied and not report.violated
        assert "t_4" in report.reason

    def test_not_lines(self):
        assert not check_langer_lines(ArrangementClass.equal_degree(2, 2, {2: 4})).applicable

    def test_equality_list(self, extremal_classes):
        """Every listed extremal arrangement has slack exactly 0."""
        for name, arrangement in extremal_classes.items():
            report = check_langer_lines(arrangement)
            assert report.applicable, name
            assert report.slack == 0, name

    def test_six_lines_quadruple_point(self):
        report = check_langer_lines(ArrangementClass.lines(6, {4: 1, 2: 9}))
        assert report.applicable
        assert _sides(report) == (9, 6)
        assert report.slack == 3


class TestLineConic:
    @pytest.mark.parametrize(
        "lines,conics,t,lhs,rhs",
        [(1, 1, {2: 2}, 4, 1), (2, 1, {2: 5}, 9, 2), (0, 2, {2: 4}, 12, 0)],
    )
    def test_examples(self, lines, conics, t, lhs, rhs):
        report = check_line_conic(ArrangementClass.line_conic(lines, conics, t))
        assert _sides(report) == (lhs, rhs)

    def test_needs_a_conic(self, klein):
        report = check_line_conic(klein)
        assert not report.applicable
        assert "conic" in report.reason

    def test_cubics_gated(self):
        assert not check_line_conic(ArrangementClass.equal_degree(3, 2, {2: 9})).applicable

    def test_parametric_examples(self):
        one_one = ArrangementClass.line_conic(1, 1, {2: 2})
        assert _sides(check_line_conic_parametric(one_one, 1)) == (4, 1)
        two_one = ArrangementClass.line_conic(2, 1, {2: 5})
        report = check_line_conic_parametric(two_one, F(3, 4))
        assert _sides(report) == (9, 2)
        assert report.alpha == F(3, 4)

    def test_parametric_alpha_out_of_range(self):
        two_one = ArrangementClass.line_conic(2, 1, {2: 5})
        with pytest.raises(AlphaOutOfRangeError):
            check_line_conic_parametric(two_one, F(1, 2))


class TestEqualDegree:
    @pytest.mark.parametrize("d,k,t,lhs", [(2, 2, {2: 4}, 12), (3, 2, {2: 9}, 63)])
    def test_examples(self, d, k, t, lhs):
        report = check_equal_degree(ArrangementClass.equal_degree(d, k, t))
        assert _sides(report) == (lhs, 0)

    def test_klein_as_degree_one(self, klein):
        report = check_equal_degree(klein)
        assert _sides(report) == (0, 0)
        assert report.equality

    def test_mixed_degrees_gated(self):
        assert not check_equal_degree(ArrangementClass.line_conic(1, 1, {2: 2})).applicable

    def test_parametric_examples(self, klein):
        conics = ArrangementClass.equal_degree(2, 2, {2: 4})
        report = check_equal_degree_parametric(conics, F(3, 4))
        assert _sides(report) == (20, 8)
        assert report.slack == 12
        assert _sides(check_equal_degree_parametric(klein, F(1, 7))) == (21, 21)

    def test_degree_one_term_vanishes(self, klein):
        interval = alpha_interval(klein)
        sides = {_sides(check_equal_degree_parametric(klein, alpha)) for alpha in interval.sample(5)}
        assert sides == {(21, 21)}

    def test_reduces_to_langer_at_degree_one(self, rng):
        """
        Given: random line classes
        When: the equal-degree inequality is evaluated with d = 1
        Then: it has the same applicability and slack as the line inequality
        """
        for _ in range(100):
            arrangement = random_valid_class(rng, "lines")
            langer = check_langer_lines(arrangement)
            equal = check_equal_degree(arrangement)
            assert langer.applicable == equal.applicable
            assert langer.slack == equal.slack


class TestHirzebruch:
    def test_klein(self, klein):
        assert check_hirzebruch_classic(klein).slack == 7
        assert check_hirzebruch_improved(klein).equality

    def test_wiman(self, wiman):
        assert _sides(check_hirzebruch_classic(wiman)) == (120, 81)
        assert check_hirzebruch_classic(wiman).slack == 39
        assert _sides(check_hirzebruch_improved(wiman)) == (90, 81)

    def test_icosahedron(self):
        report = check_hirzebruch_improved(catalog("icosahedron"))
        assert _sides(report) == (F(45, 2), 21)
        assert report.slack == F(3, 2)

    def test_few_lines_gated(self):
        report = check_hirzebruch_classic(catalog("generic_lines", 5))
        assert not report.applicable
        assert "k >= 6" in report.reason

    def test_near_pencil_gated(self):
        # 7 lines, 6 through one point: t_6 = 1, t_2 = 6.
        near_pencil = ArrangementClass.lines(7, {6: 1, 2: 6})
        assert not check_hirzebruch_classic(near_pencil).applicable
        assert not check_hirzebruch_improved(near_pencil).applicable


class TestPrszLt:
    def test_examples(self):
        report = check_prsz_lt(ArrangementClass.equal_degree(2, 2, {2: 4}))
        assert _sides(report) == (14, 0)
        assert report.slack == 14
        assert _sides(check_prsz_lt(ArrangementClass.equal_degree(2, 3, {2: 12}))) == (27, 0)

    def test_lines_gated(self, klein):
        assert not check_prsz_lt(klein).applicable

    def test_point_on_every_curve_gated(self):
        # Three conics through 4 common points, no further intersections.
        assert not check_prsz_lt(ArrangementClass.equal_degree(2, 3, {3: 4})).applicable


class TestChain:
    @pytest.mark.parametrize("r", range(5, 101))
    def test_termwise(self, r):
        quadratic, improved, classic = chain_coefficients(r)
        assert quadratic >= improved >= classic

    def test_slack_ordering(self, rng):
        checked = 0
        for _ in range(2000):
            arrangement = random_valid_class(rng, "lines", max_count=16)
            reports = [
                check(arrangement)
                for check in (check_langer_lines, check_hirzebruch_improved, check_hirzebruch_classic, check_equal_degree)
            ]
            if not all(report.applicable for report in reports):
                continue
            langer, improved, classic, _ = reports
            assert langer.rhs >= improved.rhs >= classic.rhs
            assert classic.lhs >= langer.lhs
            assert langer.slack <= improved.slack <= classic.slack
            checked += 1
        assert checked > 0


class TestParametricSpecialization:
    def test_canonical_alpha_reproduces_fixed_forms(self, rng):
        for mode, fixed, parametric in (
            ("line_conic", InequalityId.LINE_CONIC, InequalityId.LINE_CONIC_PARAM),
            ("equal_degree", InequalityId.EQUAL_DEGREE, InequalityId.EQUAL_DEGREE_PARAM),
        ):
            for _ in range(100):
                arrangement = random_valid_class(rng, mode)
                if try_alpha_interval(arrangement) is None:
                    continue
                fixed_report = check_inequality(arrangement, fixed)
                param_report = check_inequality(arrangement, parametric)
                assert param_report.alpha == canonical_alpha(arrangement)
                assert fixed_report.applicable and param_report.applicable
                assert fixed_report.slack == param_report.slack

    def test_mixed_form_reduces(self, rng):
        for mode, parametric in (
            ("line_conic", check_line_conic_parametric),
            ("equal_degree", check_equal_degree_parametric),
        ):
            for _ in range(100):
                arrangement = random_valid_class(rng, mode)
                interval = try_alpha_interval(arrangement)
                if interval is None:
                    continue
                for alpha in interval.sample(3):
                    assert parametric(arrangement, alpha).slack == check_mixed_degree_parametric(arrangement, alpha).slack

    def test_slack_is_orbifold_gap_over_alpha_squared(self, rng):
        """
        Given: random consistent classes with a non-empty alpha interval
        When: the mixed-degree parametric inequality is evaluated at alpha
        Then: its slack is (lmy_rhs - lmy_lhs_bound) / alpha^2 exactly
        """
        checked = 0
        while checked < 150:
            arrangement = random_valid_class(rng, rng.choice(["lines", "equal_degree", "line_conic", "mixed"]))
            interval = try_alpha_interval(arrangement)
            if interval is None:
                continue
            for alpha in interval.sample(3):
                gap = lmy_rhs(arrangement, alpha) - lmy_lhs_bound(arrangement, alpha)
                assert check_mixed_degree_parametric(arrangement, alpha).slack == gap / alpha**2
            checked += 1


class TestCheckInequality:
    def test_empty_interval_gates_parametric(self):
        report = check_inequality(catalog("pencil", 4), InequalityId.MIXED_DEGREE_PARAM)
        assert not report.applicable
        assert "alpha interval empty" in report.reason

    def test_explicit_alpha_out_of_range_raises(self, klein):
        with pytest.raises(AlphaOutOfRangeError):
            check_inequality(klein, InequalityId.EQUAL_DEGREE_PARAM, F(1, 10))

    def test_shape_gate_precedes_alpha(self, klein):
        report = check_inequality(klein, InequalityId.LINE_CONIC_PARAM, F(1, 10))
        assert not report.applicable

    @pytest.mark.parametrize("ident", list(InequalityId))
    def test_dispatch_covers_every_id(self, klein, ident):
        assert check_inequality(klein, ident).id is ident

    def test_fixed_forms_ignore_alpha(self, klein):
        # 1/10 lies outside klein's interval; only parametric forms look at it.
        report = check_inequality(klein, InequalityId.LANGER_LINES, F(1, 10))
        assert (report.lhs, report.rhs) == (21, 21)
        assert [ident for ident in InequalityId if ident.is_parametric] == [
            InequalityId.LINE_CONIC_PARAM,
            InequalityId.EQUAL_DEGREE_PARAM,
            InequalityId.MIXED_DEGREE_PARAM,
        ]

    def test_parse_ids(self):
        assert InequalityId.parse("langer-lines") is InequalityId.LANGER_LINES
        assert InequalityId.parse("PRSZ_LT") is InequalityId.PRSZ_LT
        assert InequalityId.EQUAL_DEGREE_PARAM.is_parametric
        with pytest.raises(ValueError):
            InequalityId.parse("bojanowski")


class TestAudit:
    def test_klein(self, klein):
        result = audit(klein)
        assert [report.id for report in result.reports] == list(InequalityId)
        assert result.identity_valid
        assert result.euler == -77
        assert result.report(InequalityId.LANGER_LINES).equality
        assert result.report(InequalityId.HIRZEBRUCH_CLASSIC).slack == 7
        assert result.report(InequalityId.HIRZEBRUCH_IMPROVED).equality
        assert result.report(InequalityId.EQUAL_DEGREE).equality
        assert not result.report(InequalityId.LINE_CONIC).applicable
        assert result.report(InequalityId.EQUAL_DEGREE_PARAM).alpha == F(1, 7)
        assert not result.ruled_out
        assert result.global_check is None

    def test_klein_with_alpha(self, klein):
        result = audit(klein, F(1, 7))
        assert result.global_check is not None
        assert result.global_check.equality
        assert not result.ruled_out

    def test_alpha_out_of_range_is_reported(self, klein):
        result = audit(klein, F(9, 10))
        assert not result.report(InequalityId.EQUAL_DEGREE_PARAM).applicable
        assert result.global_check is None
        assert "outside" in result.global_error
        assert not result.ruled_out

    def test_single_conic(self):
        result = audit(ArrangementClass.equal_degree(2, 1))
        assert result.identity_valid
        assert result.interval is None
        assert result.euler == 2
        assert not result.violations
        assert result.report(InequalityId.EQUAL_DEGREE).slack == 0

    def test_six_lines_quadruple_point(self):
        result = audit(ArrangementClass.lines(6, {4: 1, 2: 9}))
        assert result.report(InequalityId.LANGER_LINES).slack == 3
        assert not result.ruled_out

    def test_identity_violation_rules_out(self):
        result = audit(ArrangementClass.lines(3, {2: 2}))
        assert not result.identity_valid
        assert (result.incidence, result.pairs) == (2, 3)
        assert result.euler is None
        assert result.ruled_out

    def test_violation_rules_out(self):
        # 5 lines with three triple points: t_2 + 3/4 t_3 = 13/4 < 5.
        result = audit(ArrangementClass.lines(5, {3: 3, 2: 1}))
        assert result.report(InequalityId.LANGER_LINES).violated
        assert result.ruled_out

    def test_catalog_never_ruled_out(self, extremal_classes):
        for name, arrangement in extremal_classes.items():
            assert not audit(arrangement).ruled_out, name
