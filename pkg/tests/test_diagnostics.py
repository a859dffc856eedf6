from __future__ import annotations

import math

import mpmath as mp
import pytest

from zerocert.diagnostics import (
    explicit_formula_check,
    guard_report,
    hecke_cutoff_params,
    recommend_cutoff,
    zeta_counting_bounds,
    zeta_zero_sum_tails,
)
from zerocert.errors import DomainError, HypothesisViolation
from zerocert.lfunc import ZeroList, elliptic_descriptor, gaussian_descriptor, zeta_descriptor
from zerocert.testfn import TestWindow, fhat_eval


class TestCutoffs:
    def test_zeta_window_at_a_million(self):
        expect = 2.5 / math.pi * (math.log(math.log(1e6)) + 1.1)
        assert recommend_cutoff("zeta-ab", 1e6, h=2.5) == pytest.approx(expect, rel=1e-15)
        assert recommend_cutoff("zeta-ab", 1e6, h=2.5) == pytest.approx(2.964891, abs=1e-6)

    def test_zeta_initial_segment(self):
        assert recommend_cutoff("zeta-r", 100.0, h=2.5) == pytest.approx(2.5 / math.pi * (math.log(math.log(100)) + 0.4))

    def test_elliptic(self):
        assert recommend_cutoff("elliptic", 20.0, N=11) == pytest.approx(math.log(math.log(4400)) + 3)

    def test_hecke_from_descriptor(self):
        params = hecke_cutoff_params(gaussian_descriptor())
        assert params["N"] == 2 and params["Qprime"] == pytest.approx(gaussian_descriptor().Q + math.e)
        c = recommend_cutoff("hecke", 30.0, **params)
        assert c == pytest.approx(math.log(math.log(30 + params["A"])) + math.log(math.log(params["Qprime"]))
                                  + math.log(2) + 3)

    @pytest.mark.parametrize("family,params", [
        ("zeta-ab", {"h": 2.5}), ("zeta-r", {"h": 2.0}), ("elliptic", {"N": 11}), ("general", {"h": 2.0, "Q": 1.0}),
    ])
    def test_increasing_in_height(self, family, params):
        values = [recommend_cutoff(family, X, **params) for X in (20.0, 1e3, 1e6, 1e10)]
        assert values == sorted(values)

    def test_undefined_at_small_height(self):
        with pytest.raises(DomainError):
            recommend_cutoff("elliptic", 0.0, N=11)
        with pytest.raises(DomainError):
            recommend_cutoff("zeta-ab", 1.0, h=2.5)

    def test_missing_parameter_and_unknown_family(self):
        with pytest.raises(DomainError, match="h"):
            recommend_cutoff("zeta-ab", 100.0)
        with pytest.raises(DomainError):
            recommend_cutoff("siegel", 100.0)


class TestGuardReport:
    def test_truncated_list_reports_both_deficits(self, zeta_1000):
        cut = zeta_1000.between(1000.0, 1020.0)
        rep = guard_report("zeta-ab", 1000.0, 1020.0, cut, h=2.5)
        c = recommend_cutoff("zeta-ab", 1000.0, h=2.5)
        assert rep.cutoff_a == pytest.approx(c)
        assert rep.deficit_lo == pytest.approx(cut.ordinates[0] - (1000.0 - c))
        assert rep.deficit_hi > 0

    def test_full_fixture_has_no_deficit(self, zeta_1000):
        rep = guard_report("zeta-ab", 1000.0, 1020.0, zeta_1000, h=2.5)
        assert rep.deficit_lo == 0.0 and rep.deficit_hi == 0.0

    def test_initial_segment_needs_nothing_below(self, zeta_103):
        rep = guard_report("zeta-r", 0.0, 100.0, zeta_103, h=2.5)
        assert rep.required_lo is None and rep.deficit_lo is None
        # measured from the last listed ordinate, not from how far the list is complete
        assert rep.deficit_hi == pytest.approx(100.0 + rep.cutoff_b - zeta_103.ordinates[-1])

    def test_empty_list(self):
        rep = guard_report("zeta-ab", 1000.0, 1020.0, ZeroList((), 0.0), h=2.5)
        assert rep.deficit_lo == math.inf
        assert rep.to_dict()["list_range"] == [None, None]

    def test_undefined_cutoff_is_none(self):
        rep = guard_report("elliptic", 0.0, 20.0, None, N=11)
        assert rep.cutoff_a is None and rep.cutoff_b is not None


class TestZetaCounting:
    @pytest.mark.parametrize("T", [20.0, 100.0, 103.0, 500.0, 1000.0])
    def test_brackets_true_count(self, T):
        g, r1 = zeta_counting_bounds(T)
        with mp.workdps(15):
            n = mp.nzeros(T)
        assert abs(n - g) <= r1

    def test_fixture_cardinality(self, zeta_103):
        g, r1 = zeta_counting_bounds(100.0)
        n = zeta_103.count_between(0.0, 100.0)
        assert n == 29
        assert abs(n - g) <= r1

    def test_domain(self):
        with pytest.raises(DomainError):
            zeta_counting_bounds(2.0)


class TestZetaTails:
    def test_formula_values(self):
        up, neg, pos = zeta_zero_sum_tails(0.0, 100.0, 2.5, None, 110.0)
        k = math.pi / 2.5
        assert up == pytest.approx(math.exp(-10 * k) * ((0.143 + 0.033 * 2.5) * math.log(110)
                                                         + 0.354 * math.log(math.log(110)) + 3.3))
        assert neg == 1e-4 and pos == 0.0

    def test_upper_tail_dominates_fixture_mass(self, zeta_1000):
        w = TestWindow(1000.0, 1010.0, 2.5)
        up, _, pos = zeta_zero_sum_tails(1000.0, 1010.0, 2.5, 995.0, 1015.0)
        above = sum(fhat_eval(w, g) for g in zeta_1000 if g > 1015.0)
        below = sum(fhat_eval(w, g) for g in zeta_1000 if g < 995.0)
        assert 0 < above <= up
        assert 0 < below <= pos

    @pytest.mark.parametrize("args,name", [
        ((5.0, 100.0, 2.5, None, 110.0), "a-range"),
        ((0.0, 10.0, 2.5, None, 110.0), "b-range"),
        ((0.0, 100.0, 3.5, None, 110.0), "h-range"),
        ((0.0, 100.0, 2.5, None, 90.0), "T_b-range"),
        ((50.0, 100.0, 2.5, 60.0, 110.0), "T_a-range"),
    ])
    def test_preconditions(self, args, name):
        with pytest.raises(HypothesisViolation) as exc:
            zeta_zero_sum_tails(*args)
        assert exc.value.name == name


class TestExplicitFormula:
    def test_zeta_residual_is_small(self, zeta_80):
        rep = explicit_formula_check(zeta_descriptor(), zeta_80, TestWindow(0.0, 50.0, 3.0))
        assert rep.residual.contains(0.0)
        assert rep.residual.width + abs(rep.residual.mid) <= 1e-2
        assert rep.zeros_used == 42

    def test_perturbing_one_zero(self, zeta_80):
        w = TestWindow(0.0, 50.0, 3.0)
        base = explicit_formula_check(zeta_descriptor(), zeta_80, w)
        i = zeta_80.ordinates.index(next(g for g in zeta_80 if g > 30))
        moved = zeta_80.without_index(i).with_ordinate(zeta_80.ordinates[i] + 1e-4)
        rep = explicit_formula_check(zeta_descriptor(), moved, w)
        assert abs(rep.residual.mid - base.residual.mid) <= 2e-4 / w.h + base.residual.width

    def test_dropping_a_zero_is_detected(self, zeta_80):
        w = TestWindow(0.0, 50.0, 3.0)
        i = zeta_80.ordinates.index(next(g for g in zeta_80 if g > 20))
        rep = explicit_formula_check(zeta_descriptor(), zeta_80.without_index(i), w)
        assert rep.residual.hi < -0.9

    def test_gaussian_residual(self, gaussian_60):
        rep = explicit_formula_check(gaussian_descriptor(), gaussian_60, TestWindow(0.0, 30.0, 3.0))
        assert rep.residual.contains(0.0) and rep.residual.mag() < 1e-2

    def test_elliptic_residual(self, ec_25):
        rep = explicit_formula_check(elliptic_descriptor(), ec_25, TestWindow(-5.0, 15.0, 2.5))
        assert rep.residual.contains(0.0) and rep.residual.mag() < 1e-2

    def test_degenerate_window(self, zeta_80):
        rep = explicit_formula_check(zeta_descriptor(), zeta_80, TestWindow(10.0, 10.0, 3.0))
        assert rep.residual.contains(0.0)
