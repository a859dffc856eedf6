from __future__ import annotations

import math

import pytest

from conftest import fixture_path
from zerocert.certify import (
    THRESHOLDS,
    CertificateReport,
    CertifyOptions,
    Theorem,
    Verdict,
    certify,
    certify_elliptic,
    certify_general,
    certify_hecke,
    certify_zeta_R,
    certify_zeta_window,
    elliptic_penalty,
    hecke_penalty,
    zero_sum,
    zeta_cutoff,
    zeta_osc_remainder,
    zeta_prime_sum,
)
from zerocert.errors import HypothesisViolation
from zerocert.interval import Interval
from zerocert.lfunc import (
    ZeroList,
    descriptor_from_file,
    elliptic_descriptor,
    gaussian_descriptor,
    zeta_descriptor,
)
from zerocert.primesum import w_f_eval
from zerocert.testfn import TestWindow


class TestZetaInitialSegment:
    def test_certified(self, zeta_103):
        rep = certify_zeta_R(zeta_103, 100.0, 2.5)
        assert rep.verdict is Verdict.CERTIFIED_COMPLETE
        assert rep.lhs.hi <= -0.56
        assert rep.terms["M"] == 136

    def test_every_removal_flips(self, zeta_103):
        base = certify_zeta_R(zeta_103, 100.0, 2.5)
        for i, g in enumerate(zeta_103.ordinates):
            if g >= 98:
                continue
            rep = certify_zeta_R(zeta_103.without_index(i), 100.0, 2.5)
            assert rep.verdict is Verdict.INCONCLUSIVE
            assert rep.lhs.lo - base.lhs.hi >= 0.95

    def test_duplicate_lowers_lhs_and_warns(self, zeta_103):
        extra = zeta_103.with_ordinate(zeta_103.ordinates[5])
        rep = certify_zeta_R(extra, 100.0, 2.5)
        base = certify_zeta_R(zeta_103, 100.0, 2.5)
        assert rep.lhs.hi < base.lhs.lo
        assert any("duplicate" in w for w in rep.warnings)

    def test_strict_mode_rejects_close_ordinates(self, zeta_103):
        extra = zeta_103.with_ordinate(zeta_103.ordinates[5])
        with pytest.raises(HypothesisViolation) as exc:
            certify_zeta_R(extra, 100.0, 2.5, CertifyOptions(strict=True))
        assert exc.value.name == "close-ordinates"

    def test_asserted_multiplicity_passes_strict_mode(self, zeta_103):
        extra = zeta_103.with_ordinate(zeta_103.ordinates[5])
        extra = ZeroList(extra.ordinates, extra.delta, multiplicity_asserted=True)
        certify_zeta_R(extra, 100.0, 2.5, CertifyOptions(strict=True))

    def test_prime_sum_matches_generic_form(self):
        # the product-of-trig form equals w_f for zeta
        for a, b in [(0.0, 100.0), (1000.0, 1020.0)]:
            w = TestWindow(a, b, 2.5)
            trig = zeta_prime_sum(a, b, 2.5, 136)
            generic, _ = w_f_eval(zeta_descriptor(), w, 136, enclosure=True)
            assert abs(trig.mid - generic.mid) < 1e-13

    def test_cutoff(self):
        assert zeta_cutoff(2.5) == 136
        assert zeta_cutoff(2.5) <= 140

    def test_remainder_is_widened_near_pi(self):
        fixed = 1.6 / Interval.point(100.0)
        assert zeta_osc_remainder(2.5, (100.0,), fixed) == fixed
        assert zeta_osc_remainder(math.pi, (100.0,), fixed).hi > fixed.hi

    @pytest.mark.parametrize("R,h,name", [(10.0, 2.5, "R-range"), (100.0, 1.0, "h-range"), (100.0, 3.2, "h-range")])
    def test_hypotheses(self, zeta_103, R, h, name):
        with pytest.raises(HypothesisViolation) as exc:
            certify_zeta_R(zeta_103, R, h)
        assert exc.value.name == name

    def test_negative_ordinates_rejected(self, zeta_80):
        with pytest.raises(HypothesisViolation) as exc:
            certify_zeta_R(zeta_80, 50.0, 2.5)
        assert exc.value.name == "positive-ordinates"


class TestZetaWindow:
    def test_certified(self, zeta_1000):
        rep = certify_zeta_window(zeta_1000, 1000.0, 1020.0, 2.5)
        assert rep.verdict is Verdict.CERTIFIED_COMPLETE

    def test_implies_general(self, zeta_1000):
        for a, b in [(1000.0, 1020.0), (995.0, 1025.0), (1005.0, 1015.0)]:
            if certify_zeta_window(zeta_1000, a, b, 2.5).certified:
                assert certify_general(zeta_descriptor(), zeta_1000, TestWindow(a, b, 2.5)).certified

    def test_truncated_list_reports_guard_deficit(self, zeta_1000):
        rep = certify_zeta_window(zeta_1000.between(1000.0, 1020.0), 1000.0, 1020.0, 2.5)
        assert rep.verdict is Verdict.INCONCLUSIVE
        assert rep.guard["deficit_lo"] > 0 and rep.guard["deficit_hi"] > 0
        assert "guard deficit" in rep.to_text()

    def test_removing_interior_zero(self, zeta_1000):
        i = zeta_1000.ordinates.index(next(g for g in zeta_1000 if g > 1010))
        base = certify_general(zeta_descriptor(), zeta_1000, TestWindow(1000.0, 1020.0, 2.5))
        rep = certify_general(zeta_descriptor(), zeta_1000.without_index(i), TestWindow(1000.0, 1020.0, 2.5))
        assert rep.lhs.lo - base.lhs.hi > 0.49
        assert rep.verdict is Verdict.INCONCLUSIVE

    def test_a_must_exceed_15(self, zeta_103):
        with pytest.raises(HypothesisViolation) as exc:
            certify_zeta_window(zeta_103, 15.0, 40.0, 2.5)
        assert exc.value.name == "a-range"

    def test_narrow_window(self, zeta_1000):
        with pytest.raises(HypothesisViolation) as exc:
            certify_zeta_window(zeta_1000, 1000.0, 1003.0, 2.5)
        assert exc.value.name == "window-too-narrow"


class TestGeneral:
    def test_coarse_precision_rejected(self, zeta_1000):
        coarse = ZeroList(zeta_1000.ordinates, 0.2)
        with pytest.raises(HypothesisViolation) as exc:
            certify_general(zeta_descriptor(), coarse, TestWindow(1000.0, 1020.0, 2.5))
        assert exc.value.name == "precision-too-coarse"

    def test_monotone_in_the_list(self, zeta_1000):
        w = TestWindow(1000.0, 1020.0, 2.5)
        base = certify_general(zeta_descriptor(), zeta_1000, w)
        for extra in (1001.3, 1019.9, 1050.0):
            more = certify_general(zeta_descriptor(), zeta_1000.with_ordinate(extra), w)
            # equality up to outward rounding when the extra term is negligible
            assert more.lhs.hi <= base.lhs.hi + 1e-13
            assert more.lhs.mid <= base.lhs.mid + 1e-13

    def test_shortcut_agrees(self, zeta_103, zeta_1000):
        cases = [
            (zeta_descriptor(), zeta_1000, TestWindow(990.0, 1030.0, 2.5)),
            (zeta_descriptor(), zeta_103, TestWindow(20.0, 100.0, 2.0)),
        ]
        for desc, zeros, w in cases:
            off = certify_general(desc, zeros, w)
            on = certify_general(desc, zeros, w, CertifyOptions(shortcut=True))
            err = on.terms["shortcut_error"]
            assert err < 0.01
            assert on.lhs.hi <= off.lhs.hi + 1e-12
            assert off.lhs.lo - on.lhs.hi <= err + off.lhs.width
            if abs(off.total_upper - off.threshold) >= 0.01:
                assert on.verdict is off.verdict

    def test_shortcut_counts_core_zeros(self, zeta_1000):
        w = TestWindow(990.0, 1030.0, 2.5)
        total, core, err = zero_sum(w, zeta_1000, shortcut=True)
        assert core > 0 and err > 0
        exact, _, _ = zero_sum(w, zeta_1000)
        assert total.hi >= exact.lo

    def test_empty_generic_descriptor(self):
        desc = descriptor_from_file(fixture_path("generic_empty.json"))
        rep = certify_general(desc, ZeroList((), 1e-10), TestWindow(0.0, 10.0, 2.0))
        t = rep.terms
        assert t["zero_sum"] == Interval(0.0, 0.0)
        assert t["w_f"].mag() < 1e-300
        assert (t["w_f"] + t["w_inf"] + t["pole_term"] - rep.lhs).contains(0.0)

    def test_gaussian_general(self, gaussian_60):
        rep = certify_general(gaussian_descriptor(), gaussian_60, TestWindow(20.0, 30.0, math.pi))
        assert rep.verdict is Verdict.CERTIFIED_COMPLETE

    def test_soundness_gate_uses_upper_bound(self, zeta_1000):
        rep = certify_general(zeta_descriptor(), zeta_1000, TestWindow(1000.0, 1020.0, 2.5))
        assert rep.total_upper >= rep.lhs.hi + rep.terms["w_f_tail"]
        assert rep.certified == (rep.total_upper <= THRESHOLDS[Theorem.GENERAL])


class TestNumberFields:
    def test_hecke_penalty(self):
        assert hecke_penalty(gaussian_descriptor(), 0.0, 50.0).contains(5.57 / 50)

    def test_hecke_certified(self, gaussian_60):
        rep = certify_hecke(gaussian_descriptor(), gaussian_60, 0.0, 50.0)
        assert rep.verdict is Verdict.CERTIFIED_COMPLETE
        assert rep.terms["pole_term"].contains(1.0) or abs(rep.terms["pole_term"].mid - 1.0) < 1e-6
        assert rep.terms["M"] == 40

    def test_hecke_endpoint_too_low(self, gaussian_60):
        with pytest.raises(HypothesisViolation) as exc:
            certify_hecke(gaussian_descriptor(), gaussian_60, 20.0, 30.0)
        assert exc.value.name == "endpoint-range"

    def test_auto_falls_back_to_general(self, gaussian_60):
        rep = certify(gaussian_descriptor(), gaussian_60, 20.0, 30.0)
        assert rep.theorem is Theorem.GENERAL
        assert all(math.isfinite(v.hi) for v in rep.terms.values() if isinstance(v, Interval))

    def test_elliptic_penalty(self):
        assert elliptic_penalty(0.0).contains(0.0) and elliptic_penalty(0.0).mag() < 1e-300
        assert elliptic_penalty(20.0).contains(0.2785)

    def test_elliptic_certified(self, ec_25):
        rep = certify_elliptic(elliptic_descriptor(), ec_25, 0.0, 20.0)
        assert rep.verdict is Verdict.CERTIFIED_COMPLETE
        assert rep.terms["M"] == 29

    def test_elliptic_endpoint(self, ec_25):
        with pytest.raises(HypothesisViolation) as exc:
            certify_elliptic(elliptic_descriptor(), ec_25, 0.0, 12.0)
        assert exc.value.name == "endpoint-range"

    def test_elliptic_missing_zero(self, ec_25):
        i = ec_25.ordinates.index(next(g for g in ec_25 if g > 6))
        rep = certify_elliptic(elliptic_descriptor(), ec_25.without_index(i), 0.0, 20.0)
        assert rep.verdict is Verdict.INCONCLUSIVE
        assert any("bound missed" in w for w in rep.warnings)


class TestDispatch:
    def test_R_selects_initial_segment(self, zeta_103):
        assert certify(zeta_descriptor(), zeta_103, R=100.0, h=2.5).theorem is Theorem.ZETA_R

    def test_zeta_window(self, zeta_1000):
        assert certify(zeta_descriptor(), zeta_1000, 1000.0, 1020.0, h=2.5).theorem is Theorem.ZETA_AB

    def test_explicit_theorems(self, zeta_1000, ec_25):
        assert certify(zeta_descriptor(), zeta_1000, 1000.0, 1020.0, 2.5, theorem="general").theorem is Theorem.GENERAL
        assert certify(elliptic_descriptor(), ec_25, 0.0, 20.0).theorem is Theorem.ELLIPTIC

    def test_missing_pieces(self, zeta_103):
        with pytest.raises(HypothesisViolation):
            certify(zeta_descriptor(), zeta_103, theorem="zeta-r")
        with pytest.raises(HypothesisViolation):
            certify(zeta_descriptor(), zeta_103, 1.0)
        with pytest.raises(HypothesisViolation):
            certify(zeta_descriptor(), zeta_103, 0.0, 50.0, theorem="nope")
        with pytest.raises(HypothesisViolation):
            certify(gaussian_descriptor(), zeta_103, R=100.0)

    def test_precision_errors_are_not_swallowed(self, zeta_1000):
        coarse = ZeroList(zeta_1000.ordinates, 0.2)
        with pytest.raises(HypothesisViolation):
            certify(zeta_descriptor(), coarse, 1000.0, 1020.0, h=2.5)


class TestReport:
    def test_json_roundtrip(self, zeta_1000):
        rep = certify_zeta_window(zeta_1000.between(1000.0, 1020.0), 1000.0, 1020.0, 2.5)
        back = CertificateReport.from_json(rep.to_json())
        assert back == rep

    def test_text_lists_every_term(self, zeta_103):
        text = certify_zeta_R(zeta_103, 100.0, 2.5).to_text()
        for needle in ("prime sum", "gamma main term", "remainder", "zero sum", "precision_slack",
                       "prime cutoff M", "CERTIFIED_COMPLETE"):
            assert needle in text
