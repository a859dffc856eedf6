from __future__ import annotations

import math
import random

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zerocert.errors import DomainError
from zerocert.interval import ComplexInterval
from zerocert.special import arctan_cut, arctan_exp, digamma, log_gamma_branch

mp.mp.dps = 40

re_part = st.floats(min_value=1e-3, max_value=50.0, allow_nan=False)
im_part = st.floats(min_value=-2000.0, max_value=2000.0, allow_nan=False)


def _in_box(box: ComplexInterval, w) -> bool:
    return (mp.mpf(box.re.lo) <= w.real <= mp.mpf(box.re.hi)
            and mp.mpf(box.im.lo) <= w.imag <= mp.mpf(box.im.hi))


class TestLogGamma:
    def test_vanishes_at_one_and_two(self):
        assert abs(log_gamma_branch(1.0)) < 1e-15
        assert abs(log_gamma_branch(2.0)) < 1e-15
        assert log_gamma_branch(1.0, enclosure=True).contains(0j)

    def test_half(self):
        assert abs(log_gamma_branch(0.5) - 0.5 * math.log(math.pi)) < 1e-15

    def test_branch_is_continuous_in_imaginary_direction(self):
        # principal log(gamma) would jump by 2 pi somewhere along this line
        prev = log_gamma_branch(complex(0.25, 0.0)).imag
        # slope is about log t, so steps of 0.05 move it by well under 1 up to t = 500
        for k in range(1, 10001):
            cur = log_gamma_branch(complex(0.25, k * 0.05)).imag
            assert abs(cur - prev) < 1.0
            prev = cur

    def test_reflection_of_conjugate(self):
        z = complex(1.3, 17.0)
        assert abs(log_gamma_branch(z.conjugate()) - log_gamma_branch(z).conjugate()) < 1e-13

    def test_rejects_left_half_plane(self):
        with pytest.raises(DomainError):
            log_gamma_branch(complex(-0.5, 3.0))
        with pytest.raises(DomainError):
            log_gamma_branch(0.0, enclosure=True)

    @settings(max_examples=150, deadline=None)
    @given(re_part, im_part)
    def test_enclosure_contains_oracle(self, x, y):
        box = log_gamma_branch(complex(x, y), enclosure=True)
        assert _in_box(box, mp.loggamma(mp.mpc(x, y)))

    @settings(max_examples=150, deadline=None)
    @given(re_part, im_part)
    def test_fast_path_matches_oracle(self, x, y):
        exact = mp.loggamma(mp.mpc(x, y))
        got = log_gamma_branch(complex(x, y))
        assert abs(mp.mpc(got) - exact) <= 1e-13 * max(1.0, abs(exact))

    def test_enclosure_is_narrow(self):
        rng = random.Random(5)
        for _ in range(50):
            z = complex(rng.uniform(0.01, 5), rng.uniform(-1000, 1000))
            assert log_gamma_branch(z, enclosure=True).width <= 1e-10


class TestDigamma:
    @settings(max_examples=150, deadline=None)
    @given(re_part, im_part)
    def test_enclosure_contains_oracle(self, x, y):
        box = digamma(complex(x, y), enclosure=True)
        assert _in_box(box, mp.digamma(mp.mpc(x, y)))

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=10.0, max_value=500.0), st.floats(min_value=-500.0, max_value=500.0))
    def test_width_shrinks_like_inverse_square(self, x, y):
        z = complex(x, y)
        assert digamma(z, enclosure=True).width <= 3.0 / abs(z) ** 2

    def test_known_value(self):
        euler = 0.5772156649015329
        assert abs(digamma(1.0) + euler) < 1e-15

    def test_recurrence(self):
        z = complex(0.7, 40.0)
        assert abs(digamma(z + 1) - digamma(z) - 1 / z) < 1e-14


class TestArctan:
    @settings(max_examples=200, deadline=None)
    @given(st.floats(min_value=-20, max_value=20), st.floats(min_value=-20, max_value=20))
    def test_cut_plane_arctan(self, x, y):
        z = complex(x, y)
        if x == 0 and abs(y) >= 1:
            with pytest.raises(DomainError):
                arctan_cut(z)
            return
        exact = mp.atan(mp.mpc(x, y))
        assert abs(mp.mpc(arctan_cut(z)) - exact) < 1e-13 * max(1.0, abs(exact))
        if abs(x) > 1e-6:
            assert _in_box(arctan_cut(z, enclosure=True), exact)

    def test_reciprocal_identity(self):
        z = complex(0.3, 2.5)
        assert abs(arctan_cut(z) + arctan_cut(1 / z) - math.pi / 2) < 1e-14

    @settings(max_examples=200, deadline=None)
    @given(st.floats(min_value=-700, max_value=700), st.floats(min_value=-1.5, max_value=1.5))
    def test_arctan_exp_on_the_strip(self, x, y):
        u = complex(x, y)
        exact = mp.atan(mp.exp(mp.mpc(x, y)))
        got = arctan_exp(u)
        assert abs(mp.mpc(got) - exact) < 1e-13
        assert _in_box(arctan_exp(u, enclosure=True), exact)

    def test_arctan_exp_extremes_do_not_overflow(self):
        assert arctan_exp(1e6) == math.pi / 2
        assert arctan_exp(-1e6) == 0.0
        assert arctan_exp(0.0) == pytest.approx(math.pi / 4, abs=1e-16)
