from fractions import Fraction
from math import comb

import mpmath as mp
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclicgv import (DistanceThreshold, DomainError, ball_entropy_bound,
                      ball_volume, binary_entropy, bound_report, code_rate,
                      gv_rate, self_distance_tail_bound, strict_radius, threshold_count)
from oracles import ref_ball_volume

rationals = st.tuples(st.integers(0, 200), st.integers(1, 200)).map(
    lambda t: Fraction(t[0] % (t[1] + 1), t[1]))


def mpf_close(a, b, tol):
    return abs(mp.mpf(a) - mp.mpf(b)) <= tol


class TestBinaryEntropy:
    def test_endpoints_and_max(self):
        assert binary_entropy(0) == 0
        assert binary_entropy(1) == 0
        assert mpf_close(binary_entropy(Fraction(1, 2)), 1, mp.mpf(2) ** -100)

    def test_quarter_against_algebraic_form(self):
        # independent route: H(1/4) = 2 - (3/4) log2 3
        with mp.workprec(150):
            expected = mp.mpf(2) - mp.mpf(3) / 4 * mp.log(3, 2)
        assert mpf_close(binary_entropy(Fraction(1, 4)), expected, 1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            binary_entropy(Fraction(5, 4))
        with pytest.raises(DomainError):
            binary_entropy(Fraction(-1, 4))

    @given(rationals)
    def test_symmetry(self, d):
        assert mpf_close(binary_entropy(d), binary_entropy(1 - d), mp.mpf(2) ** -90)

    @given(rationals.filter(lambda d: d <= Fraction(1, 2)))
    def test_above_chord(self, d):
        assert binary_entropy(d) >= 2 * mp.mpf(d.numerator) / d.denominator \
            - mp.mpf(2) ** -90


class TestBallVolume:
    def test_examples(self):
        assert ball_volume(5, 0) == 1
        assert ball_volume(5, 2) == 16
        for n in (1, 7, 33, 64):
            assert ball_volume(n, n) == 2 ** n

    @given(st.integers(1, 80), st.integers(0, 80))
    def test_against_binomial_sum(self, n, r_raw):
        r = r_raw % (n + 1)
        assert ball_volume(n, r) == ref_ball_volume(n, r)

    @given(st.integers(1, 80), st.integers(1, 80))
    def test_increment_is_binomial(self, n, r_raw):
        r = max(1, r_raw % (n + 1))
        assert ball_volume(n, r) - ball_volume(n, r - 1) == comb(n, r)

    def test_domain(self):
        with pytest.raises(DomainError):
            ball_volume(5, 6)
        with pytest.raises(DomainError):
            ball_volume(5, -1)

    def test_entropy_bound_spot_checks(self):
        for n, r in ((10, 3), (20, 7), (33, 16), (64, 20)):
            assert ball_volume(n, r) <= ball_entropy_bound(n, Fraction(r, n))


class TestSelfDistanceTailBound:
    def test_small_case_by_direct_evaluation(self):
        # 2 * (2-1) * 2^{(0-1)*2} = 2/4
        assert mpf_close(self_distance_tail_bound(2, 0), mp.mpf(1) / 2, mp.mpf(2) ** -100)

    def test_n61_quarter_against_independent_expression(self):
        with mp.workprec(150):
            h = mp.mpf(2) - mp.mpf(3) / 4 * mp.log(3, 2)
            expected = 120 * mp.power(2, (h - 1) * 61)
        got = self_distance_tail_bound(61, Fraction(1, 4))
        assert mpf_close(got, expected, 1e-12)
        assert mpf_close(got, mp.mpf("0.0411"), 1e-3)

    def test_strictly_decreasing_past_knee(self):
        values = [self_distance_tail_bound(n, Fraction(1, 4)) for n in range(50, 201)]
        assert all(b < a for a, b in zip(values, values[1:]))
        # decay rate is 2^{(H(1/4)-1) n} ~ 2^{-0.1887 n}: by n=200 the bound
        # sits below 2^{-n/8} (about 1.8e-9 against 3.0e-8)
        assert values[-1] < mp.mpf(2) ** (-200 / 8)
        assert mpf_close(values[-1], mp.mpf("1.728597963e-9"), 1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            self_distance_tail_bound(61, Fraction(1, 2))
        with pytest.raises(DomainError):
            self_distance_tail_bound(1, Fraction(1, 4))

    @given(st.integers(2, 300), rationals.filter(lambda d: d < Fraction(1, 2)))
    def test_log_identity(self, n, d):
        with mp.workprec(150):
            lhs = mp.log(self_distance_tail_bound(n, d), 2)
            rhs = 1 + mp.log(n - 1, 2) + (binary_entropy(d) - 1) * n
        assert abs(lhs - rhs) <= 1e-9


class TestGvRate:
    def test_examples(self):
        assert gv_rate(0) == 1
        with mp.workprec(150):
            expected = 1 - (mp.mpf(2) - mp.mpf(3) / 4 * mp.log(3, 2))
        assert mpf_close(gv_rate(Fraction(1, 4)), expected, 1e-12)

    @given(rationals.filter(lambda d: d < Fraction(1, 2)))
    def test_complement_identity(self, d):
        assert mpf_close(gv_rate(d) + binary_entropy(d), 1, mp.mpf(2) ** -90)

    def test_domain(self):
        with pytest.raises(DomainError):
            gv_rate(Fraction(1, 2))
        with pytest.raises(DomainError):
            gv_rate(Fraction(3, 4))


class TestCodeRate:
    def test_examples(self):
        for n in (3, 10, 40):
            assert mpf_close(code_rate(2 ** n, n), 1, mp.mpf(2) ** -100)
            assert code_rate(1, n) == 0
        assert mpf_close(code_rate(32, 10), mp.mpf(1) / 2, mp.mpf(2) ** -100)

    def test_huge_sizes_stay_exactish(self):
        assert mpf_close(code_rate(2 ** 200, 200), 1, mp.mpf(2) ** -90)

    def test_domain(self):
        with pytest.raises(DomainError):
            code_rate(0, 5)


class TestStrictRadius:
    def test_known_values(self):
        assert strict_radius(5, Fraction(2, 5)) == 1
        assert strict_radius(13, Fraction(1, 4)) == 3
        assert strict_radius(8, Fraction(1, 4)) == 1  # boundary: 2/8 == 1/4
        assert strict_radius(7, 0) == -1
        assert strict_radius(4, Fraction(1, 2)) == 1
        assert threshold_count(13, Fraction(1, 4)) == 4

    @given(st.integers(1, 100), rationals)
    def test_is_largest_count_below_threshold(self, n, d):
        r = strict_radius(n, d)
        assert r <= n
        if r >= 0:
            assert Fraction(r, n) < d
        assert Fraction(r + 1, n) >= d

    def test_accepts_threshold_type(self):
        assert strict_radius(5, DistanceThreshold(2, 5)) == 1


class TestBoundReport:
    def test_fields_and_serialization(self):
        rep = bound_report(61, DistanceThreshold(1, 4))
        d = rep.to_json_dict()
        assert d["n"] == 61 and d["delta"] == "1/4"
        assert d["ball_radius"] == 15
        assert isinstance(d["ball_volume"], int)
        assert d["ball_volume"] == ref_ball_volume(61, 15)
        assert float(d["tail_bound"]) == pytest.approx(0.0411, abs=1e-3)
        assert float(d["gv_rate"]) == pytest.approx(0.18872, abs=1e-4)
        assert rep.ball_volume <= rep.ball_entropy_bound

    def test_above_half_has_no_tail_bound(self):
        rep = bound_report(9, DistanceThreshold(2, 3))
        assert rep.tail_bound is None and rep.gv_rate is None
        assert rep.to_json_dict()["tail_bound"] is None
