from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclicgv import (CapacityError, CodeSet, Codeword, DistanceThreshold,
                      DomainError, WitnessNotFoundError, auto_cyclic_distance,
                      check_cyclic_closure, check_maximality,
                      check_min_cyclic_distance, check_not_linear,
                      enumerate_auto_cyclic, find_nonlinearity_witness,
                      greedy_pack, hamming, orbit, orbit_values, shift)

D = DistanceThreshold


def cs(values, n, delta=None, **kw):
    return CodeSet(length=n, words=frozenset(values), delta=delta, **kw)


def union_of_orbits(n, seeds):
    vals = set()
    for v in seeds:
        vals.update(orbit_values(Codeword(v, n)))
    return cs(vals, n)


class TestClosure:
    def test_orbit_passes(self):
        assert check_cyclic_closure(orbit(Codeword.from_text("10000"))).passed

    def test_missing_shift_with_witness(self):
        res = check_cyclic_closure(cs({0b10000}, 5))
        assert not res.passed
        assert res.witness == {"word": "10000", "shift": 1}

    def test_empty_passes(self):
        assert check_cyclic_closure(cs(set(), 5)).passed

    def test_ignores_claimed_flag(self):
        lying = cs({0b10000}, 5, cyclic_closed=True)
        assert not check_cyclic_closure(lying).passed


class TestMinCyclicDistance:
    def test_greedy_output_passes(self):
        delta = D(2, 5)
        code, _ = greedy_pack(enumerate_auto_cyclic(5, delta), delta)
        assert check_min_cyclic_distance(code, delta).passed

    def test_adjacent_words_fail_with_distance(self):
        res = check_min_cyclic_distance(cs({0b00000, 0b00001}, 5), D(2, 5))
        assert not res.passed
        assert res.witness["distance"] == "1/5"
        assert {res.witness["word_a"], res.witness["word_b"]} == \
            {"00000", "00001"}

    def test_singleton_and_empty_pass(self):
        assert check_min_cyclic_distance(cs({3}, 5), D(2, 5)).passed
        assert check_min_cyclic_distance(cs(set(), 5), D(2, 5)).passed

    def test_within_orbit_violation_found(self):
        # the orbit of a weight-1 word has pairwise distance exactly 2/n
        res = check_min_cyclic_distance(orbit(Codeword(1, 7)), D(1, 2))
        assert not res.passed
        a = Codeword.from_text(res.witness["word_a"])
        b = Codeword.from_text(res.witness["word_b"])
        assert hamming(a, b).as_fraction() == Fraction(2, 7)

    def test_between_orbit_violation_found(self):
        code = union_of_orbits(7, [0b0001011, 0b0001001])
        res = check_min_cyclic_distance(code, D(3, 7))
        assert not res.passed
        a = Codeword.from_text(res.witness["word_a"])
        b = Codeword.from_text(res.witness["word_b"])
        assert a.value in code.words and b.value in code.words
        assert hamming(a, b) < D(3, 7)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(4, 13).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(st.integers(0, (1 << n) - 1), min_size=1, max_size=6),
            st.integers(0, n))))
    def test_representative_scan_equals_allpairs_hamming(self, args):
        n, seeds, p = args
        code = union_of_orbits(n, seeds)
        delta = D(p, n)
        got = check_min_cyclic_distance(code, delta, pair_budget=1 << 20)
        values = sorted(code.words)
        worst = min((hamming(Codeword(u, n), Codeword(v, n)).as_fraction()
                     for i, u in enumerate(values) for v in values[i + 1:]),
                    default=Fraction(2))
        assert got.passed == (worst >= delta.as_fraction())

    def test_budget_exceeded_raises_with_partial(self):
        code = union_of_orbits(11, range(40, 220))
        with pytest.raises(CapacityError) as exc:
            check_min_cyclic_distance(code, D(1, 11), pair_budget=10)
        partial = exc.value.partial
        assert partial.partial
        assert partial.check == "min_cyclic_distance"

    def test_non_closed_set_uses_literal_pairs(self):
        res = check_min_cyclic_distance(cs({0b00011, 0b01100}, 5), D(2, 5))
        # same orbit but the set is not closed: the only member pair is
        # far apart, so the check passes
        assert res.passed


class TestMaximality:
    def test_greedy_output_is_maximal(self):
        delta = D(2, 7)
        cprime = enumerate_auto_cyclic(7, delta)
        code, _ = greedy_pack(cprime, delta)
        assert check_maximality(code, cprime, delta).passed

    def test_empty_code_fails_against_nonempty_pool(self):
        pool = union_of_orbits(7, [3, 21])
        res = check_maximality(cs(set(), 7), pool, D(2, 7))
        assert not res.passed
        assert "word" in res.witness

    def test_code_equal_pool_passes(self):
        pool = union_of_orbits(7, [3])
        assert check_maximality(pool, pool, D(2, 7)).passed

    def test_left_out_far_orbit_is_detected(self):
        delta = D(2, 7)
        cprime = enumerate_auto_cyclic(7, delta)
        code, _ = greedy_pack(cprime, delta)
        # drop one kept orbit: its words are now uncovered leftovers
        dropped = sorted(code.words)[-1]
        smaller = cs(code.words - frozenset(orbit_values(Codeword(dropped, 7))),
                     7, delta=delta)
        res = check_maximality(smaller, cprime, delta)
        assert not res.passed

    def test_subset_precondition(self):
        with pytest.raises(DomainError):
            check_maximality(cs({1}, 5), cs({2}, 5), D(1, 5))
        with pytest.raises(DomainError):
            check_maximality(cs({1}, 5), cs({1}, 6), D(1, 5))


class TestNotLinear:
    def test_autocyclic_set_is_nonlinear_at_n11(self):
        code = enumerate_auto_cyclic(11, D(1, 4))
        res = check_not_linear(code)
        assert res.passed
        u = int(res.witness["word_a"], 2)
        v = int(res.witness["word_b"], 2)
        assert u in code.words and v in code.words
        assert (u ^ v) not in code.words

    def test_zero_singleton_is_linear(self):
        res = check_not_linear(cs({0}, 5))
        assert not res.passed and res.witness is None

    def test_full_space_is_linear(self):
        res = check_not_linear(cs(range(16), 4))
        assert not res.passed

    def test_missing_zero_is_instant_evidence(self):
        res = check_not_linear(cs({0b00011}, 5))
        assert res.passed
        assert res.witness == {"reason": "zero word missing"}

    def test_budget_sampling_flags_partial(self):
        res = check_not_linear(cs(range(16), 4), xor_budget=5)
        assert not res.passed and res.partial

    def test_even_weight_code_is_linear(self):
        even = cs({v for v in range(32) if bin(v).count("1") % 2 == 0}, 5)
        assert not check_not_linear(even).passed


class TestNonlinearityWitness:
    def test_n13_witness_satisfies_all_invariants(self):
        delta = D(1, 4)
        wit = find_nonlinearity_witness(13, delta)
        margin = Fraction(1, 4) + Fraction(2, 13)
        assert auto_cyclic_distance(wit.x) >= margin
        assert auto_cyclic_distance(wit.y) >= delta
        assert auto_cyclic_distance(wit.sum_word) == Fraction(2, 13)
        assert wit.sum_word.value == wit.x.value ^ wit.y.value == 1
        # exhaustive mode returns the smallest qualifying word
        assert wit.x.to_text() == "0000001010011"

    def test_members_of_cprime_but_xor_is_not(self):
        delta = D(1, 4)
        wit = find_nonlinearity_witness(13, delta)
        cprime = enumerate_auto_cyclic(13, delta)
        assert wit.x.value in cprime.words
        assert wit.y.value in cprime.words
        assert wit.sum_word.value not in cprime.words

    @pytest.mark.parametrize("n", range(2, 17))
    def test_weight_one_word_distance_is_two_over_n(self, n):
        assert auto_cyclic_distance(Codeword(1, n)) == Fraction(2, n)

    def test_sampled_mode_finds_witness_beyond_limit(self):
        wit = find_nonlinearity_witness(31, D(1, 4), seed=2,
                                        exhaustive_limit=16)
        assert auto_cyclic_distance(wit.x) >= \
            Fraction(1, 4) + Fraction(2, 31)

    def test_margin_domain_guard(self):
        with pytest.raises(DomainError):
            find_nonlinearity_witness(7, D(1, 4))  # 1/4 + 2/7 >= 1/2
        with pytest.raises(DomainError):
            find_nonlinearity_witness(5, D(1, 4))

    def test_not_found_within_budget(self):
        # at delta=2/5 the margin needs rotation distance >= 2/5 + 2/31:
        # rejection is near-certain per trial, so a small budget runs out
        with pytest.raises(WitnessNotFoundError) as exc:
            find_nonlinearity_witness(31, D(2, 5), seed=0, budget=64,
                                      exhaustive_limit=16)
        assert exc.value.budget == 64

    def test_serialization(self):
        d = find_nonlinearity_witness(13, D(1, 4)).to_json_dict()
        assert d["n"] == 13
        assert d["sum"] == "0000000000001"
        assert d["auto_distance_sum"] == "2/13"

    def test_triangle_consistency_under_single_flip(self):
        # flipping one coordinate moves each rotation distance by <= 2/n
        for n, v in ((9, 0b101100111), (11, 0b10110001101)):
            x = Codeword(v, n)
            y = Codeword(v ^ 1, n)
            for i in range(1, n):
                dx = hamming(shift(x, i), x).as_fraction()
                dy = hamming(shift(y, i), y).as_fraction()
                assert abs(dx - dy) <= Fraction(2, n)
