import random

import pytest
from hypothesis import given, settings, strategies as st

from swapfact.braid import (BraidWord, DynnikovState, StrandMismatch, band,
                            compose, dynnikov_act, dynnikov_base_state,
                            dynnikov_equal, equal, full_twist, half_twist,
                            inverse, is_trivial, normal_form, power)


def W(n, *ints):
    return BraidWord.from_ints(n, ints)


def random_word(rng, n, length):
    return BraidWord.from_ints(
        n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
            for _ in range(length)])


class TestWordAlgebra:
    def test_compose_concatenates(self):
        w = compose(W(3, 1), W(3, 2))
        assert w.to_ints() == (1, 2)

    def test_compose_identity(self):
        w = W(4, 1, -2, 3)
        assert compose(w, BraidWord(4)).to_ints() == w.to_ints()

    def test_compose_strand_mismatch(self):
        with pytest.raises(StrandMismatch):
            compose(W(3, 1), W(4, 1))

    def test_inverse_antihomomorphism(self):
        assert inverse(W(3, 1, 2)).to_ints() == (-2, -1)

    def test_inverse_involution(self):
        w = W(5, 3, -1, 4)
        assert inverse(inverse(w)).to_ints() == w.to_ints()

    def test_inverse_pair_trivial(self):
        assert is_trivial(compose(W(3, -1), W(3, 1)))

    def test_permutation_tracks_strands(self):
        # b1 exchanges strands 1 and 2 (0-based 0 and 1)
        assert W(3, 1).permutation() == (1, 0, 2)

    def test_band_definition(self):
        b = band(1, 3, W(4, 2))
        assert b.to_ints() == (2, 1, -2)

    def test_band_exponent_sum(self):
        rng = random.Random(5)
        for _ in range(20):
            conj = random_word(rng, 5, rng.randint(0, 10))
            assert band(rng.randint(1, 4), 0, conj).exponent_sum() == 1


class TestGarside:
    def test_half_twist_lengths(self):
        assert W(2, 1).to_ints() == half_twist(2).to_ints()
        assert half_twist(3).to_ints() == (1, 2, 1)
        assert len(half_twist(4)) == 6

    def test_half_twist_requires_two_strands(self):
        with pytest.raises(ValueError):
            half_twist(1)

    def test_trivial_word(self):
        assert normal_form(W(3, 1, -1)).is_trivial()

    def test_artin_relation_same_form(self):
        assert normal_form(W(3, 1, 2, 1)) == normal_form(W(3, 2, 1, 2))

    def test_half_twist_is_delta(self):
        nf = normal_form(half_twist(3))
        assert nf.infimum == 1 and nf.factors == ()

    def test_far_commutation(self):
        assert equal(W(4, 1, 3), W(4, 3, 1))

    def test_distinct_generators(self):
        assert not equal(W(3, 1), W(3, 2))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_delta_conjugation_reverses(self, n):
        d = half_twist(n)
        for i in range(1, n):
            lhs = compose(d, W(n, i), inverse(d))
            assert equal(lhs, W(n, n - i))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_full_twist_central(self, n):
        ft = full_twist(n)
        for i in range(1, n):
            assert equal(compose(ft, W(n, i)), compose(W(n, i), ft))

    def test_full_twist_conjugation_invariant(self):
        ft = full_twist(4)
        for i in range(1, 4):
            w = compose(W(4, i), ft, W(4, -i))
            assert equal(ft, w)

    def test_normal_form_idempotent(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(2, 7)
            w = random_word(rng, n, rng.randint(0, 30))
            nf = normal_form(w)
            assert normal_form(nf.word()) == nf

    def test_equal_is_congruence(self):
        rng = random.Random(13)
        for _ in range(30):
            n = rng.randint(3, 6)
            a = random_word(rng, n, 10)
            b = compose(a, W(n, 2, -2))
            c = random_word(rng, n, 6)
            assert equal(a, b)
            assert equal(compose(c, a), compose(c, b))
            assert equal(compose(a, c), compose(b, c))

    def test_exponent_sum_invariant(self):
        rng = random.Random(17)
        for _ in range(50):
            n = rng.randint(3, 6)
            w = random_word(rng, n, rng.randint(0, 20))
            assert w.exponent_sum() == normal_form(w).word().exponent_sum()


class TestDynnikov:
    def test_state_shape(self):
        with pytest.raises(ValueError):
            DynnikovState(3, (0, 1, 2))
        assert dynnikov_base_state(5).coords == (0, 1, 0, 2, 0, 3)

    def test_action_needs_matching_strands(self):
        with pytest.raises(StrandMismatch):
            dynnikov_act(W(4, 1), dynnikov_base_state(5))

    def test_action_inverse(self):
        st = dynnikov_base_state(5)
        moved = dynnikov_act(W(5, 2, 3, -1), st)
        back = dynnikov_act(inverse(W(5, 2, 3, -1)), moved)
        assert back == st and back.pads == st.pads

    def test_braid_relations_on_orbit(self):
        rng = random.Random(23)
        for _ in range(50):
            n = rng.randint(3, 8)
            pre = random_word(rng, n, rng.randint(0, 10))
            st = dynnikov_act(pre, dynnikov_base_state(n))
            i = rng.randint(1, n - 2) if n > 3 else 1
            a = dynnikov_act(W(n, i, i + 1, i), st)
            b = dynnikov_act(W(n, i + 1, i, i + 1), st)
            assert a == b and a.pads == b.pads

    def test_oracle_detects_central_powers(self):
        for n in (3, 4, 5):
            assert not dynnikov_equal(full_twist(n), BraidWord(n))
            assert not dynnikov_equal(power(full_twist(n), 2), BraidWord(n))

    def test_free_reduction_pair(self):
        rng = random.Random(29)
        w = random_word(rng, 5, 15)
        assert dynnikov_equal(w, compose(w, W(5, 2, -2)))

    def test_exponent_sum_filter(self):
        assert not dynnikov_equal(W(3, 1), W(3, 1, 1, 1))


class TestOracleAgreement:
    def test_oracles_agree_on_random_pairs(self):
        rng = random.Random(37)
        for _ in range(300):
            n = rng.randint(3, 8)
            w1 = random_word(rng, n, rng.randint(0, 40))
            w2 = random_word(rng, n, rng.randint(0, 40))
            assert equal(w1, w2) == dynnikov_equal(w1, w2)

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_rewritten_words_stay_equal(self, data):
        n = data.draw(st.integers(3, 7))
        ints = data.draw(st.lists(
            st.integers(1, n - 1).flatmap(
                lambda i: st.sampled_from([i, -i])), max_size=20))
        w1 = BraidWord.from_ints(n, ints)
        # insert braid relators at a random point
        i = data.draw(st.integers(1, n - 2))
        pos = data.draw(st.integers(0, len(ints)))
        relator = [i, i + 1, i, -(i + 1), -i, -(i + 1)]
        w2 = BraidWord.from_ints(n, ints[:pos] + relator + ints[pos:])
        assert equal(w1, w2)
        assert dynnikov_equal(w1, w2)


class TestAgainstLaminationEngine:
    """The PL update rules were derived from this taut-curve model; keep
    them pinned to it."""

    def test_padded_action_matches_engine(self):
        from lamination_oracle import Lamination, laminar_family, round_curve
        from swapfact.braid import _act_padded

        rng = random.Random(424)
        for _ in range(150):
            n = rng.randint(3, 7)
            comps = []
            for (lo, hi) in laminar_family(rng, n):
                comps.extend([round_curve(lo + 1, hi + 1)]
                             * rng.randint(1, 2))
            if not comps:
                comps = [round_curve(2, k + 2) for k in range(1, n - 1)]
            lam = Lamination(n + 2, comps)
            w = [rng.choice([1, -1]) * rng.randint(1, n - 1)
                 for _ in range(rng.randint(1, 15))]
            truth = lam.act([g + (1 if g > 0 else -1) for g in w]).dynnikov()
            pairs = [tuple(lam.dynnikov()[2 * k: 2 * k + 2])
                     for k in range(n)]
            got = _act_padded(BraidWord.from_ints(n, w), pairs)
            assert tuple(x for p in got for x in p) == truth

    def test_base_state_coordinates_match_engine(self):
        from lamination_oracle import Lamination, round_curve
        from swapfact.braid import _padded_base

        for n in range(3, 8):
            comps = []
            for k in range(1, n - 1):
                comps.extend([round_curve(2, k + 2)] * k)
            truth = Lamination(n + 2, comps).dynnikov()
            assert tuple(x for p in _padded_base(n) for x in p) == truth
