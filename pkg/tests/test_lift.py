import pytest

from swapfact.braid import (BraidWord, band, compose, dynnikov_equal, equal,
                            full_twist, half_twist, inverse)
from swapfact.lift import (CertificationError, band_word, block_half_twist,
                           lift, lift_band, lifted_swap_factorization,
                           rho_band_factorization, swap_bands,
                           swap_braid_target, verify_delta_square_lift)
from swapfact.surface import HomologyCalculator, SurfaceModel


def test_lift_letterwise():
    w = BraidWord.from_ints(6, [1, -3, 5])
    t = lift(w)
    assert t.surface == SurfaceModel(2, 2)
    assert [(c.tag, s) for c, s in t.letters] == [
        (("chain", 1), 1), (("chain", 3), -1), (("chain", 5), 1)]


def test_lift_needs_even_strands():
    with pytest.raises(ValueError):
        lift(BraidWord.from_ints(5, [1]))


def test_lift_homomorphism_on_homology():
    surface = SurfaceModel(2, 2)
    calc = HomologyCalculator(surface)
    u = BraidWord.from_ints(6, [1, 2])
    v = BraidWord.from_ints(6, [4, -5])
    from swapfact.surface import mat_mul
    assert calc.homology_action(lift(compose(u, v))) == mat_mul(
        calc.homology_action(lift(u)), calc.homology_action(lift(v)))


def test_equal_braids_equal_actions():
    surface = SurfaceModel(2, 2)
    calc = HomologyCalculator(surface)
    w1 = BraidWord.from_ints(6, [1, 2, 1])
    w2 = BraidWord.from_ints(6, [2, 1, 2])
    assert equal(w1, w2)
    assert calc.homology_action(lift(w1)) == calc.homology_action(lift(w2))


def test_lift_of_band_is_derived_twist():
    w = lift_band(2, BraidWord.from_ints(6, [3, -4]))
    assert len(w) == 1
    (curve, sign), = w.letters
    assert sign == 1
    assert curve.base.tag == ("chain", 2)


def test_delta_hat_word_shape():
    # the lift of the half twist is (t1...t_{2g+1})(t1...t_{2g})...(t1)
    t = lift(half_twist(6))
    ks = [c.tag[1] for c, _ in t.letters]
    assert ks == [1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1]


@pytest.mark.parametrize("g", [1, 2, 5])
def test_delta_square_lift(g):
    assert verify_delta_square_lift(g)


def test_delta_square_lift_perturbed_fails():
    surface = SurfaceModel(2, 2)
    calc = HomologyCalculator(surface)
    w = compose(full_twist(6), BraidWord.from_ints(6, [1]))
    assert not calc.is_identity_action(lift(w, surface))


class TestSwapBands:
    @pytest.mark.parametrize("gp", [1, 2, 3])
    def test_band_count_and_positivity(self, gp):
        bands = rho_band_factorization(gp)
        assert len(bands) == 2 * gp + 2
        for core, conj in bands:
            assert band(core, 0, conj).exponent_sum() == 1

    @pytest.mark.parametrize("gp", [2, 3])
    def test_certified_against_target(self, gp):
        w = band_word(rho_band_factorization(gp))
        assert equal(w, swap_braid_target(gp))

    def test_exponent_sum_bookkeeping(self):
        # e(Delta) - 2 e(T_1) - 2 e(T_2) equals the band count
        for gp in (2, 3):
            h = 2 * gp + 2
            n = 2 * h
            target = swap_braid_target(gp)
            assert target.exponent_sum() == h

    def test_lifted_factorization_positive(self):
        w = lifted_swap_factorization(2)
        assert len(w) == 6 and w.is_positive()

    def test_offset_family(self):
        bands = swap_bands(2, offset=6, strands=24)
        w = band_word(bands)
        lo, hi = 7, 18
        target = compose(block_half_twist(24, lo, hi),
                         inverse(compose(block_half_twist(24, 7, 12),
                                         block_half_twist(24, 7, 12))),
                         inverse(compose(block_half_twist(24, 13, 18),
                                         block_half_twist(24, 13, 18))))
        assert dynnikov_equal(w, target)

    def test_bad_family_raises(self):
        from swapfact import lift as lift_mod
        good = lift_mod.swap_bands
        try:
            lift_mod.swap_bands = lambda gp, offset=0, strands=None: \
                good(gp, offset, strands)[:-1] + [(1, BraidWord(4 * gp + 4))]
            lift_mod._certified.pop(1, None)
            with pytest.raises(CertificationError):
                lift_mod.rho_band_factorization(1)
        finally:
            lift_mod.swap_bands = good
            lift_mod._certified.pop(1, None)
