"""Tests for the neutral-fermion Fock space: mode operators, lowering
operators, normal ordering, and the boson image."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurq.exactalg import SQRT2, SparsePoly, Sqrt2Rational
from schurq.partitions import StrictPartition, bar_core, enumerate_added
from schurq.symfunc import schur, schur_q
from schurq.fock import (BosonElement, FockVector, NormalWord, beta_apply,
                         core_state_image, f_apply, f_power_normalized,
                         normal_word_image, phi, phi_closed_form,
                         single_node_action, to_normal_words)

P = StrictPartition.from_string

words = st.lists(st.integers(min_value=0, max_value=10), min_size=0,
                 max_size=5, unique=True).map(
    lambda xs: tuple(sorted(xs, reverse=True)))

strict_parts = st.lists(st.integers(min_value=1, max_value=12), min_size=0,
                        max_size=5, unique=True).map(
    lambda xs: StrictPartition(tuple(sorted(xs, reverse=True))))


def _vec(*pairs):
    out = FockVector.zero()
    for coeff, word in pairs:
        out = out + FockVector.from_word(word, Sqrt2Rational(coeff))
    return out


class TestFockVector:
    def test_basis_uses_padded_word(self):
        assert FockVector.basis(P("7,4,1")) == FockVector.from_word((7, 4, 1, 0))
        assert FockVector.basis(P("4,1")) == FockVector.from_word((4, 1))
        assert FockVector.basis(P("-")) == FockVector.from_word(())

    def test_trailing_zero_matters(self):
        assert FockVector.from_word((1, 0)) != FockVector.from_word((1,))

    def test_word_validation(self):
        with pytest.raises(ValueError):
            FockVector.from_word((1, 2))
        with pytest.raises(ValueError):
            FockVector.from_word((2, 2))
        with pytest.raises(ValueError):
            FockVector.from_word((-1,))

    def test_vector_space_ops(self):
        v = _vec((1, (2, 0)), (2, (3, 1)))
        w = _vec((-1, (2, 0)))
        assert (v + w).coefficient((2, 0)).is_zero()
        assert (v - v).is_zero()
        assert v.scale(Fraction(1, 2)).coefficient((3, 1)) == 1

    def test_rendering(self):
        v = FockVector.from_word((3, 0), SQRT2)
        assert str(v) == "(0+1*r2) * |3,0>"
        assert str(FockVector.from_word(())) == "1 * |vac>"
        assert str(FockVector.zero()) == "0"
        two = _vec((2, (2, 0)), (1, (5, 1)))
        assert str(two) == "1 * |5,1>\n2 * |2,0>"  # descending word order


class TestBetaAction:
    def test_create_from_vacuum(self):
        assert beta_apply(3, FockVector.from_word(())) == FockVector.from_word((3,))
        assert beta_apply(0, FockVector.from_word(())) == FockVector.from_word((0,))

    def test_annihilate_vacuum(self):
        assert beta_apply(-2, FockVector.from_word(())).is_zero()

    def test_zero_mode_squares_to_half(self):
        v = beta_apply(0, beta_apply(0, FockVector.from_word(())))
        assert v == FockVector.from_word(()).scale(Fraction(1, 2))

    def test_zero_mode_on_padded_word(self):
        # beta_0 |1,0> = -1/2 |1>: the zero mode anticommutes past beta_1
        # before contracting
        got = beta_apply(0, FockVector.from_word((1, 0)))
        assert got == FockVector.from_word((1,)).scale(Fraction(-1, 2))

    def test_contraction_sign(self):
        # beta_{-1} |1,0> = (-1)^1 |0>
        got = beta_apply(-1, FockVector.from_word((1, 0)))
        assert got == FockVector.from_word((0,)).scale(-1)

    def test_reordering_sign(self):
        # beta_0 beta_1 |vac> = -beta_1 beta_0 |vac>
        got = beta_apply(0, FockVector.from_word((1,)))
        assert got == FockVector.from_word((1, 0)).scale(-1)

    @settings(max_examples=60)
    @given(st.integers(min_value=-6, max_value=6),
           st.integers(min_value=-6, max_value=6), words)
    def test_anticommutation_relation(self, m, n, word):
        v = FockVector.from_word(word)
        lhs = beta_apply(m, beta_apply(n, v)) + beta_apply(n, beta_apply(m, v))
        rhs = v.scale((-1) ** m) if m + n == 0 else FockVector.zero()
        assert lhs == rhs

    @settings(max_examples=30)
    @given(st.integers(min_value=-6, max_value=6), words, words)
    def test_linearity(self, n, w1, w2):
        v1, v2 = FockVector.from_word(w1), FockVector.from_word(w2)
        assert beta_apply(n, v1 + v2) == beta_apply(n, v1) + beta_apply(n, v2)


class TestLoweringOperators:
    def test_single_node_validation(self):
        with pytest.raises(ValueError):
            single_node_action(-1, FockVector.from_word(()))

    def test_f_apply_validation(self):
        with pytest.raises(ValueError):
            f_apply(2, FockVector.from_word(()))

    def test_f1_on_first_core(self):
        got = f_apply(1, FockVector.basis(bar_core(1)))
        assert got == FockVector.from_word((2, 0)).scale(2)

    def test_f0_on_vacuum(self):
        got = f_apply(0, FockVector.basis(bar_core(0)))
        assert got == FockVector.from_word((1, 0)).scale(SQRT2)

    def test_f1_kills_vacuum(self):
        assert f_apply(1, FockVector.basis(bar_core(0))).is_zero()

    def test_divided_powers(self):
        v = FockVector.basis(bar_core(-2))
        twice = f_apply(0, f_apply(0, v)).scale(Fraction(1, 2))
        assert f_power_normalized(0, 2, v) == twice
        assert f_power_normalized(0, 0, v) == v
        with pytest.raises(ValueError):
            f_power_normalized(0, -1, v)

    def test_divided_power_coefficient(self):
        # the padded word (10,6,2,0) has two entries divisible by three and
        # one trailing zero, so its coefficient in the cube image is
        # sqrt2^(2 - 1)
        out = f_power_normalized(0, 3, FockVector.basis(bar_core(-3)))
        assert out.coefficient((10, 6, 2, 0)) == SQRT2

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=1, max_value=8), min_size=0,
                    max_size=4, unique=True).map(
               lambda xs: StrictPartition(tuple(sorted(xs, reverse=True)))),
           st.sampled_from((0, 1)))
    def test_f_moves_along_one_node_additions(self, lam, i):
        # every word in the image is the padded word of a one-node color-i
        # extension of the starting partition
        targets = {mu.even_padded() for mu in enumerate_added(lam, i, 1)}
        out = f_apply(i, FockVector.basis(lam))
        assert set(out.terms) <= targets


class TestNormalWords:
    def test_deep_golden_word(self):
        got = to_normal_words(P("20,18,16,12,8,7,2"))
        assert len(got) == 1
        nw = got[0]
        assert nw.coeff == Fraction(1)
        assert nw.phis == (6, 4, 0)
        assert nw.psis == (5, 2, -2, -4, -5, -6)
        assert nw.charge == -7

    def test_accepts_word_or_partition(self):
        assert to_normal_words((4, 1)) == to_normal_words(P("4,1"))

    def test_vacuum(self):
        got = to_normal_words(())
        assert got == (NormalWord(Fraction(1), (), (), 0),)

    def test_pure_charge_states(self):
        # even-length staircase cores straighten to pure charge vacua
        for m in (2, 4):
            got = to_normal_words(bar_core(m))
            assert len(got) == 1
            assert got[0].phis == () and got[0].psis == ()
            assert got[0].charge == m
            assert got[0].coeff == Fraction(1)

    def test_odd_cores_carry_the_pad_mode(self):
        # odd-length cores pad with a zero column, leaving one phi_0 and a
        # sign from moving it into place
        for m in (1, 3):
            got = to_normal_words(bar_core(m))
            assert len(got) == 1
            assert got[0].phis == (0,) and got[0].psis == ()
            assert got[0].charge == m
            assert got[0].coeff == Fraction(-1)

    @settings(max_examples=50, deadline=None)
    @given(strict_parts)
    def test_basis_words_have_single_unit_survivor(self, lam):
        got = to_normal_words(lam)
        assert len(got) == 1
        assert abs(got[0].coeff) == 1

    @settings(max_examples=50, deadline=None)
    @given(strict_parts)
    def test_normal_word_invariants(self, lam):
        (nw,) = to_normal_words(lam)
        assert all(nw.phis[i] > nw.phis[i + 1] for i in range(len(nw.phis) - 1))
        assert all(x >= 0 for x in nw.phis)
        assert all(nw.psis[i] > nw.psis[i + 1] for i in range(len(nw.psis) - 1))
        assert all(x > nw.charge for x in nw.psis)


class TestBosonElement:
    def test_component_access(self):
        elt = BosonElement({(0, 1): SparsePoly.constant(2)})
        assert elt.component(0, 1) == SparsePoly.constant(2)
        assert elt.component(1, 1).is_zero()

    def test_sigma_validation(self):
        with pytest.raises(ValueError):
            BosonElement({(2, 0): SparsePoly.constant(1)})

    def test_zero_polys_dropped(self):
        assert BosonElement({(0, 0): SparsePoly.zero()}).is_zero()

    def test_arithmetic(self):
        a = BosonElement({(0, 1): SparsePoly.constant(1)})
        b = BosonElement({(0, 1): SparsePoly.constant(-1)})
        assert (a + b).is_zero()
        assert (a - a).is_zero()
        assert a.scale(3).component(0, 1) == SparsePoly.constant(3)

    def test_rendering(self):
        elt = BosonElement({(1, -7): SparsePoly.constant(SQRT2 * Fraction(1, 2))})
        assert str(elt) == "(1, -7): (0+1/2*r2)"
        assert str(BosonElement.zero()) == "0"


class TestBosonImage:
    def test_image_of_vacuum(self):
        assert phi(FockVector.from_word(())) == BosonElement(
            {(0, 0): SparsePoly.constant(1)})

    def test_image_of_single_box(self):
        got = phi(FockVector.basis(P("1")))
        want = BosonElement({(1, 1): SparsePoly.constant(
            Sqrt2Rational(0, Fraction(-1, 2)))})
        assert got == want

    def test_image_matches_pair_product(self):
        # |7,2> carries the empty Q part and the single-row S part of weight 3
        got = phi(FockVector.basis(P("7,2")))
        assert got == BosonElement({(0, 0): schur((3,))})

    def test_normal_word_image_factors(self):
        (nw,) = to_normal_words(P("20,18,16,12,8,7,2"))
        key, poly = normal_word_image(nw)
        assert key == (1, -1)
        scalar = SparsePoly.constant(Sqrt2Rational.sqrt2_pow(-3))
        assert poly == scalar * schur_q((6, 4)) * schur((7, 5, 2, 1, 1, 1))

    def test_linearity(self):
        v = FockVector.basis(P("5,2"))
        w = FockVector.basis(P("4,1"))
        assert phi(v + w) == phi(v) + phi(w)
        assert phi(v.scale(SQRT2)) == phi(v).scale(SQRT2)

    @settings(max_examples=40, deadline=None)
    @given(strict_parts)
    def test_basis_image_is_single_sector(self, lam):
        got = phi(FockVector.basis(lam))
        assert len(got.components) == 1

    def test_core_state_images(self):
        assert core_state_image(0) == BosonElement({(0, 0): SparsePoly.constant(1)})
        assert core_state_image(2).component(0, 2) == SparsePoly.constant(1)
        assert core_state_image(-2).component(0, -2) == SparsePoly.constant(-1)
        odd = core_state_image(3).component(1, 3)
        assert odd == SparsePoly.constant(Sqrt2Rational(0, Fraction(-1, 2)))

    def test_phi_matches_core_state_formula(self):
        for m in range(-4, 5):
            assert phi(FockVector.basis(bar_core(m))) == core_state_image(m)


class TestClosedForm:
    def test_rejects_non_members(self):
        with pytest.raises(ValueError):
            phi_closed_form(P("6,2"), 0, 2, 2)  # only one node added
        with pytest.raises(ValueError):
            phi_closed_form(P("5,2"), 0, 2, 2)  # the bare core, no nodes
        with pytest.raises(ValueError):
            phi_closed_form(P("6,2,1"), 1, 2, 2)  # nodes of the wrong color

    def test_rejects_bad_color(self):
        with pytest.raises(ValueError):
            phi_closed_form(P("6,2,1"), 2, 2, 2)

    def test_color0_family_example(self):
        lam = P("6,2,1")
        got = phi_closed_form(lam, 0, 2, 2)
        assert got == phi(FockVector.basis(lam))

    def test_color1_family_example(self):
        lam = P("8,4,2")
        got = phi_closed_form(lam, 1, 3, 2)
        assert got == phi(FockVector.basis(lam))

    def test_deep_color0_state(self):
        # six color-0 nodes on a seven-row core; exercises the straightening
        # engine on a genuinely large word
        lam = P("20,18,16,12,8,7,2")
        assert phi_closed_form(lam, 0, 7, 6) == phi(FockVector.basis(lam))

    def test_grid_agreement(self):
        for i in (0, 1):
            for m in range(3):
                for n in range(3):
                    core = bar_core(m if i == 1 else -m)
                    for lam in enumerate_added(core, i, n):
                        assert phi_closed_form(lam, i, m, n) == \
                            phi(FockVector.basis(lam))

    def test_sector_keys(self):
        # color-1 additions land at charge m - 2n, color-0 at n - m
        lam = P("8,4,2")
        assert set(phi_closed_form(lam, 1, 3, 2).components) == {(1, -1)}
        mu = P("6,2,1")
        assert set(phi_closed_form(mu, 0, 2, 2).components) == {(0, 0)}
