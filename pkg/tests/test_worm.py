"""Worm operations, consistency orders and omega sequences."""

import pytest
from hypothesis import given, settings

from wormcalc import ordinal
from wormcalc import worm as worms
from wormcalc.ordinal import OMEGA, ONE, ZERO, add, from_int, hyperexp, hyperlog, last_exponent
from wormcalc.syntax import parse_ordinal as O
from wormcalc.syntax import parse_worm as W
from wormcalc.worm import (
    EQUIVALENT,
    INCOMPARABLE,
    LEFT_BELOW,
    RIGHT_BELOW,
    NotBnf,
    NotInFragment,
    compare_at,
    coordinates_equal,
    demote,
    extremes,
    head,
    is_bnf,
    normalize,
    omega,
    omega_sequence,
    order_type,
    order_type_at,
    promote,
    remainder,
    worm_of_ordinal,
)
from tests.strategies import bnf_worms, finite_modalities, small_ordinals, worm_words

TWO = from_int(2)


def test_segment_operations():
    w = W("2.1.0.1")
    assert promote(ONE, w) == W("3.2.1.2")
    assert demote(ONE, W("3.2.1.2")) == w
    assert head(ONE, w) == W("2.1")
    assert remainder(ONE, w) == W("0.1")
    assert head(from_int(3), w) == ()
    assert remainder(from_int(3), w) == w
    assert head(ZERO, w) == w
    assert remainder(ZERO, w) == ()
    assert extremes(w) == (ZERO, TWO)
    assert extremes(()) == (None, None)


def test_demote_needs_room():
    with pytest.raises(NotInFragment):
        demote(ONE, W("2.1.0.1"))
    with pytest.raises(NotInFragment):
        demote(OMEGA, W("1"))


def test_order_type_goldens():
    table = {
        "T": "0",
        "0": "1",
        "0.0": "2",
        "1": "w",
        "0.1": "w + 1",
        "1.0": "w",
        "1.1": "w^(2)",
        "2": "w^(w)",
        "w": "phi(1,0)",
        "1.0.1.1": "w^(2) + w",
        "2.0.1": "w^(w)",
        "1.0.2": "w^(w) + w",
        "0.1.0.2": "w^(w) + w + 1",
        "w.0": "phi(1,0)",
    }
    for text, want in table.items():
        assert order_type(W(text)) is O(want), text


def test_order_type_at():
    assert order_type_at(ONE, W("1.1")) is TWO
    assert order_type_at(ZERO, W("0.1")) is O("w+1")
    assert order_type_at(OMEGA, W("w.w")) is TWO
    with pytest.raises(NotInFragment):
        order_type_at(ONE, W("1.0.1"))


def test_compare_at_goldens():
    assert compare_at(ONE, W("0.1.1"), W("1.0.1.1.1")) == LEFT_BELOW
    assert compare_at(ONE, W("1.0.1.1.1"), W("1.1.1.1")) == LEFT_BELOW
    assert compare_at(ONE, W("1.0.1.1.1"), W("1.1.0.1.1")) == INCOMPARABLE
    assert compare_at(ONE, W("1.1.0.1.1"), W("1.0.1.1.1")) == INCOMPARABLE
    assert compare_at(ONE, W("1"), W("1.0")) == EQUIVALENT
    assert compare_at(ZERO, W("1.0"), W("0.1")) == LEFT_BELOW
    assert compare_at(ZERO, W("0.1"), W("1.0")) == RIGHT_BELOW
    assert compare_at(OMEGA, W("w"), W("w.w")) == LEFT_BELOW
    assert compare_at(ZERO, (), W("0")) == LEFT_BELOW
    assert compare_at(ZERO, (), ()) == EQUIVALENT


def test_is_bnf_goldens():
    assert is_bnf(())
    assert is_bnf(W("0"))
    assert is_bnf(W("1"))
    assert not is_bnf(W("1.0"))
    assert is_bnf(W("0.1"))
    assert is_bnf(W("1.0.1"))
    assert is_bnf(W("1.0.2"))
    assert not is_bnf(W("2.0.1"))
    assert not is_bnf(W("2.1"))
    assert is_bnf(W("1.2"))
    assert is_bnf(W("2.1.2.2"))
    assert not is_bnf(W("2.2.1.2"))


def test_normalize_goldens():
    assert normalize(W("1.0")) == W("1")
    assert normalize(W("2.0.1")) == W("2")
    assert normalize(W("2.1")) == W("2")
    assert normalize(W("0.1")) == W("0.1")


def test_worm_of_ordinal_goldens():
    assert worm_of_ordinal(ZERO) == ()
    assert worm_of_ordinal(ONE) == W("0")
    assert worm_of_ordinal(O("w+1")) == W("0.1")
    assert worm_of_ordinal(O("w+w")) == W("1.0.1")
    assert worm_of_ordinal(O("w^(w)")) == W("2")
    assert worm_of_ordinal(O("phi(1,0)")) == W("w")
    assert worm_of_ordinal(O("w^(w)+w+1")) == W("0.1.0.2")


def test_omega_goldens():
    assert omega(ZERO, W("1.0.1")) is O("w+w")
    assert omega(ONE, W("1.0.1")) is ONE
    assert omega(TWO, W("1.0.1")) is ZERO
    assert omega(from_int(5), W("w")) is O("phi(1,0)")
    assert omega(OMEGA, W("w")) is ONE
    assert omega(O("w+1"), W("w")) is ZERO


def test_omega_sequence_entries():
    seq = omega_sequence(W("1.0.1"))
    assert seq.entries == ((ZERO, O("w+w")), (ONE, ONE), (TWO, ZERO))
    assert seq.value_at(ZERO) is O("w+w")
    assert seq.value_at(OMEGA) is ZERO
    assert omega_sequence(()).entries == ((ZERO, ZERO),)


def test_coordinates_equal():
    assert coordinates_equal(W("w"), TWO, from_int(3))
    assert not coordinates_equal(W("w"), from_int(3), OMEGA)
    assert coordinates_equal(W("0.1"), ONE, TWO)
    assert not coordinates_equal(W("1"), ZERO, ONE)
    with pytest.raises(NotBnf):
        coordinates_equal(W("1.0"), ZERO, ONE)


class TestOrderTypeLaws:
    @given(finite_modalities(), worm_words())
    def test_promotion(self, xi, w):
        assert order_type(promote(xi, w)) is hyperexp(xi, order_type(w))

    @given(worm_words())
    def test_normalize_sound(self, w):
        nf = normalize(w)
        assert is_bnf(nf)
        assert order_type(nf) is order_type(w)
        assert normalize(nf) == nf

    @given(small_ordinals())
    def test_worm_of_ordinal_inverts(self, x):
        assert order_type(worm_of_ordinal(x)) is x
        assert is_bnf(worm_of_ordinal(x))

    @given(worm_words(), worm_words())
    def test_zero_order_is_total(self, a, b):
        verdict = compare_at(ZERO, a, b)
        want = {
            "less": LEFT_BELOW,
            "equal": EQUIVALENT,
            "greater": RIGHT_BELOW,
        }[ordinal.compare(order_type(a), order_type(b))]
        assert verdict == want


class TestOmegaLaws:
    @given(bnf_worms(), finite_modalities())
    def test_successor_coordinate(self, w, xi):
        assert omega(add(xi, ONE), w) is last_exponent(omega(xi, w))

    @given(bnf_worms(), finite_modalities(), finite_modalities())
    def test_exact_sequence(self, w, xi, zeta):
        assert omega(add(xi, zeta), w) is hyperlog(zeta, omega(xi, w))

    @given(worm_words())
    def test_last_positive_coordinate_is_the_first_modality(self, w):
        if not w:
            assert omega(ZERO, w) is ZERO
        else:
            first = w[0]
            assert omega(first, w) is not ZERO
            assert omega(add(first, ONE), w) is ZERO

    @settings(max_examples=60)
    @given(bnf_worms(), finite_modalities(), finite_modalities())
    def test_coordinates_equal_characterization(self, w, xi, zeta):
        assert coordinates_equal(w, xi, zeta) == (omega(xi, w) is omega(zeta, w))

    @settings(max_examples=60)
    @given(bnf_worms(), finite_modalities())
    def test_coordinates_equal_at_limits_too(self, w, xi):
        zeta = add(OMEGA, xi)
        assert coordinates_equal(w, OMEGA, zeta) == (
            omega(OMEGA, w) is omega(zeta, w)
        )
