"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from wormcalc import ordinal
from wormcalc import worm as worms


def naturals(max_value=9):
    return st.integers(min_value=0, max_value=max_value).map(ordinal.from_int)


def _grow(children, max_level):
    levels = st.integers(min_value=1, max_value=max_level).map(ordinal.from_int)
    return st.one_of(
        children.map(ordinal.omega_power),
        st.tuples(levels, children).map(lambda ab: ordinal.veblen(*ab)),
        st.lists(children, min_size=2, max_size=3).map(
            lambda parts: ordinal.add_all(*parts)
        ),
    )


def ordinals():
    return st.recursive(naturals(), lambda ch: _grow(ch, 2), max_leaves=6)


def small_ordinals():
    """Stays below phi(2,0); what worm_of_ordinal can handle cheaply."""
    return st.recursive(naturals(), lambda ch: _grow(ch, 1), max_leaves=5)


def finite_modalities(max_value=3):
    return naturals(max_value)


def worm_words(max_size=6, max_modality=3):
    return st.lists(finite_modalities(max_modality), max_size=max_size).map(tuple)


def bnf_worms():
    return small_ordinals().map(worms.worm_of_ordinal)
