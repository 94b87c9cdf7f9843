"""Worms: iterated consistency words over ordinal modalities.

A worm is a finite word of ordinals below Gamma_0, kept as a tuple with
the leftmost (outermost) modality first; the empty tuple is the worm
corresponding to truth.  Worms are ordered by the provable-consistency
relations <_xi of the polymodal provability logic GLP: B <_xi A holds
when A proves the xi-consistency of B.  On the worms whose modalities
all reach xi this order is linear modulo provable equivalence and its
order type function is an isomorphism onto the ordinals; on arbitrary
worms it is merely well-founded and is decided here through the
head/remainder reduction rule.

The consistency orbit of a worm A is measured by its omega sequence:
coordinate xi is the supremum of the order types of <_xi chains below A,
and the whole sequence is the unique hyperlogarithm-exact sequence
starting at the order type of A.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from . import ordinal
from .ordinal import ONE, ZERO, Ordinal

Worm = Tuple[Ordinal, ...]

EQUIVALENT = "equivalent"
LEFT_BELOW = "left_below"
RIGHT_BELOW = "right_below"
INCOMPARABLE = "incomparable"


class NotInFragment(ValueError):
    """A worm left the fragment required by the operation."""


class NotBnf(ValueError):
    """The operation is only meaningful for worms in Beklemishev normal form."""


# --- structural operations --------------------------------------------------

def extremes(worm: Worm) -> Tuple[Optional[Ordinal], Optional[Ordinal]]:
    """(smallest modality, leftmost modality), or (None, None) when empty."""
    if not worm:
        return (None, None)
    return (min(worm), worm[0])


def promote(alpha: Ordinal, worm: Worm) -> Worm:
    """alpha^: add alpha on the left of every modality."""
    return tuple(ordinal.add(alpha, m) for m in worm)


def demote(alpha: Ordinal, worm: Worm) -> Worm:
    """alpha_: left-subtract alpha from every modality.

    Defined only when every modality is at least alpha.
    """
    try:
        return tuple(ordinal.left_sub(alpha, m) for m in worm)
    except ordinal.Underflow:
        raise NotInFragment(
            f"demote: a modality of {print_them(worm)} is below the subtrahend"
        ) from None


def head(xi: Ordinal, worm: Worm) -> Worm:
    """The largest initial segment whose modalities are all >= xi."""
    for i, m in enumerate(worm):
        if m < xi:
            return worm[:i]
    return worm


def remainder(xi: Ordinal, worm: Worm) -> Worm:
    """What head(xi, .) leaves: empty or starting with a modality < xi."""
    return worm[len(head(xi, worm)):]


def print_them(worm: Worm) -> str:
    from .syntax import print_worm

    return print_worm(worm)


# --- order types ------------------------------------------------------------

@lru_cache(maxsize=None)
def order_type(worm: Worm) -> Ordinal:
    """The <_0 order type of the worm.

    A worm with smallest modality mu > 0 is the mu-promotion of its
    demotion, and promotion acts on order types as the hyperexponential
    e^mu.  Otherwise the worm splits at its 0s into blocks; each block
    contributes an omega power of the order type of its 1-demotion, the
    rightmost block first (and contributing nothing when empty).
    """
    if not worm:
        return ZERO
    mu = min(worm)
    if mu.terms:
        return ordinal.hyperexp(mu, order_type(demote(mu, worm)))
    blocks = _split_at(ZERO, worm)
    rightmost = blocks[-1]
    total = ZERO
    if rightmost:
        total = ordinal.omega_power(order_type(demote(ONE, rightmost)))
    for block in reversed(blocks[:-1]):
        total = ordinal.add(total, ordinal.omega_power(order_type(demote(ONE, block))))
    return total


def _split_at(mu: Ordinal, worm: Worm) -> Tuple[Worm, ...]:
    # split at every occurrence of mu; the separators themselves vanish
    blocks = []
    current: list = []
    for m in worm:
        if m is mu:
            blocks.append(tuple(current))
            current = []
        else:
            current.append(m)
    blocks.append(tuple(current))
    return tuple(blocks)


def order_type_at(xi: Ordinal, worm: Worm) -> Ordinal:
    """The <_xi order type of a worm whose modalities all reach xi."""
    if head(xi, worm) is not worm:
        raise NotInFragment(
            f"order_type_at: {print_them(worm)} has a modality below the base"
        )
    return order_type(demote(xi, worm))


# --- normal forms -----------------------------------------------------------

@lru_cache(maxsize=None)
def worm_of_ordinal(x: Ordinal) -> Worm:
    """The unique worm in Beklemishev normal form with order type x.

    Inverts the order type calculus: an additively principal fixpoint
    omega^x = x is peeled by its maximal hyperexponential factor and the
    factor becomes a promotion; any other ordinal scatters its Cantor
    normal form exponents into 1-promoted blocks separated by single 0s,
    largest exponent rightmost, with the finite part leading as bare 0s.
    """
    if not x.terms:
        return ()
    exponents = ordinal.cnf_terms(x)
    if len(exponents) == 1 and exponents[0] is x:
        alpha, zeta = ordinal.hyperexp_factor(x)
        return promote(alpha, worm_of_ordinal(zeta))
    nats = sum(1 for e in exponents if not e.terms)
    out: list = [ZERO] * nats
    first = True
    for e in reversed(exponents[: len(exponents) - nats]):
        if not first:
            out.append(ZERO)
        out.extend(promote(ONE, worm_of_ordinal(e)))
        first = False
    return tuple(out)


def normalize(worm: Worm) -> Worm:
    """The Beklemishev normal form worm provably equivalent to this one."""
    return worm_of_ordinal(order_type(worm))


@lru_cache(maxsize=None)
def is_bnf(worm: Worm) -> bool:
    """Whether the worm is in Beklemishev normal form.

    Splitting at the smallest modality mu, every block must itself be in
    normal form and the blocks must be weakly <_(mu+1)-increasing from
    left to right.
    """
    if not worm:
        return True
    mu = min(worm)
    blocks = _split_at(mu, worm)
    if not all(is_bnf(b) for b in blocks):
        return False
    step = ordinal.add(mu, ONE)
    values = [order_type(demote(step, b)) for b in blocks]
    return all(x <= y for x, y in zip(values, values[1:]))


# --- consistency order ------------------------------------------------------

def _below(xi: Ordinal, b: Worm, a: Worm) -> bool:
    # B <_xi A: the xi-heads must compare by their demoted order types and
    # A must prove what remains of B below xi.
    hb = order_type(demote(xi, head(xi, b)))
    ha = order_type(demote(xi, head(xi, a)))
    if not hb < ha:
        return False
    return _implies(a, remainder(xi, b))


def _implies(a: Worm, c: Worm) -> bool:
    # does A prove the worm C; the lead modality of C strictly drops at
    # every unfolding, so this terminates
    if not c:
        return True
    return _below(c[0], c[1:], a)


def compare_at(xi: Ordinal, a: Worm, b: Worm) -> str:
    """Position of a against b in <_xi.

    One of "left_below" (a <_xi b), "right_below" (b <_xi a),
    "equivalent" (provably equivalent, i.e. equal order types), or
    "incomparable".  At xi = 0 the last outcome never occurs.
    """
    if _below(xi, a, b):
        return LEFT_BELOW
    if _below(xi, b, a):
        return RIGHT_BELOW
    if order_type(a) is order_type(b):
        return EQUIVALENT
    return INCOMPARABLE


# --- omega sequences --------------------------------------------------------

def omega(xi: Ordinal, worm: Worm) -> Ordinal:
    """Coordinate xi of the omega sequence: sup of <_xi chains below the worm.

    Computed as the xi-hyperlogarithm of the order type; it equals the
    <_xi order type of the xi-head.
    """
    return ordinal.hyperlog(xi, order_type(worm))


@dataclass(frozen=True)
class OmegaSeq:
    """Change points of xi |-> omega(xi, A), as (start, value) pairs.

    Starts are strictly increasing beginning at 0, values strictly
    decreasing, and the final value is 0 unless the worm is empty.
    """

    entries: Tuple[Tuple[Ordinal, Ordinal], ...]

    def value_at(self, xi: Ordinal) -> Ordinal:
        value = ZERO
        for start, v in self.entries:
            if start > xi:
                break
            value = v
        return value


def omega_sequence(worm: Worm) -> OmegaSeq:
    """The full omega sequence of the worm, stepped change to change.

    From value v > 0 at xi: when the last Cantor normal form term of v
    is 1 the value collapses to 0 at xi + 1; otherwise that term is
    maximally e^(omega^z)-factored and the next change is at xi + omega^z,
    where the factor cancels.
    """
    entries = [(ZERO, order_type(worm))]
    xi, v = entries[0]
    while v.terms:
        tail = ordinal.last_exponent(v)
        if not tail.terms:
            xi, v = ordinal.add(xi, ONE), ZERO
        else:
            alpha, _ = ordinal.hyperexp_factor(ordinal.omega_power(tail))
            step = ordinal.omega_power(ordinal.cnf_terms(alpha)[0])
            xi, v = ordinal.add(xi, step), ordinal.hyperlog(step, v)
        entries.append((xi, v))
    return OmegaSeq(tuple(entries))


def coordinates_equal(worm: Worm, xi: Ordinal, zeta: Ordinal) -> bool:
    """Whether omega(xi, .) and omega(zeta, .) agree on a normal form worm.

    Decided without computing either value: the xi- and zeta-heads must
    coincide and xi and zeta must project onto the same partial Cantor
    sum of every modality in that head.
    """
    if not is_bnf(worm):
        raise NotBnf(f"coordinates_equal: {print_them(worm)} is not in normal form")
    h = head(xi, worm)
    if head(zeta, worm) != h:
        return False
    return all(ordinal.sim(xi, zeta, eta) for eta in h)
