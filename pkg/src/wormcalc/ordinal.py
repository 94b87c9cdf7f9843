"""Ordinal arithmetic below Gamma_0.

An ordinal is a weakly decreasing finite sum of additively principal
terms phi_a(b), where phi is the binary Veblen function over the base
fixpoint-free hierarchy (phi_0(b) = omega^b, phi_{a+1} enumerates the
fixpoints of phi_a).  A term is kept only in normal position, i.e. with
b < phi_a(b); the canonical form of every ordinal below Gamma_0 is then
unique, so structural equality is ordinal equality.

Instances are interned: the factory functions always return the single
canonical object for a value, which makes equality an identity check and
keeps hashing cheap.  Do not instantiate Ordinal directly.

On top of the sum representation this module provides the
hyperexponential family e^xi (minimal weak hyperation of
e = x |-> omega^x restricted to {0} union {omega^(1+a)}) and its left
adjoint family of hyperlogarithms l^xi, together with the weak
hyperexponential normal form built from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Optional, Tuple

LESS = "less"
EQUAL = "equal"
GREATER = "greater"


class Underflow(ArithmeticError):
    """Raised by left_sub(a, b) when a > b, so no difference exists."""


class ZeroInput(ValueError):
    """Raised by hyperexp_factor(0): zero has no maximal factorization."""


class GammaZeroOverflow(OverflowError):
    """Raised when a construction would need an index at or above Gamma_0.

    Every value representable here is below Gamma_0 and Gamma_0 is closed
    under all exported operations, so no public call path reaches this.
    The guard exists for completeness of the error contract.
    """


# --- representation ---------------------------------------------------------

Term = Tuple["Ordinal", "Ordinal"]  # (a, b) stands for phi_a(b)

_POOL: dict = {}


class Ordinal:
    """An ordinal below Gamma_0 in canonical Veblen normal form.

    ``terms`` is the weakly decreasing tuple of (a, b) pairs.  The empty
    tuple is zero.  Comparison operators implement ordinal order.
    """

    __slots__ = ("terms",)
    terms: Tuple[Term, ...]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __lt__(self, other: "Ordinal") -> bool:
        return _cmp(self, other) < 0

    def __le__(self, other: "Ordinal") -> bool:
        return _cmp(self, other) <= 0

    def __gt__(self, other: "Ordinal") -> bool:
        return _cmp(self, other) > 0

    def __ge__(self, other: "Ordinal") -> bool:
        return _cmp(self, other) >= 0

    def __add__(self, other: "Ordinal") -> "Ordinal":
        return add(self, other)

    def __repr__(self) -> str:
        from .syntax import print_ordinal

        return f"Ordinal({print_ordinal(self)})"


def _make(terms: Tuple[Term, ...]) -> Ordinal:
    got = _POOL.get(terms)
    if got is None:
        got = object.__new__(Ordinal)
        got.terms = terms
        _POOL[terms] = got
    return got


def _single(term: Term) -> Ordinal:
    return _make((term,))


ZERO = _make(())
ONE = _make(((ZERO, ZERO),))
_UNIT = ONE.terms[0]
OMEGA = _make(((ZERO, ONE),))


def from_int(n: int) -> Ordinal:
    """The finite ordinal n."""
    if n < 0:
        raise ValueError(f"no negative ordinals: {n}")
    return _make((_UNIT,) * n)


def as_int(a: Ordinal) -> Optional[int]:
    """n if a is the finite ordinal n, else None."""
    if a.terms and a.terms[0] is not _UNIT:
        return None
    return len(a.terms)


def natural_part(a: Ordinal) -> int:
    """The finite summand of a, i.e. the count of trailing 1 terms."""
    n = 0
    for t in reversed(a.terms):
        if t is not _UNIT:
            break
        n += 1
    return n


# --- comparison -------------------------------------------------------------

def _cmp_term(s: Term, t: Term) -> int:
    # phi_a(b) vs phi_c(d): whichever side has the lower Veblen level is
    # compared against the other side's value, which is one of its fixpoints.
    a, b = s
    c, d = t
    k = _cmp(a, c)
    if k == 0:
        return _cmp(b, d)
    if k < 0:
        return _cmp(b, _single(t))
    return _cmp(_single(s), d)


@lru_cache(maxsize=None)
def _cmp(x: Ordinal, y: Ordinal) -> int:
    if x is y:
        return 0
    for s, t in zip(x.terms, y.terms):
        k = _cmp_term(s, t)
        if k:
            return k
    return (len(x.terms) > len(y.terms)) - (len(x.terms) < len(y.terms))


def compare(a: Ordinal, b: Ordinal) -> str:
    """One of "less", "equal", "greater"."""
    k = _cmp(a, b)
    return LESS if k < 0 else (EQUAL if k == 0 else GREATER)


# --- sum arithmetic ---------------------------------------------------------

def add(x: Ordinal, y: Ordinal) -> Ordinal:
    """Ordinal sum x + y; trailing terms of x below the lead of y are absorbed."""
    if not y.terms:
        return x
    if not x.terms:
        return y
    lead = y.terms[0]
    k = len(x.terms)
    while k and _cmp_term(x.terms[k - 1], lead) < 0:
        k -= 1
    return _make(x.terms[:k] + y.terms)


def add_all(*xs: Ordinal) -> Ordinal:
    return reduce(add, xs, ZERO)


def left_sub(z: Ordinal, x: Ordinal) -> Ordinal:
    """The unique y with z + y = x, for z <= x (written -z+x)."""
    zt, xt = z.terms, x.terms
    for i, s in enumerate(zt):
        if i >= len(xt):
            raise Underflow(f"left_sub: {z!r} > {x!r}")
        k = _cmp_term(s, xt[i])
        if k < 0:
            # the rest of z is absorbed by the larger term of x
            return _make(xt[i:])
        if k > 0:
            raise Underflow(f"left_sub: {z!r} > {x!r}")
    return _make(xt[len(zt):])


# --- Cantor normal form views ----------------------------------------------

def _term_exponent(t: Term) -> Ordinal:
    # omega-exponent of a term: phi_0(b) = omega^b, and any phi_a(b) with
    # a >= 1 is an epsilon-like fixpoint, equal to omega^itself.
    a, b = t
    return b if not a.terms else _single(t)


def cnf_terms(x: Ordinal) -> Tuple[Ordinal, ...]:
    """The weakly decreasing exponents of the Cantor normal form of x."""
    return tuple(_term_exponent(t) for t in x.terms)


def last_exponent(x: Ordinal) -> Ordinal:
    """The exponent of the last Cantor normal form term; 0 for x = 0."""
    if not x.terms:
        return ZERO
    return _term_exponent(x.terms[-1])


def cnp(z: Ordinal, x: Ordinal) -> Ordinal:
    """The largest partial Cantor normal form sum of x that is <= z."""
    best = ZERO
    acc = ZERO
    for t in x.terms:
        acc = add(acc, _single(t))
        if _cmp(acc, z) > 0:
            break
        best = acc
    return best


def sim(a: Ordinal, b: Ordinal, g: Ordinal) -> bool:
    """Whether a and b project onto the same partial sum of g."""
    return cnp(a, g) is cnp(b, g)


# --- Veblen hierarchy -------------------------------------------------------

@lru_cache(maxsize=None)
def veblen(a: Ordinal, b: Ordinal) -> Ordinal:
    """The value phi_a(b), collapsed when b is a fixpoint of phi_a."""
    if len(b.terms) == 1:
        c, _ = b.terms[0]
        if _cmp(c, a) > 0:
            return b
    return _single((a, b))


def omega_power(x: Ordinal) -> Ordinal:
    """The value omega^x."""
    return veblen(ZERO, x)


def _strip_one(g: Ordinal) -> Ordinal:
    # inverse of b |-> 1 + b on positive ordinals: decrements a positive
    # natural, fixes anything infinite
    if g.terms[0] is _UNIT:
        return _make(g.terms[1:])
    return g


def e_enum(m: Ordinal, g: Ordinal) -> Ordinal:
    """The g-th element of the m-th level of the hyperexponential hierarchy.

    Level 0 enumerates {0} union {omega^(1+a)}; level m enumerates the
    common fixpoints of all lower levels.  Every level sends 0 to 0.
    """
    if not g.terms:
        return ZERO
    if not m.terms:
        return veblen(ZERO, g)
    return veblen(m, _strip_one(g))


# --- hyperexponentials ------------------------------------------------------

@lru_cache(maxsize=None)
def hyperexp(xi: Ordinal, g: Ordinal) -> Ordinal:
    """e^xi(g): hyperexponentials compose as e^(x+y) = e^x . e^y.

    With xi = omega^x1 + ... + omega^xn in Cantor normal form this is the
    level-x1 function applied last, so the terms of xi are applied right
    to left.
    """
    v = g
    for t in reversed(xi.terms):
        if not v.terms:
            return ZERO
        v = e_enum(_term_exponent(t), v)
    return v


@lru_cache(maxsize=None)
def hyperexp_factor(g: Ordinal) -> Tuple[Ordinal, Ordinal]:
    """The maximal (alpha, zeta) with g = hyperexp(alpha, zeta), g > 0.

    Naturals above 0 and decomposable ordinals only factor trivially.
    omega^b peels one level-0 application off b; phi_a(b) with a >= 1 is
    the level-a image of 1 + b, peeling omega^a.
    """
    if not g.terms:
        raise ZeroInput("hyperexp_factor(0): every e^alpha maps 0 to 0")
    if len(g.terms) > 1 or g.terms[0] is _UNIT:
        return (ZERO, g)
    a, b = g.terms[0]
    if not a.terms:
        alpha, zeta = hyperexp_factor(b)
        return (add(ONE, alpha), zeta)
    alpha, zeta = hyperexp_factor(add(ONE, b))
    return (add(omega_power(a), alpha), zeta)


def _hyperlog_piece(rho: Ordinal, g: Ordinal) -> Ordinal:
    # l^(omega^rho) on g, driven by the maximal factorization g = e^alpha(z):
    # with omega^a1 the lead term of alpha, g is a fixpoint when rho < a1,
    # the factor cancels exactly when rho = a1, and otherwise the same
    # hyperlogarithm applies to the strictly smaller e^(alpha - omega^a1)(z).
    while True:
        if not g.terms:
            return ZERO
        last = g.terms[-1]
        if last is _UNIT:
            return ZERO
        g = _single(last)
        alpha, zeta = hyperexp_factor(g)
        a1 = _term_exponent(alpha.terms[0])
        k = _cmp(rho, a1)
        if k < 0:
            return g
        inner = hyperexp(_make(alpha.terms[1:]), zeta)
        if k == 0:
            return inner
        g = inner


@lru_cache(maxsize=None)
def hyperlog(xi: Ordinal, g: Ordinal) -> Ordinal:
    """l^xi(g): the left adjoint of hyperexp at the same index.

    Cohyperations compose in reversed order, so the lead term of xi acts
    first.  Every positive index sends naturals to 0 and sees only the
    last Cantor normal form term of its argument.
    """
    for t in xi.terms:
        if not g.terms:
            return ZERO
        g = _hyperlog_piece(_term_exponent(t), g)
    return g


# --- weak hyperexponential normal form --------------------------------------

@dataclass(frozen=True)
class WhnfView:
    """x as e^(a_1)(b_1) + ... + e^(a_k)(b_k) + nat with omega-power a_i.

    The decomposition with every exponent an omega-power and every
    argument below its own image is unique.
    """

    terms: Tuple[Term, ...]  # (exponent, argument) pairs, exponents omega-powers
    nat: int

    def reassemble(self) -> Ordinal:
        total = ZERO
        for exponent, argument in self.terms:
            total = add(total, hyperexp(exponent, argument))
        return add(total, from_int(self.nat))


def whnf(x: Ordinal) -> WhnfView:
    """The weak hyperexponential normal form of x.

    Each Veblen term phi_a(b) with a >= 1 contributes e^(omega^a)(1 + b),
    each omega^b with b > 0 contributes e^1(b), and the 1 terms pool into
    the trailing natural.
    """
    nat = natural_part(x)
    out = []
    for a, b in x.terms[: len(x.terms) - nat]:
        if not a.terms:
            out.append((ONE, b))
        else:
            out.append((omega_power(a), add(ONE, b)))
    return WhnfView(tuple(out), nat)
