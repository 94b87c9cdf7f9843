"""Exhaustive and randomized cross-checks of the calculus.

Two harnesses are provided.  ``verify_universe`` enumerates every worm
over a small modality alphabet and confronts the implemented order
decisions, order types and omega coordinates with independently coded
routes over all pairs.  ``verify_ordinal_grid`` replays the algebraic
laws of the ordinal layer (composition, adjunction, cancellation,
normal forms) on a seeded pseudorandom sample of ordinals.

Routes that are supposed to agree are always computed by separate
functions; nothing here calls the code path it is checking a second
time.  Reports carry the first counterexample of each failing check so
a deliberate corruption of a single value is caught and named.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from . import ordinal, worm as worms
from .ordinal import ONE, OMEGA, ZERO, Ordinal
from .syntax import print_ordinal, print_worm
from .worm import Worm

MAX_LENGTH_CAP = 8
MAX_WORM_COUNT = 500_000
DEFAULT_SEED = 20260823


class TooLarge(ValueError):
    """The requested universe exceeds the enumeration caps."""


# --- universes --------------------------------------------------------------

@dataclass(frozen=True)
class Universe:
    """All worms over an alphabet up to a length, in length-lex order."""

    alphabet: Tuple[Ordinal, ...]
    max_length: int
    worms: Tuple[Worm, ...]


def enumerate_worms(alphabet: Iterable[Ordinal], max_length: int) -> Universe:
    """Every worm over the alphabet with length <= max_length.

    Worms are ordered by length, then lexicographically by modality.
    """
    letters = tuple(sorted(set(alphabet)))
    if not letters:
        raise ValueError("alphabet must be nonempty")
    if max_length < 0:
        raise ValueError("max_length must be a natural number")
    if max_length > MAX_LENGTH_CAP:
        raise TooLarge(f"max_length {max_length} exceeds cap {MAX_LENGTH_CAP}")
    count = sum(len(letters) ** k for k in range(max_length + 1))
    if count > MAX_WORM_COUNT:
        raise TooLarge(f"universe of {count} worms exceeds cap {MAX_WORM_COUNT}")
    all_worms = tuple(
        tuple(p)
        for k in range(max_length + 1)
        for p in itertools.product(letters, repeat=k)
    )
    return Universe(letters, max_length, all_worms)


# --- reports ----------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    checked: int
    seconds: float
    counterexample: Optional[str] = None

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        out = f"{verdict} {self.name}: {self.checked} instances in {self.seconds:.2f}s"
        if self.counterexample is not None:
            out += f"  counterexample: {self.counterexample}"
        return out


@dataclass(frozen=True)
class VerifyReport:
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [c.line() for c in self.checks]
        bad = sum(1 for c in self.checks if not c.passed)
        lines.append(
            f"{len(self.checks)} checks, {bad} failing"
            if bad
            else f"{len(self.checks)} checks, all passing"
        )
        return "\n".join(lines)


def _run(name: str, cases: Iterator[Tuple[bool, Callable[[], str]]]) -> CheckResult:
    t0 = time.perf_counter()
    checked = 0
    for ok, describe in cases:
        checked += 1
        if not ok:
            return CheckResult(name, False, checked, time.perf_counter() - t0, describe())
    return CheckResult(name, True, checked, time.perf_counter() - t0, None)


# --- independent order decision ---------------------------------------------

class _OrderRoute:
    """Decides B <_xi A by a flat unfolding of the reduction stages.

    Stage 0 compares the xi-heads of B and A through their demoted order
    types; every later stage drops to the lead modality of what remains
    of B and compares the corresponding heads against A again.  All order
    types are memoized per instance, so a fresh route never reuses state
    from the functions under test beyond the order type calculus itself.
    """

    def __init__(self) -> None:
        self._o: Dict[Worm, Ordinal] = {}
        self._head_val: Dict[Tuple[Ordinal, Worm], Ordinal] = {}

    def o(self, w: Worm) -> Ordinal:
        v = self._o.get(w)
        if v is None:
            v = worms.order_type(w)
            self._o[w] = v
        return v

    def head_value(self, xi: Ordinal, w: Worm) -> Ordinal:
        key = (xi, w)
        v = self._head_val.get(key)
        if v is None:
            v = self.o(worms.demote(xi, worms.head(xi, w)))
            self._head_val[key] = v
        return v

    def below(self, xi: Ordinal, b: Worm, a: Worm) -> bool:
        level, segment = xi, b
        while True:
            if not self.head_value(level, segment) < self.head_value(level, a):
                return False
            rest = worms.remainder(level, segment)
            if not rest:
                return True
            level, segment = rest[0], rest[1:]


# --- universe verification --------------------------------------------------

def verify_universe(universe: Universe, xis: Sequence[Ordinal]) -> VerifyReport:
    """Run every pairwise coherence check over the universe.

    xis are the orders <_xi to compare; order types, omega coordinates
    and normal forms are checked for all worms regardless of xis.
    """
    ws = universe.worms
    n = len(ws)
    route = _OrderRoute()
    o_vals = [route.o(w) for w in ws]
    checks: List[CheckResult] = []

    def linear_on_fragment() -> Iterator:
        # <_xi is only total on worms whose modalities all reach xi; the
        # verdict there must match the restricted order types.
        for xi in xis:
            inside = [w for w in ws if all(m >= xi for m in w)]
            at = {w: worms.order_type_at(xi, w) for w in inside}
            for a in inside:
                for b in inside:
                    got = worms.compare_at(xi, a, b)
                    k = ordinal._cmp(at[a], at[b])
                    want = (
                        worms.LEFT_BELOW
                        if k < 0
                        else (worms.EQUIVALENT if k == 0 else worms.RIGHT_BELOW)
                    )
                    yield got == want, lambda xi=xi, a=a, b=b, got=got, want=want: (
                        f"compare_at({print_ordinal(xi)}, {print_worm(a)}, "
                        f"{print_worm(b)}) = {got}, restricted order types say {want}"
                    )

    checks.append(_run("order_total_on_fragment", linear_on_fragment()))

    impl: Dict[Ordinal, List[int]] = {}
    iter_: Dict[Ordinal, List[int]] = {}

    # both routes fill full relation matrices first; the agreement check
    # then compares them bit for bit, so it covers both directions of the
    # reduction biconditional on every ordered pair
    def fill_relations() -> None:
        for xi in xis:
            impl_rows = [0] * n
            iter_rows = [0] * n
            for i in range(n):
                irow = 0
                for j in range(n):
                    got = worms.compare_at(xi, ws[i], ws[j])
                    if got == worms.LEFT_BELOW:
                        impl_rows[i] |= 1 << j
                    if route.below(xi, ws[i], ws[j]):
                        irow |= 1 << j
                iter_rows[i] = irow
            impl[xi] = impl_rows
            iter_[xi] = iter_rows

    t0 = time.perf_counter()
    fill_relations()
    fill_seconds = time.perf_counter() - t0

    def agreement() -> Iterator:
        for xi in xis:
            for i in range(n):
                diff = impl[xi][i] ^ iter_[xi][i]
                for j in range(n):
                    ok = not (diff >> j & 1)
                    yield ok, lambda xi=xi, i=i, j=j: (
                        f"below({print_ordinal(xi)}, {print_worm(ws[i])}, "
                        f"{print_worm(ws[j])}): reduction recursion says "
                        f"{bool(impl[xi][i] >> j & 1)}, staged unfolding says "
                        f"{bool(iter_[xi][i] >> j & 1)}"
                    )

    agreement_result = _run("reduction_lemma_agreement", agreement())
    agreement_result = CheckResult(
        agreement_result.name,
        agreement_result.passed,
        agreement_result.checked,
        agreement_result.seconds + fill_seconds,
        agreement_result.counterexample,
    )
    checks.append(agreement_result)

    def irreflexive() -> Iterator:
        for xi in xis:
            for i in range(n):
                yield not (iter_[xi][i] >> i & 1), lambda xi=xi, i=i: (
                    f"{print_worm(ws[i])} <_{print_ordinal(xi)} itself"
                )

    checks.append(_run("order_irreflexive", irreflexive()))

    def transitive() -> Iterator:
        for xi in xis:
            rows = iter_[xi]
            for i in range(n):
                succ = rows[i]
                j = 0
                rest = succ
                while rest:
                    if rest & 1 and rows[j] & ~succ:
                        bad = (rows[j] & ~succ).bit_length() - 1
                        yield False, lambda xi=xi, i=i, j=j, bad=bad: (
                            f"{print_worm(ws[bad])} <_{print_ordinal(xi)} "
                            f"{print_worm(ws[j])} <_{print_ordinal(xi)} "
                            f"{print_worm(ws[i])} but not transitively"
                        )
                    rest >>= 1
                    j += 1
                yield True, _NO_DESCRIPTION

    checks.append(_run("order_transitive", transitive()))

    def acyclic() -> Iterator:
        for xi in xis:
            closure = list(iter_[xi])
            for k in range(n):
                bit = 1 << k
                row_k = closure[k]
                for i in range(n):
                    if closure[i] & bit:
                        closure[i] |= row_k
            for i in range(n):
                yield not (closure[i] >> i & 1), lambda xi=xi, i=i: (
                    f"{print_worm(ws[i])} sits on a <_{print_ordinal(xi)} cycle"
                )

    checks.append(_run("order_acyclic", acyclic()))

    def omega_routes() -> Iterator:
        for i, w in enumerate(ws):
            seq = worms.omega_sequence(w)
            for xi in xis:
                r1 = worms.omega(xi, w)
                r2 = worms.order_type_at(xi, worms.head(xi, w))
                r3 = seq.value_at(xi)
                ok = r1 is r2 is r3
                yield ok, lambda w=w, xi=xi, r1=r1, r2=r2, r3=r3: (
                    f"omega({print_ordinal(xi)}, {print_worm(w)}): hyperlog "
                    f"route {print_ordinal(r1)}, head route {print_ordinal(r2)}, "
                    f"sequence route {print_ordinal(r3)}"
                )

    checks.append(_run("omega_three_routes", omega_routes()))

    def normalize_sound() -> Iterator:
        for i, w in enumerate(ws):
            nf = worms.normalize(w)
            ok = (
                worms.is_bnf(nf)
                and worms.order_type(nf) is o_vals[i]
                and worms.normalize(nf) == nf
            )
            yield ok, lambda w=w, nf=nf: (
                f"normalize({print_worm(w)}) = {print_worm(nf)} is not a sound "
                f"normal form"
            )

    checks.append(_run("normalize_sound", normalize_sound()))

    def images_bnf() -> Iterator:
        seen = set()
        for v in o_vals:
            if v in seen:
                continue
            seen.add(v)
            image = worms.worm_of_ordinal(v)
            ok = worms.is_bnf(image) and worms.order_type(image) is v
            yield ok, lambda v=v, image=image: (
                f"worm_of_ordinal({print_ordinal(v)}) = {print_worm(image)} "
                f"is not a normal form with that order type"
            )

    checks.append(_run("worm_of_ordinal_bnf", images_bnf()))

    return VerifyReport(tuple(checks))


def _NO_DESCRIPTION() -> str:
    return "unreachable"


# --- seeded ordinal sampling ------------------------------------------------

def _random_ordinal(rng: random.Random, depth: int) -> Ordinal:
    r = rng.random()
    if depth >= 3 or r < 0.30:
        return ordinal.from_int(rng.randrange(6))
    if r < 0.55:
        return ordinal.omega_power(_random_ordinal(rng, depth + 1))
    if r < 0.70:
        return ordinal.veblen(ONE, _random_ordinal(rng, depth + 1))
    parts = [_random_ordinal(rng, depth + 1) for _ in range(rng.randrange(2, 4))]
    return ordinal.add_all(*parts)

def sample_ordinals(
    count: int, seed: int = DEFAULT_SEED, bound: Optional[Ordinal] = None
) -> Tuple[Ordinal, ...]:
    """count distinct pseudorandom ordinals below bound (default phi(2,0)).

    Deterministic for a fixed seed; the generator only emits Veblen
    levels 0 and 1, so everything stays below phi(2,0) by construction.
    """
    if bound is None:
        bound = ordinal.veblen(ordinal.from_int(2), ZERO)
    rng = random.Random(seed)
    out: List[Ordinal] = []
    seen = set()
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * count:
            raise ValueError(f"could not find {count} distinct ordinals below bound")
        x = _random_ordinal(rng, 0)
        if x not in seen and ordinal._cmp(x, bound) < 0:
            seen.add(x)
            out.append(x)
    return tuple(out)


# --- ordinal law verification -----------------------------------------------

def verify_ordinal_grid(
    bound: Optional[Ordinal] = None, samples: int = 50, seed: int = DEFAULT_SEED
) -> VerifyReport:
    """Replay the ordinal-layer laws on a seeded sample grid.

    Pairwise laws run over the full samples x samples grid; laws with a
    third quantifier draw it deterministically from the sample by index
    rotation.
    """
    s = sample_ordinals(samples, seed, bound)
    n = len(s)

    def third(i: int, j: int) -> Ordinal:
        return s[(7 * i + 3 * j + 1) % n]

    def fmt(*xs: Ordinal) -> str:
        return ", ".join(print_ordinal(x) for x in xs)

    checks: List[CheckResult] = []

    def total_order() -> Iterator:
        for i in range(n):
            for j in range(n):
                x, y, z = s[i], s[j], third(i, j)
                k1, k2 = ordinal._cmp(x, y), ordinal._cmp(y, x)
                ok = k1 == -k2 and (k1 == 0) == (x is y)
                if ok and x <= y and y <= z:
                    ok = x <= z
                yield ok, lambda x=x, y=y, z=z: f"comparison broken on {fmt(x, y, z)}"

    checks.append(_run("compare_total_order", total_order()))

    def add_assoc() -> Iterator:
        for i in range(n):
            for j in range(n):
                x, y, z = s[i], s[j], third(i, j)
                ok = ordinal.add(ordinal.add(x, y), z) is ordinal.add(x, ordinal.add(y, z))
                yield ok, lambda x=x, y=y, z=z: f"add not associative on {fmt(x, y, z)}"

    checks.append(_run("add_associative", add_assoc()))

    def sub_inverts() -> Iterator:
        for i in range(n):
            for j in range(n):
                x, y = s[i], s[j]
                ok = ordinal.left_sub(x, ordinal.add(x, y)) is y
                if ok and x <= y:
                    ok = ordinal.add(x, ordinal.left_sub(x, y)) is y
                yield ok, lambda x=x, y=y: f"left_sub does not invert add on {fmt(x, y)}"

    checks.append(_run("left_sub_inverts_add", sub_inverts()))

    def hyperexp_ends() -> Iterator:
        for x in s:
            ok = (
                ordinal.hyperexp(x, ZERO) is ZERO
                and ordinal.hyperexp(ZERO, x) is x
            )
            yield ok, lambda x=x: f"hyperexp unit/zero law broken at {fmt(x)}"

    checks.append(_run("hyperexp_zero_and_identity", hyperexp_ends()))

    def hyperexp_compose() -> Iterator:
        for i in range(n):
            for j in range(n):
                x, y, g = s[i], s[j], third(i, j)
                lhs = ordinal.hyperexp(ordinal.add(x, y), g)
                rhs = ordinal.hyperexp(x, ordinal.hyperexp(y, g))
                yield lhs is rhs, lambda x=x, y=y, g=g: (
                    f"hyperexp composition broken on xi={fmt(x)}, zeta={fmt(y)}, "
                    f"gamma={fmt(g)}"
                )

    checks.append(_run("hyperexp_composition", hyperexp_compose()))

    def hyperexp_monotone() -> Iterator:
        for i in range(n):
            for j in range(n):
                g1, g2, xi = s[i], s[j], third(i, j)
                if not g1 < g2:
                    continue
                ok = ordinal.hyperexp(xi, g1) < ordinal.hyperexp(xi, g2)
                yield ok, lambda xi=xi, g1=g1, g2=g2: (
                    f"hyperexp({fmt(xi)}, .) not strictly monotone on {fmt(g1, g2)}"
                )

    checks.append(_run("hyperexp_strictly_monotone", hyperexp_monotone()))

    def level_match() -> Iterator:
        for i in range(n):
            for j in range(n):
                a, g = s[i], s[j]
                ok = ordinal.hyperexp(ordinal.omega_power(a), g) is ordinal.e_enum(a, g)
                yield ok, lambda a=a, g=g: (
                    f"hyperexp(w^({fmt(a)}), {fmt(g)}) differs from the level "
                    f"enumeration"
                )

    checks.append(_run("omega_power_exponents_are_levels", level_match()))

    def level_fixpoints() -> Iterator:
        for i in range(n):
            for j in range(n):
                a, b, g = s[i], s[j], third(i, j)
                if not a < b:
                    continue
                v = ordinal.e_enum(b, g)
                ok = ordinal.e_enum(a, v) is v
                yield ok, lambda a=a, b=b, g=g: (
                    f"e_enum({fmt(b)}, {fmt(g)}) is not a fixpoint of level {fmt(a)}"
                )

    checks.append(_run("higher_levels_are_fixpoints", level_fixpoints()))

    def limit_approx() -> Iterator:
        for b in s:
            base = ordinal.add(ordinal.hyperexp(OMEGA, b), ONE)
            bound_ = ordinal.hyperexp(OMEGA, ordinal.add(b, ONE))
            prev = base
            ok = True
            for k in range(1, 8):
                cur = ordinal.hyperexp(ordinal.from_int(k), base)
                if not (prev < cur and cur < bound_):
                    ok = False
                    break
                prev = cur
            yield ok, lambda b=b: (
                f"finite towers over e^w({fmt(b)})+1 do not climb strictly "
                f"below e^w({fmt(b)}+1)"
            )

    checks.append(_run("limit_level_approximation", limit_approx()))

    def hyperlog_compose() -> Iterator:
        for i in range(n):
            for j in range(n):
                x, y, g = s[i], s[j], third(i, j)
                lhs = ordinal.hyperlog(ordinal.add(x, y), g)
                rhs = ordinal.hyperlog(y, ordinal.hyperlog(x, g))
                yield lhs is rhs, lambda x=x, y=y, g=g: (
                    f"hyperlog composition broken on xi={fmt(x)}, zeta={fmt(y)}, "
                    f"gamma={fmt(g)}"
                )

    checks.append(_run("hyperlog_reversed_composition", hyperlog_compose()))

    def hyperlog_deflates() -> Iterator:
        for i in range(n):
            for j in range(n):
                x, g = s[i], s[j]
                yield ordinal.hyperlog(x, g) <= g, lambda x=x, g=g: (
                    f"hyperlog({fmt(x)}, {fmt(g)}) exceeds its argument"
                )

    checks.append(_run("hyperlog_deflationary", hyperlog_deflates()))

    def adjunction() -> Iterator:
        for i in range(n):
            for j in range(n):
                x, g, d = s[i], s[j], third(i, j)
                ok = ordinal.hyperlog(x, ordinal.hyperexp(x, g)) is g
                if ok and ordinal._cmp(g, ordinal.hyperexp(x, d)) < 0:
                    ok = ordinal.hyperlog(x, g) < d
                yield ok, lambda x=x, g=g, d=d: (
                    f"adjunction broken on xi={fmt(x)}, gamma={fmt(g)}, "
                    f"delta={fmt(d)}"
                )

    checks.append(_run("hyperlog_left_adjoint", adjunction()))

    def cancellation() -> Iterator:
        for i in range(n):
            for j in range(n):
                x, z, g = s[i], s[j], third(i, j)
                if not x < z:
                    continue
                gap = ordinal.left_sub(x, z)
                ok = (
                    ordinal.hyperlog(x, ordinal.hyperexp(z, g))
                    is ordinal.hyperexp(gap, g)
                )
                if ok:
                    ok = (
                        ordinal.hyperlog(z, ordinal.hyperexp(x, g))
                        is ordinal.hyperlog(gap, g)
                    )
                yield ok, lambda x=x, z=z, g=g: (
                    f"cancellation broken on xi={fmt(x)}, zeta={fmt(z)}, "
                    f"gamma={fmt(g)}"
                )

    checks.append(_run("hyperlog_cancels_hyperexp", cancellation()))

    def well_defined() -> Iterator:
        etas = (ONE, ordinal.from_int(2), ordinal.from_int(3), OMEGA)
        for g in s:
            for rho in (ONE, ordinal.from_int(2)):
                power = ordinal.omega_power(rho)
                expected = ordinal.hyperlog(power, g)
                for eta in etas:
                    if not eta < power:
                        continue
                    stepped = ordinal.hyperlog(eta, g)
                    if not stepped < g:
                        continue
                    ok = ordinal.hyperlog(power, stepped) is expected
                    yield ok, lambda g=g, rho=rho, eta=eta: (
                        f"hyperlog at w^({fmt(rho)}) disagrees after first "
                        f"stepping by {fmt(eta)} on {fmt(g)}"
                    )

    checks.append(_run("cohyperation_well_defined", well_defined()))

    def whnf_round() -> Iterator:
        for x in s:
            view = ordinal.whnf(x)
            ok = view.reassemble() is x
            if ok:
                for exponent, argument in view.terms:
                    one_term = len(exponent.terms) == 1
                    normal = argument < ordinal.hyperexp(exponent, argument)
                    if not (one_term and normal):
                        ok = False
                        break
            yield ok, lambda x=x: f"whnf round trip broken at {fmt(x)}"

    checks.append(_run("whnf_round_trip", whnf_round()))

    def factor_max() -> Iterator:
        small = s[: min(10, n)]
        for g in s:
            if not g.terms:
                continue
            alpha, zeta = ordinal.hyperexp_factor(g)
            ok = ordinal.hyperexp(alpha, zeta) is g
            if ok:
                for c in s:
                    if not alpha < c:
                        continue
                    if ordinal.hyperexp(c, ordinal.hyperlog(c, g)) is g:
                        ok = False
                        break
                    for z in small:
                        if ordinal.hyperexp(c, z) is g:
                            ok = False
                            break
                    if not ok:
                        break
            yield ok, lambda g=g, alpha=alpha, zeta=zeta: (
                f"hyperexp_factor({fmt(g)}) = ({fmt(alpha)}, {fmt(zeta)}) is "
                f"unsound or not maximal"
            )

    checks.append(_run("hyperexp_factor_maximal", factor_max()))

    return VerifyReport(tuple(checks))
