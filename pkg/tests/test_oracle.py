"""The oracle must pass on honest code and fail on corrupted code."""

import pytest

from wormcalc import oracle, ordinal
from wormcalc import worm as worms
from wormcalc.oracle import (
    CheckResult,
    TooLarge,
    enumerate_worms,
    sample_ordinals,
    verify_ordinal_grid,
    verify_universe,
)
from wormcalc.syntax import parse_worm as W

ZERO, ONE, TWO = ordinal.ZERO, ordinal.ONE, ordinal.from_int(2)


def test_enumerate_counts():
    universe = enumerate_worms((ZERO, ONE, TWO), 5)
    assert len(universe.worms) == 364
    assert universe.worms[0] == ()
    assert universe.worms[1:4] == ((ZERO,), (ONE,), (TWO,))
    assert len(set(universe.worms)) == 364
    assert max(len(w) for w in universe.worms) == 5


def test_enumerate_deduplicates_and_sorts_alphabet():
    universe = enumerate_worms((ONE, ZERO, ONE), 1)
    assert universe.alphabet == (ZERO, ONE)
    assert universe.worms == ((), (ZERO,), (ONE,))


def test_enumerate_caps():
    with pytest.raises(TooLarge):
        enumerate_worms((ZERO,), 9)
    with pytest.raises(TooLarge):
        enumerate_worms(tuple(ordinal.from_int(k) for k in range(6)), 8)


def test_sample_ordinals_deterministic_and_bounded():
    xs = sample_ordinals(80)
    assert xs == sample_ordinals(80)
    assert len(set(xs)) == 80
    bound = ordinal.veblen(TWO, ZERO)
    assert all(x < bound for x in xs)
    assert sample_ordinals(10, seed=5) != sample_ordinals(10, seed=6)


def test_universe_report_passes():
    universe = enumerate_worms((ZERO, ONE), 3)
    report = verify_universe(universe, (ZERO, ONE, TWO))
    assert report.passed
    assert all(c.counterexample is None for c in report.checks)
    assert "all passing" in report.render()


def test_grid_report_passes():
    report = verify_ordinal_grid(samples=12, seed=7)
    assert report.passed


def test_check_line_format():
    assert CheckResult("demo", True, 10, 0.5).line() == (
        "PASS demo: 10 instances in 0.50s"
    )
    bad = CheckResult("demo", False, 3, 0.01, "boom").line()
    assert bad.startswith("FAIL demo: 3 instances")
    assert "counterexample: boom" in bad


def test_corrupted_order_type_is_caught(monkeypatch):
    target = W("1.0")
    real = worms.order_type.__wrapped__

    def corrupted(w):
        value = real(w)
        if w == target:
            return ordinal.add(value, ONE)
        return value

    monkeypatch.setattr(worms, "order_type", corrupted)
    try:
        universe = enumerate_worms((ZERO, ONE), 3)
        report = verify_universe(universe, (ZERO, ONE))
    finally:
        monkeypatch.undo()
        worms.is_bnf.cache_clear()
        worms.worm_of_ordinal.cache_clear()
    assert not report.passed
    failing = [c for c in report.checks if not c.passed]
    assert failing
    assert any(c.counterexample for c in failing)


def test_corrupted_hyperlog_is_caught(monkeypatch):
    real = ordinal.hyperlog.__wrapped__
    poisoned = ordinal.omega_power(ordinal.OMEGA)

    def corrupted(xi, g):
        if xi is ONE and g is poisoned:
            return ONE
        return real(xi, g)

    monkeypatch.setattr(ordinal, "hyperlog", corrupted)
    try:
        universe = enumerate_worms((ZERO, ONE, TWO), 3)
        report = verify_universe(universe, (ZERO, ONE))
    finally:
        monkeypatch.undo()
    assert not report.passed
    names = [c.name for c in report.checks if not c.passed]
    assert "omega_three_routes" in names
