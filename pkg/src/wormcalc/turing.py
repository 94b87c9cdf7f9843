"""Symbolic Turing progression schedules for worms with finite modalities.

For a base theory T and a worm A whose modalities are all naturals, the
finitely axiomatized theory T + A matches a finite union of Turing
progressions: it proves the same sentences as the union over n of the
n-iterated consistency progression of T taken up to the coordinate
omega(n, A), and level by level it is conservative over that progression
extended by the remainder r_n(A).  Everything here is symbolic ordinal
bookkeeping; no arithmetic is verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from . import ordinal, worm as worms
from .ordinal import Ordinal
from .worm import Worm

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


class ModalityTooLarge(ValueError):
    """The worm has a modality >= omega; progressions need finite levels."""


def _require_finite(worm: Worm) -> None:
    for m in worm:
        if ordinal.as_int(m) is None:
            raise ModalityTooLarge(
                f"modalities of {worms.print_them(worm)} must all be below omega"
            )


def _worm_text(worm: Worm) -> str:
    # report rendering only: the empty worm reads as verum
    return worms.print_them(worm) if worm else "⊤"


def _extent_text(x: Ordinal) -> str:
    from .syntax import print_ordinal

    text = print_ordinal(x)
    return f"({text})" if " " in text else text


def _progression_text(level: int, extent: Ordinal) -> str:
    if not extent.terms:
        return "T"
    return f"T{str(level).translate(_SUPERSCRIPTS)}_{_extent_text(extent)}"


@dataclass(frozen=True)
class ScheduleEntry:
    level: int
    extent: Ordinal
    remainder: Worm


@dataclass(frozen=True)
class Schedule:
    """The per-level extents of the progressions matching T + worm.

    Entries exist exactly for the levels with positive extent; extents
    weakly decrease and level 0 carries the full order type.
    """

    worm: Worm
    entries: Tuple[ScheduleEntry, ...]

    def extent_at(self, level: int) -> Ordinal:
        for entry in self.entries:
            if entry.level == level:
                return entry.extent
        return ordinal.ZERO

    def statement(self) -> str:
        parts = [_progression_text(e.level, e.extent) for e in self.entries]
        rhs = " ∪ ".join(parts) if parts else "T"
        return f"T + {_worm_text(self.worm)} ≡ {rhs}"

    def render(self) -> str:
        lines = [self.statement()]
        for e in self.entries:
            lines.append(
                f"  level {e.level}: extent {_extent_text(e.extent)}, "
                f"remainder {_worm_text(e.remainder)}"
            )
        lines.append(
            "assuming T is a Π⁰₁ axiomatizable elementary "
            "representable theory containing EA⁺"
        )
        return "\n".join(lines)


def schedule(worm: Worm) -> Schedule:
    """All positive coordinates of the omega sequence at finite levels.

    Integer coordinates step by the last exponent, so the extents are
    the iterated last exponents of the order type.
    """
    _require_finite(worm)
    entries = []
    level, extent = 0, worms.order_type(worm)
    while extent.terms:
        entries.append(
            ScheduleEntry(level, extent, worms.remainder(ordinal.from_int(level), worm))
        )
        level, extent = level + 1, ordinal.last_exponent(extent)
    return Schedule(worm, tuple(entries))


@dataclass(frozen=True)
class ConservativityReport:
    """T + worm proves the same Pi_(level+1) sentences as the right side."""

    worm: Worm
    level: int
    extent: Ordinal
    remainder: Worm

    def statement(self) -> str:
        rhs = _progression_text(self.level, self.extent)
        if self.remainder:
            rhs += f" + {_worm_text(self.remainder)}"
        equiv = f"≡{str(self.level).translate(_SUBSCRIPTS)}"
        return f"T + {_worm_text(self.worm)} {equiv} {rhs}"

    def render(self) -> str:
        n = self.level
        return "\n".join(
            [
                self.statement(),
                f"  (≡{str(n).translate(_SUBSCRIPTS)}: the theories prove "
                f"exactly the same Π_{n + 1} sentences)",
                f"assuming T is an elementary presented theory containing "
                f"EA⁺ whose axioms have logical complexity at most Π_{n + 1}",
            ]
        )


def conservativity(worm: Worm, level: int) -> ConservativityReport:
    """The level-n conservation statement for T + worm."""
    _require_finite(worm)
    if level < 0:
        raise ValueError("level must be a natural number")
    n = ordinal.from_int(level)
    return ConservativityReport(
        worm, level, worms.omega(n, worm), worms.remainder(n, worm)
    )
