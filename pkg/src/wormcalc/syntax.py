"""Concrete syntax for ordinals and worms.

The ASCII grammar, whitespace-insensitive between tokens:

    ord  := "0" | NAT | "w" | "w^(" ord ")" | ord "+" ord
          | "phi(" ord "," ord ")" | "e[" ord "](" ord ")"
    worm := "T" | ord ("." ord)*

There is no coefficient syntax; sums are written out.  "e[x](g)" is the
hyperexponential e^x(g) and is evaluated during parsing, so the parse
result is always a canonical ordinal.  "T" is the empty worm.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from . import ordinal
from .ordinal import Ordinal

Worm = Tuple[Ordinal, ...]

_WORDS = ("w", "phi", "e", "T")
_SYMBOLS = "+^()[],."


class ParseError(ValueError):
    """Malformed input; ``position`` is the 1-based offending column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# --- tokenizer --------------------------------------------------------------

class _Tokens:
    def __init__(self, text: str):
        self.toks: List[Tuple[str, str, int]] = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            start = i
            if ch.isdigit():
                while i < n and text[i].isdigit():
                    i += 1
                self.toks.append(("nat", text[start:i], start + 1))
            elif ch.isalpha():
                while i < n and text[i].isalpha():
                    i += 1
                word = text[start:i]
                if word not in _WORDS:
                    raise ParseError(f"unknown name {word!r}", start + 1)
                self.toks.append((word, word, start + 1))
            elif ch in _SYMBOLS:
                self.toks.append((ch, ch, start + 1))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", start + 1)
        self.end_pos = n + 1
        self.k = 0

    def peek(self) -> Optional[str]:
        return self.toks[self.k][0] if self.k < len(self.toks) else None

    def next(self, what: str) -> Tuple[str, str, int]:
        if self.k >= len(self.toks):
            raise ParseError(f"expected {what}, found end of input", self.end_pos)
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def expect(self, kind: str) -> None:
        tok = self.next(f"'{kind}'")
        if tok[0] != kind:
            raise ParseError(f"expected '{kind}', found {tok[1]!r}", tok[2])

    def expect_end(self) -> None:
        if self.k < len(self.toks):
            tok = self.toks[self.k]
            raise ParseError(f"unexpected trailing {tok[1]!r}", tok[2])


# --- parsing ----------------------------------------------------------------

def _atom(t: _Tokens) -> Ordinal:
    kind, value, pos = t.next("an ordinal")
    if kind == "nat":
        return ordinal.from_int(int(value))
    if kind == "w":
        if t.peek() == "^":
            t.expect("^")
            t.expect("(")
            x = _ord(t)
            t.expect(")")
            return ordinal.omega_power(x)
        return ordinal.OMEGA
    if kind == "phi":
        t.expect("(")
        a = _ord(t)
        t.expect(",")
        b = _ord(t)
        t.expect(")")
        return ordinal.veblen(a, b)
    if kind == "e":
        t.expect("[")
        xi = _ord(t)
        t.expect("]")
        t.expect("(")
        g = _ord(t)
        t.expect(")")
        return ordinal.hyperexp(xi, g)
    raise ParseError(f"expected an ordinal, found {value!r}", pos)


def _ord(t: _Tokens) -> Ordinal:
    x = _atom(t)
    while t.peek() == "+":
        t.expect("+")
        x = ordinal.add(x, _atom(t))
    return x


def parse_ordinal(text: str) -> Ordinal:
    """Parse an ordinal expression; raises ParseError with a position."""
    t = _Tokens(text)
    x = _ord(t)
    t.expect_end()
    return x


def parse_worm(text: str) -> Worm:
    """Parse a worm: "T" or "."-separated ordinal modalities, leftmost first."""
    t = _Tokens(text)
    if t.peek() == "T":
        t.expect("T")
        t.expect_end()
        return ()
    mods = [_ord(t)]
    while t.peek() == ".":
        t.expect(".")
        mods.append(_ord(t))
    t.expect_end()
    return tuple(mods)


# --- printing ---------------------------------------------------------------

def _term_str(term) -> str:
    a, b = term
    if not a.terms:
        if not b.terms:
            return "1"
        if b is ordinal.ONE:
            return "w"
        return f"w^({_sum_str(b)})"
    return f"phi({_sum_str(a)},{_sum_str(b)})"


def _sum_str(x: Ordinal) -> str:
    if not x.terms:
        return "0"
    nat = ordinal.natural_part(x)
    parts = [_term_str(t) for t in x.terms[: len(x.terms) - nat]]
    if nat:
        parts.append(str(nat))
    return " + ".join(parts)


def _whnf_str(x: Ordinal) -> str:
    view = ordinal.whnf(x)
    parts = [f"e[{_sum_str(e)}]({_sum_str(g)})" for e, g in view.terms]
    if view.nat or not parts:
        parts.append(str(view.nat))
    return " + ".join(parts)


def print_ordinal(x: Ordinal, style: str = "sum") -> str:
    """Render an ordinal; both styles re-parse to the same value."""
    if style == "sum":
        return _sum_str(x)
    if style == "whnf":
        return _whnf_str(x)
    raise ValueError(f"unknown style {style!r}")


def print_worm(worm: Worm) -> str:
    """Render a worm in dotted form; the empty worm prints as "T"."""
    if not worm:
        return "T"
    return ".".join(_sum_str(m) for m in worm)
