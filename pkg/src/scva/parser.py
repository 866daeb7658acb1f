"""Textual expression language for states.

Grammar (whitespace separated, no precedence):

    state  := "0" | term (("+"|"-") term)*
    term   := [rational] mode* "|0>"
    mode   := name digits "_" "{" rational "}"
    name   := "a" | "b" | "c" | "phi" | "psi"

Only creation modes are allowed inside a ket.  `parse_state` canonicalizes
(reordering fermions with signs), so format(parse(s)) is the canonical form
and parse(format(s)) is the identity.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .space import BOSON, FERMION, Mode, SpaceError, check_mode, is_creation, mode_name
from .state import State, make_state

_TOKEN = re.compile(r"""
    (?P<WS>\s+)
  | (?P<KET>\|0>)
  | (?P<MODE>(?:phi|psi|a|b|c)\d+_\{-?\d+(?:/\d+)?\})
  | (?P<RAT>-?\d+(?:/\d+)?)
  | (?P<SIGN>[+-])
""", re.VERBOSE)

_MODE = re.compile(r"(phi|psi|a|b|c)(\d+)_\{(-?\d+(?:/\d+)?)\}")

_NAMES = {"a": (BOSON, 0), "b": (BOSON, 0), "c": (BOSON, 1),
          "phi": (FERMION, 0), "psi": (FERMION, 1)}


class ParseError(ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def _tokenize(text):
    toks, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "WS":
            toks.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return toks


def _mode_from_token(space, tok, offset):
    name, gen, idx = _MODE.fullmatch(tok).groups()
    if name == "a" and space.polarized:
        raise ParseError("generator 'a' needs an orthonormal space", offset)
    if name in ("b", "c", "psi") and not space.polarized:
        raise ParseError(f"generator {name!r} needs a polarized space", offset)
    fam, tag = _NAMES[name]
    idx2 = 2 * Fraction(idx)
    if idx2.denominator != 1:
        raise ParseError(f"mode index {idx} is not a half-integer", offset)
    m = Mode(fam, tag, int(gen), int(idx2))
    try:
        check_mode(space, m)
    except SpaceError as e:
        raise ParseError(str(e), offset) from None
    if not is_creation(space, m):
        raise ParseError(f"annihilation mode {tok} not allowed in a ket", offset)
    return m


def parse_state(text, space) -> State:
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty expression", 0)
    if len(toks) == 1 and toks[0][:2] == ("RAT", "0"):
        return State()
    out = State()
    i = 0
    first = True
    while i < len(toks):
        sign = 1
        if toks[i][0] == "SIGN":
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-' between terms", toks[i][2])
        first = False
        coeff = Fraction(sign)
        if i < len(toks) and toks[i][0] == "RAT":
            coeff = sign * Fraction(toks[i][1])
            i += 1
        modes = []
        while i < len(toks) and toks[i][0] == "MODE":
            modes.append(_mode_from_token(space, toks[i][1], toks[i][2]))
            i += 1
        if i >= len(toks) or toks[i][0] != "KET":
            off = toks[i][2] if i < len(toks) else len(text)
            raise ParseError("expected '|0>'", off)
        i += 1
        out = out + make_state(space, (coeff, modes))
    return out


def _fmt_rat(c: Fraction) -> str:
    return str(c)


def _fmt_mode(space, m: Mode) -> str:
    return f"{mode_name(space, m)}_{{{Fraction(m.idx2, 2)}}}"


def format_state(space, state: State) -> str:
    """Canonical text form; deterministic term order, rationals as p/q."""
    if state.is_zero():
        return "0"
    parts = []
    for mono in sorted(state.terms):
        c = state.terms[mono]
        body = " ".join(_fmt_mode(space, m) for m in mono)
        mag = abs(c)
        coeff = "" if mag == 1 else _fmt_rat(mag) + " "
        term = f"{coeff}{body} |0>" if body else f"{coeff}|0>"
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts)
