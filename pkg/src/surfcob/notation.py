"""
Surface expressions.

Grammar (whitespace between tokens is ignored)::

    surface := term ('+' term)*
    term    := atom ('#' atom)*
    atom    := 'S2' | 'T2' | 'RP2' | 'K2' | 'O' integer | 'N' positive-integer

``+`` is disjoint union and ``#`` is connected sum.
"""
from __future__ import annotations

import re
from functools import reduce
from typing import List, Tuple

from .surface import (
    KLEIN_BOTTLE,
    PROJECTIVE_PLANE,
    SPHERE,
    TORUS,
    Surface,
    SurfaceComponent,
    connected_sum,
    nonorientable,
    orientable,
)


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_ALIASES = {"S2": SPHERE, "T2": TORUS, "RP2": PROJECTIVE_PLANE, "K2": KLEIN_BOTTLE}
_TOKEN = re.compile(r"(?P<alias>RP2|S2|T2|K2)|(?P<kind>[ON])(?P<num>\d+)|(?P<op>[+#])")
_SPACE = re.compile(r"\s*")


def _tokenize(text: str) -> List[Tuple[str, object, int]]:
    """Tokens as ``(kind, value, byte_offset)``, terminated by an ``end`` token."""

    def offset(i: int) -> int:
        return len(text[:i].encode("utf-8"))

    tokens = []
    pos = _SPACE.match(text).end()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", offset(pos))
        at = offset(pos)
        if m.group("alias"):
            tokens.append(("atom", _ALIASES[m.group("alias")], at))
        elif m.group("kind") == "N":
            n = int(m.group("num"))
            if n < 1:
                raise ParseError("non-orientable genus must be >= 1", at)
            tokens.append(("atom", nonorientable(n), at))
        elif m.group("kind") == "O":
            tokens.append(("atom", orientable(int(m.group("num"))), at))
        else:
            tokens.append((m.group("op"), None, at))
        pos = _SPACE.match(text, m.end()).end()
    tokens.append(("end", None, offset(len(text))))
    return tokens


def parse_surface(text: str) -> Surface:
    """Parse a surface expression into canonical form."""
    tokens = _tokenize(text)
    i = 0

    def atom() -> SurfaceComponent:
        nonlocal i
        kind, value, at = tokens[i]
        if kind != "atom":
            what = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected a surface, got {what}", at)
        i += 1
        return value

    def term() -> SurfaceComponent:
        nonlocal i
        parts = [atom()]
        while tokens[i][0] == "#":
            i += 1
            parts.append(atom())
        return reduce(connected_sum, parts)

    comps = [term()]
    while tokens[i][0] == "+":
        i += 1
        comps.append(term())
    if tokens[i][0] != "end":
        raise ParseError("expected '+' or '#'", tokens[i][2])
    return Surface(comps).canonical()


def format_surface(s: Surface) -> str:
    return str(s)
