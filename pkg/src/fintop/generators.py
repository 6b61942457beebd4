"""Standard small spaces, and the reference grammar used by map documents."""

from __future__ import annotations

import re

from .errors import InvalidParameter
from .space import FiniteSpace, validate_topology


def _count(n) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InvalidParameter(f"point count must be a non-negative integer, got {n!r}")
    return n


def discrete(n: int) -> FiniteSpace:
    return FiniteSpace(_count(n), tuple(range(1 << n)))


def indiscrete(n: int) -> FiniteSpace:
    n = _count(n)
    return FiniteSpace(n, (0, (1 << n) - 1) if n else (0,))


def point() -> FiniteSpace:
    return discrete(1)


def empty() -> FiniteSpace:
    return discrete(0)


def sierpinski() -> FiniteSpace:
    """Opens ``{}, {1}, {0,1}``: point 1 is open, point 0 is closed."""
    return FiniteSpace(2, (0b00, 0b10, 0b11))


def pseudo_circle() -> FiniteSpace:
    """Four points with minimal opens {0}, {1}, {0,1,2}, {0,1,3}."""
    return validate_topology(4, [[], [0], [1], [0, 1], [0, 1, 2], [0, 1, 3], [0, 1, 2, 3]])


def disjoint_union(a: FiniteSpace, b: FiniteSpace) -> FiniteSpace:
    """``a`` on points ``0..a.n-1`` followed by ``b`` shifted up by ``a.n``."""
    opens = sorted({u | (v << a.n) for u in a.opens for v in b.opens})
    return FiniteSpace(a.n + b.n, tuple(opens))


_TOKEN = re.compile(r"\s*([A-Za-z_]+|\d+|[(),])")


def _tokens(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InvalidParameter(f"unexpected character at offset {pos} in {text!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def from_reference(text: str) -> FiniteSpace:
    """Build a space from a reference such as ``disjoint_union(sierpinski, discrete(2))``.

    Known names: ``discrete(n)``, ``indiscrete(n)``, ``sierpinski``,
    ``pseudo_circle``, ``point``, ``empty``, ``disjoint_union(a, b)``.
    """
    toks = _tokens(text)
    pos = 0

    def take(expected=None) -> str:
        nonlocal pos
        if pos >= len(toks):
            raise InvalidParameter(f"unexpected end of reference {text!r}")
        tok = toks[pos]
        if expected is not None and tok != expected:
            raise InvalidParameter(f"expected {expected!r}, got {tok!r} in {text!r}")
        pos += 1
        return tok

    def expr() -> FiniteSpace:
        name = take()
        if name in ("discrete", "indiscrete"):
            take("(")
            num = take()
            if not num.isdigit():
                raise InvalidParameter(f"expected a point count, got {num!r}")
            take(")")
            return (discrete if name == "discrete" else indiscrete)(int(num))
        if name == "disjoint_union":
            take("(")
            a = expr()
            take(",")
            b = expr()
            take(")")
            return disjoint_union(a, b)
        simple = {"sierpinski": sierpinski, "pseudo_circle": pseudo_circle,
                  "point": point, "empty": empty}
        if name in simple:
            return simple[name]()
        raise InvalidParameter(f"unknown space {name!r}")

    space = expr()
    if pos != len(toks):
        raise InvalidParameter(f"trailing input in reference {text!r}")
    return space
