"""Exhaustive enumeration of topologies on small carriers."""

from __future__ import annotations

import warnings
from functools import lru_cache

from .errors import InvalidParameter, LargeEnumerationWarning, LimitExceeded
from .maps import are_homeomorphic
from .space import FiniteSpace

DEFAULT_LIMIT = 4
HARD_LIMIT = 5


def space_order_key(space: FiniteSpace):
    return (space.n, space.opens)


def _is_topology_family(family: int, full: int) -> bool:
    members = [m for m in range(full + 1) if family >> m & 1]
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if not (family >> (a | b) & 1 and family >> (a & b) & 1):
                return False
    return True


def labeled_topologies_by_filter(n: int) -> list[FiniteSpace]:
    """Scan every family of subsets holding the empty and full sets.

    ``2 ** (2 ** n - 2)`` candidates: 16384 at n=4.
    """
    full = (1 << n) - 1
    subsets = 1 << n
    fixed = 1 | 1 << full
    free = [m for m in range(1, full)]
    out = []
    for bits in range(1 << len(free)):
        family = fixed
        for i, m in enumerate(free):
            if bits >> i & 1:
                family |= 1 << m
        if _is_topology_family(family, full):
            out.append(FiniteSpace(n, tuple(m for m in range(subsets) if family >> m & 1)))
    return sorted(out, key=space_order_key)


def labeled_topologies_by_neighbourhoods(n: int) -> list[FiniteSpace]:
    """Build each topology from its minimal open neighbourhoods ``U_x``.

    A choice of masks ``U_x`` (with ``x in U_x``) is a topology iff
    ``y in U_x`` implies ``U_y ⊆ U_x``; the opens are then the sets that
    contain ``U_x`` for each of their points.
    """
    full = (1 << n) - 1
    chosen: list[int] = []
    out = []

    def ok(x: int, u: int) -> bool:
        for y, v in enumerate(chosen):
            if u >> y & 1 and v & ~u:
                return False
            if v >> x & 1 and u & ~v:
                return False
        return True

    def search(x: int) -> None:
        if x == n:
            opens = tuple(
                m for m in range(full + 1)
                if all(chosen[p] & ~m == 0 for p in range(n) if m >> p & 1)
            )
            out.append(FiniteSpace(n, opens))
            return
        for u in range(full + 1):
            if u >> x & 1 and ok(x, u):
                chosen.append(u)
                search(x + 1)
                chosen.pop()

    search(0)
    return sorted(out, key=space_order_key)


@lru_cache(maxsize=None)
def _labeled(n: int) -> tuple[FiniteSpace, ...]:
    if n <= DEFAULT_LIMIT:
        return tuple(labeled_topologies_by_filter(n))
    return tuple(labeled_topologies_by_neighbourhoods(n))


def homeomorphism_classes(spaces: list[FiniteSpace]) -> list[list[FiniteSpace]]:
    """Group spaces into homeomorphism classes, preserving first-seen order."""
    buckets: dict = {}
    classes: list[list[FiniteSpace]] = []
    for s in spaces:
        key = (s.n, len(s.opens), tuple(sorted(s.degrees)))
        for cls in buckets.setdefault(key, []):
            if are_homeomorphic(cls[0], s):
                cls.append(s)
                break
        else:
            cls = [s]
            buckets[key].append(cls)
            classes.append(cls)
    return classes


def enumerate_topologies(n: int, up_to_homeo: bool = False, allow_large: bool = False) -> list[FiniteSpace]:
    """All labeled topologies on ``n`` points, or one per homeomorphism class.

    Results are in canonical order ``(n, opens)``; class representatives are
    the first member of each class in that order.  ``n = 5`` needs
    ``allow_large``.
    """
    if not isinstance(n, int) or n < 0:
        raise InvalidParameter(f"n must be a non-negative integer, got {n!r}")
    if n > HARD_LIMIT or (n > DEFAULT_LIMIT and not allow_large):
        raise LimitExceeded(f"n={n} exceeds the enumeration limit")
    if n > DEFAULT_LIMIT:
        warnings.warn(f"enumerating topologies on {n} points is slow", LargeEnumerationWarning, stacklevel=2)
    spaces = list(_labeled(n))
    if up_to_homeo:
        return [cls[0] for cls in homeomorphism_classes(spaces)]
    return spaces


def all_spaces_up_to(max_n: int) -> list[FiniteSpace]:
    out = []
    for n in range(max_n + 1):
        out.extend(enumerate_topologies(n))
    return out
