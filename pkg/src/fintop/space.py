"""Finite topological spaces on the carrier ``{0, ..., n-1}``.

A point set is an ``int`` bitmask: bit ``i`` is set iff point ``i`` is a
member.  A :class:`FiniteSpace` stores its full family of open sets, sorted
ascending by mask and free of duplicates, so two spaces are equal exactly
when they have the same ``n`` and the same opens.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import (
    IndexOutOfRange,
    MissingEmpty,
    MissingFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    SamePoint,
)
from .partition import Partition

PointSet = int


def mask_of(points: Iterable[int]) -> PointSet:
    m = 0
    for p in points:
        if p < 0:
            raise IndexOutOfRange(f"negative point index {p}")
        m |= 1 << p
    return m


def members(m: PointSet) -> list[int]:
    """Point indices of ``m`` in ascending order."""
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def full_mask(n: int) -> PointSet:
    return (1 << n) - 1


def format_set(m: PointSet) -> str:
    return "{" + ",".join(map(str, members(m))) + "}"


def _check_range(n: int, m: PointSet) -> None:
    if m < 0 or m >> n:
        raise IndexOutOfRange(f"{format_set(m)} is not a subset of {{0..{n - 1}}}")


@dataclass(frozen=True)
class FiniteSpace:
    """A topology on ``{0..n-1}`` given by its complete family of opens.

    Construct through :func:`validate_topology` unless the family is already
    known to be canonical; the constructor itself only checks the ordering.
    """

    n: int
    opens: tuple[PointSet, ...]

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.opens, self.opens[1:])):
            raise ValueError("opens must be strictly ascending; use validate_topology")

    @property
    def full(self) -> PointSet:
        return full_mask(self.n)

    @property
    def points(self) -> range:
        return range(self.n)

    @cached_property
    def open_set(self) -> frozenset[PointSet]:
        return frozenset(self.opens)

    @cached_property
    def closed_sets(self) -> tuple[PointSet, ...]:
        full = self.full
        return tuple(sorted(full ^ o for o in self.opens))

    def is_open(self, m: PointSet) -> bool:
        return m in self.open_set

    def is_closed(self, m: PointSet) -> bool:
        return (self.full ^ m) in self.open_set

    def is_clopen(self, m: PointSet) -> bool:
        return self.is_open(m) and self.is_closed(m)

    @cached_property
    def minimal_neighbourhoods(self) -> tuple[PointSet, ...]:
        """Smallest open set containing each point."""
        full = self.full
        out = []
        for x in self.points:
            u = full
            for o in self.opens:
                if o >> x & 1:
                    u &= o
            out.append(u)
        return tuple(out)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Number of opens containing each point."""
        return tuple(sum(o >> x & 1 for o in self.opens) for x in self.points)

    def __repr__(self) -> str:
        return f"FiniteSpace(n={self.n}, opens=[{', '.join(map(format_set, self.opens))}])"


def validate_topology(n: int, family: Iterable[Iterable[int] | PointSet]) -> FiniteSpace:
    """Check the topology axioms and return the canonical space.

    Members of ``family`` are masks or iterables of point indices.  Raises the
    first violated axiom: range, empty set, full set, then pairwise unions,
    then pairwise intersections, scanning pairs in canonical order.
    """
    if n < 0:
        raise IndexOutOfRange(f"point count must be non-negative, got {n}")
    masks = set()
    for s in family:
        m = s if isinstance(s, int) else mask_of(s)
        _check_range(n, m)
        masks.add(m)
    opens = tuple(sorted(masks))
    if 0 not in masks:
        raise MissingEmpty()
    full = full_mask(n)
    if full not in masks:
        raise MissingFull()
    for i, a in enumerate(opens):
        for b in opens[i + 1:]:
            if a | b not in masks:
                raise NotClosedUnderUnion(a, b)
    for i, a in enumerate(opens):
        for b in opens[i + 1:]:
            if a & b not in masks:
                raise NotClosedUnderIntersection(a, b)
    return FiniteSpace(n, opens)


def closure(space: FiniteSpace, s: PointSet) -> PointSet:
    """Smallest closed set containing ``s``: the meet of its closed supersets."""
    _check_range(space.n, s)
    out = space.full
    for c in space.closed_sets:
        if s & ~c == 0:
            out &= c
    return out


def interior(space: FiniteSpace, s: PointSet) -> PointSet:
    _check_range(space.n, s)
    out = 0
    for o in space.opens:
        if o & ~s == 0:
            out |= o
    return out


def is_dense(space: FiniteSpace, s: PointSet) -> bool:
    return closure(space, s) == space.full


class SeparationWitness(NamedTuple):
    o1: PointSet
    o2: PointSet


def separation_witness(space: FiniteSpace, x: int, y: int) -> Optional[SeparationWitness]:
    """First disjoint open pair ``(o1, o2)`` with ``x in o1`` and ``y in o2``.

    Pairs are scanned with ``o1`` outer and ``o2`` inner, both in the
    canonical order of the open family.
    """
    if x == y:
        raise SamePoint(x)
    for p in (x, y):
        if not 0 <= p < space.n:
            raise IndexOutOfRange(f"point {p} outside {{0..{space.n - 1}}}")
    for o1 in space.opens:
        if not o1 >> x & 1:
            continue
        for o2 in space.opens:
            if o2 >> y & 1 and not o1 & o2:
                return SeparationWitness(o1, o2)
    return None


def is_hausdorff(space: FiniteSpace) -> bool:
    result = all(
        separation_witness(space, x, y) is not None
        for x in space.points
        for y in space.points
        if x < y
    )
    # finite T2 spaces are exactly the discrete ones
    assert result == (len(space.opens) == 1 << space.n), space
    return result


class SeparationAxioms(NamedTuple):
    t0: bool
    t1: bool
    t2: bool


def separation_axioms(space: FiniteSpace) -> SeparationAxioms:
    neighbourhoods = {
        tuple(o >> x & 1 for o in space.opens) for x in space.points
    }
    t0 = len(neighbourhoods) == space.n
    t1 = all(space.is_closed(1 << x) for x in space.points)
    t2 = is_hausdorff(space)
    assert (not t2 or t1) and (not t1 or t0)
    return SeparationAxioms(t0, t1, t2)


@dataclass(frozen=True)
class Preorder:
    """Specialization preorder: ``x <= y`` iff ``x`` lies in the closure of ``{y}``.

    ``down[y]`` is the mask of all ``x`` with ``x <= y``.
    """

    n: int
    down: tuple[PointSet, ...]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for y in range(self.n):
            for x in members(self.down[y]):
                yield x, y

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)


def specialization_preorder(space: FiniteSpace) -> Preorder:
    order = Preorder(space.n, tuple(closure(space, 1 << y) for y in space.points))
    assert all(order.leq(x, x) for x in space.points)
    assert all(
        order.leq(x, z)
        for x, y in order.pairs()
        for z in space.points
        if order.leq(y, z)
    )
    return order


def connected_components(space: FiniteSpace) -> Partition:
    """Components of the comparability graph of the specialization preorder."""
    order = specialization_preorder(space)
    label = [-1] * space.n
    for start in space.points:
        if label[start] >= 0:
            continue
        label[start] = start
        stack = [start]
        while stack:
            x = stack.pop()
            for y in space.points:
                if label[y] < 0 and order.comparable(x, y):
                    label[y] = start
                    stack.append(y)
    return Partition.from_labels(label)
