"""Continuous maps between finite spaces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from .errors import CodomainMismatch, IndexOutOfRange, NotContinuous
from .space import FiniteSpace, PointSet


def preimage(assignment: Sequence[int], m: PointSet) -> PointSet:
    pre = 0
    for a, b in enumerate(assignment):
        if m >> b & 1:
            pre |= 1 << a
    return pre


def forward_image(assignment: Sequence[int], m: PointSet) -> PointSet:
    out = 0
    for a, b in enumerate(assignment):
        if m >> a & 1:
            out |= 1 << b
    return out


def first_discontinuity(dom: FiniteSpace, cod: FiniteSpace, assignment: Sequence[int]) -> Optional[PointSet]:
    """First open of ``cod`` (canonical order) whose preimage is not open, if any."""
    opens = dom.open_set
    for o in cod.opens:
        if preimage(assignment, o) not in opens:
            return o
    return None


@dataclass(frozen=True)
class ContinuousMap:
    dom: FiniteSpace
    cod: FiniteSpace
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.dom.n:
            raise IndexOutOfRange(
                f"assignment has {len(self.assignment)} entries, domain has {self.dom.n} points"
            )
        for v in self.assignment:
            if not 0 <= v < self.cod.n:
                raise IndexOutOfRange(f"value {v} outside codomain {{0..{self.cod.n - 1}}}")
        bad = first_discontinuity(self.dom, self.cod, self.assignment)
        if bad is not None:
            raise NotContinuous(bad)

    @classmethod
    def _trusted(cls, dom: FiniteSpace, cod: FiniteSpace, assignment: tuple[int, ...]) -> ContinuousMap:
        # skips validation; callers have already checked continuity
        f = object.__new__(cls)
        object.__setattr__(f, "dom", dom)
        object.__setattr__(f, "cod", cod)
        object.__setattr__(f, "assignment", assignment)
        return f

    def __call__(self, x: int) -> int:
        return self.assignment[x]

    def preimage(self, m: PointSet) -> PointSet:
        return preimage(self.assignment, m)

    def is_surjective(self) -> bool:
        return image(self) == self.cod.full

    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def is_constant(self) -> bool:
        return len(set(self.assignment)) <= 1


@dataclass(frozen=True)
class Cospan:
    """Parallel pair ``g, h`` out of a common domain into a common codomain."""

    g: ContinuousMap
    h: ContinuousMap

    def __post_init__(self):
        if self.g.dom != self.h.dom or self.g.cod != self.h.cod:
            raise CodomainMismatch("cospan legs must share domain and codomain")


def make_map(dom: FiniteSpace, cod: FiniteSpace, assignment: Sequence[int]) -> ContinuousMap:
    return ContinuousMap(dom, cod, tuple(assignment))


def identity(space: FiniteSpace) -> ContinuousMap:
    return ContinuousMap._trusted(space, space, tuple(space.points))


def constant(dom: FiniteSpace, cod: FiniteSpace, value: int) -> ContinuousMap:
    if not 0 <= value < cod.n:
        raise IndexOutOfRange(f"value {value} outside codomain")
    return ContinuousMap._trusted(dom, cod, (value,) * dom.n)


def compose(second: ContinuousMap, first: ContinuousMap) -> ContinuousMap:
    """``second ∘ first``; the spaces must match on the nose."""
    if first.cod != second.dom:
        raise CodomainMismatch("codomain of first map differs from domain of second")
    assignment = tuple(second.assignment[v] for v in first.assignment)
    assert first_discontinuity(first.dom, second.cod, assignment) is None
    return ContinuousMap._trusted(first.dom, second.cod, assignment)


def image(f: ContinuousMap) -> PointSet:
    m = 0
    for v in f.assignment:
        m |= 1 << v
    return m


@lru_cache(maxsize=4096)
def _continuous_assignments(X: FiniteSpace, Y: FiniteSpace) -> tuple[tuple[int, ...], ...]:
    return tuple(
        a for a in product(range(Y.n), repeat=X.n)
        if first_discontinuity(X, Y, a) is None
    )


def enumerate_continuous_maps(X: FiniteSpace, Y: FiniteSpace) -> list[ContinuousMap]:
    """Every continuous ``X -> Y``, in lexicographic order of assignments.

    Brute force over all ``Y.n ** X.n`` functions.
    """
    return [ContinuousMap._trusted(X, Y, a) for a in _continuous_assignments(X, Y)]


def inverse_assignment(f: ContinuousMap) -> Optional[tuple[int, ...]]:
    if f.dom.n != f.cod.n or not f.is_injective():
        return None
    inv = [0] * f.cod.n
    for a, b in enumerate(f.assignment):
        inv[b] = a
    return tuple(inv)


def is_homeomorphism(f: ContinuousMap) -> bool:
    inv = inverse_assignment(f)
    return inv is not None and first_discontinuity(f.cod, f.dom, inv) is None


def find_homeomorphism(X: FiniteSpace, Y: FiniteSpace) -> Optional[tuple[int, ...]]:
    """First bijection (lexicographic) carrying the opens of X onto those of Y.

    Backtracks over points of X, pairing only points that lie in the same
    number of opens and preserving minimal-neighbourhood membership.
    """
    if X.n != Y.n or len(X.opens) != len(Y.opens):
        return None
    if sorted(X.degrees) != sorted(Y.degrees):
        return None
    ux, uy = X.minimal_neighbourhoods, Y.minimal_neighbourhoods
    n = X.n
    assignment: list[int] = []
    used = [False] * n

    def consistent(x: int, v: int) -> bool:
        for w, fw in enumerate(assignment):
            if (ux[x] >> w & 1) != (uy[v] >> fw & 1):
                return False
            if (ux[w] >> x & 1) != (uy[fw] >> v & 1):
                return False
        return True

    def search(x: int) -> bool:
        if x == n:
            return {forward_image(assignment, o) for o in X.opens} == Y.open_set
        for v in range(n):
            if used[v] or X.degrees[x] != Y.degrees[v] or not consistent(x, v):
                continue
            used[v] = True
            assignment.append(v)
            if search(x + 1):
                return True
            assignment.pop()
            used[v] = False
        return False

    return tuple(assignment) if search(0) else None


def are_homeomorphic(X: FiniteSpace, Y: FiniteSpace) -> bool:
    return find_homeomorphism(X, Y) is not None
