"""Quotient topologies and the Hausdorff reflection ``r: C -> H(C)``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .errors import (
    CodomainNotHausdorff,
    DomainMismatch,
    EmptyCollapseSet,
    InvalidParameter,
    NotClosed,
    NotConstantOnBlock,
    PartitionMismatch,
)
from .maps import ContinuousMap, compose, enumerate_continuous_maps, make_map
from .partition import Partition
from .space import (
    FiniteSpace,
    PointSet,
    SeparationWitness,
    connected_components,
    format_set,
    is_hausdorff,
    separation_witness,
    validate_topology,
)

Strategy = Literal["components", "clopen", "maps-oracle"]
STRATEGIES: tuple[str, ...] = ("components", "clopen", "maps-oracle")

__all__ = [
    "Partition",
    "Quotient",
    "Reflection",
    "STRATEGIES",
    "collapse_closed",
    "factor_through_reflection",
    "hausdorff_partition",
    "hausdorff_reflection",
    "quotient_by",
    "reflect_map",
    "replay_separation_proof",
]


@dataclass(frozen=True)
class Quotient:
    source: FiniteSpace
    partition: Partition
    space: FiniteSpace
    projection: ContinuousMap


def _union_of_blocks(p: Partition, block_mask: int) -> PointSet:
    out = 0
    for i, b in enumerate(p.blocks):
        if block_mask >> i & 1:
            out |= b
    return out


def quotient_by(space: FiniteSpace, p: Partition) -> Quotient:
    """Quotient topology on the blocks of ``p``: open iff the preimage is open.

    Every one of the ``2 ** len(p)`` block sets is tested.
    """
    if p.n != space.n:
        raise PartitionMismatch(f"partition is on {p.n} points, space has {space.n}")
    k = len(p.blocks)
    opens = [m for m in range(1 << k) if space.is_open(_union_of_blocks(p, m))]
    quotient_space = validate_topology(k, opens)
    projection = make_map(space, quotient_space, p.block_of)
    return Quotient(space, p, quotient_space, projection)


def collapse_closed(space: FiniteSpace, c: PointSet) -> Quotient:
    """Identify all points of the closed set ``c``; every other point stays alone."""
    if c == 0:
        raise EmptyCollapseSet("cannot collapse the empty set")
    if not space.is_closed(c):
        raise NotClosed(f"{format_set(c)} is not closed")
    blocks = [c] + [1 << x for x in space.points if not c >> x & 1]
    return quotient_by(space, Partition.from_blocks(space.n, blocks))


def _clopen_partition(space: FiniteSpace) -> Partition:
    clopens = [o for o in space.opens if space.is_closed(o)]
    return Partition.from_labels([tuple(k >> x & 1 for k in clopens) for x in space.points])


def _maps_oracle_partition(space: FiniteSpace) -> Partition:
    # a finite image inside any Hausdorff space is discrete, and a discrete
    # target with n points already receives every such image up to relabeling
    from .generators import discrete

    target = discrete(space.n)
    maps = enumerate_continuous_maps(space, target)
    return Partition.from_labels([tuple(g(x) for g in maps) for x in space.points])


def hausdorff_partition(space: FiniteSpace, strategy: Strategy = "components") -> Partition:
    """Classes of points that no continuous map into a Hausdorff space separates."""
    if strategy == "components":
        return connected_components(space)
    if strategy == "clopen":
        return _clopen_partition(space)
    if strategy == "maps-oracle":
        return _maps_oracle_partition(space)
    raise InvalidParameter(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


@dataclass(frozen=True)
class Reflection:
    """``H(C)`` with its projection ``r``.

    ``hausdorff_certificate`` lists, for each point of ``H(C)``, the singleton
    mask, each of which is verified open: the quotient is discrete, which for
    a finite space is the same as Hausdorff.
    """

    quotient: Quotient
    hausdorff_certificate: tuple[PointSet, ...]

    def __post_init__(self):
        space = self.quotient.space
        assert self.hausdorff_certificate == tuple(1 << i for i in space.points)
        assert all(space.is_open(m) for m in self.hausdorff_certificate)
        assert is_hausdorff(space)

    @property
    def source(self) -> FiniteSpace:
        return self.quotient.source

    @property
    def space(self) -> FiniteSpace:
        return self.quotient.space

    @property
    def projection(self) -> ContinuousMap:
        return self.quotient.projection

    @property
    def partition(self) -> Partition:
        return self.quotient.partition


def hausdorff_reflection(space: FiniteSpace, strategy: Strategy = "components") -> Reflection:
    q = quotient_by(space, hausdorff_partition(space, strategy))
    return Reflection(q, tuple(1 << i for i in q.space.points))


def factor_through_reflection(refl: Reflection, f: ContinuousMap) -> ContinuousMap:
    """The unique ``fbar`` with ``fbar ∘ r == f``, for ``f`` into a Hausdorff space."""
    if f.dom != refl.source:
        raise DomainMismatch("map domain is not the reflected space")
    if not is_hausdorff(f.cod):
        raise CodomainNotHausdorff("factorization needs a Hausdorff codomain")
    values = []
    for block in refl.partition.blocks:
        vals = {f(x) for x in range(f.dom.n) if block >> x & 1}
        if len(vals) != 1:
            raise NotConstantOnBlock(block)
        values.append(vals.pop())
    fbar = make_map(refl.space, f.cod, values)
    # continuity via r^-1(fbar^-1(U)) == f^-1(U)
    r = refl.projection
    assert all(r.preimage(fbar.preimage(u)) == f.preimage(u) for u in f.cod.opens)
    return fbar


def reflect_map(f: ContinuousMap, src: Optional[Reflection] = None, dst: Optional[Reflection] = None) -> ContinuousMap:
    """``H(f): H(C) -> H(C')``, obtained by factoring ``r' ∘ f`` through ``r``."""
    src = src or hausdorff_reflection(f.dom)
    dst = dst or hausdorff_reflection(f.cod)
    return factor_through_reflection(src, compose(dst.projection, f))


def replay_separation_proof(refl: Reflection) -> dict[tuple[int, int], tuple[ContinuousMap, SeparationWitness]]:
    """For each pair of distinct classes, rebuild the argument that they separate.

    Pick a map ``f`` into a Hausdorff space that differs on representatives,
    take disjoint opens around the two values, and pull them back along
    ``fbar``; the pulled-back sets must be disjoint opens of ``H(C)`` holding
    the two classes.  Returns the map and pulled-back witness for each pair.
    """
    from .generators import discrete

    src = refl.source
    target = discrete(2)
    candidates = enumerate_continuous_maps(src, target)
    reps = [b & -b for b in refl.partition.blocks]
    reps = [r.bit_length() - 1 for r in reps]
    out = {}
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            if i >= j:
                continue
            f = next(g for g in candidates if g(x) != g(y))
            w = separation_witness(target, f(x), f(y))
            assert w is not None
            fbar = factor_through_reflection(refl, f)
            o1, o2 = fbar.preimage(w.o1), fbar.preimage(w.o2)
            assert refl.space.is_open(o1) and refl.space.is_open(o2)
            assert not o1 & o2 and o1 >> i & 1 and o2 >> j & 1
            out[(i, j)] = (f, SeparationWitness(o1, o2))
    return out
