from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import PartitionError


@dataclass(frozen=True)
class Partition:
    """Equivalence relation on ``{0..n-1}`` as disjoint nonempty block masks.

    Blocks are ordered by their smallest member; ``block_of[x]`` is the index
    of the block holding ``x``.
    """

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        seen = 0
        for b in self.blocks:
            if b <= 0:
                raise PartitionError("blocks must be nonempty")
            if b & seen:
                raise PartitionError("blocks overlap")
            seen |= b
        if seen != (1 << self.n) - 1:
            raise PartitionError("blocks do not cover the point set")
        lows = [(b & -b) for b in self.blocks]
        if lows != sorted(lows):
            raise PartitionError("blocks must be ordered by minimal element")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int] | int]) -> Partition:
        masks = []
        for b in blocks:
            if isinstance(b, int):
                masks.append(b)
            else:
                m = 0
                for p in b:
                    if not 0 <= p < n:
                        raise PartitionError(f"point {p} outside {{0..{n - 1}}}")
                    m |= 1 << p
                masks.append(m)
        return cls(n, tuple(sorted(masks, key=lambda m: m & -m)))

    @classmethod
    def from_labels(cls, labels: Sequence) -> Partition:
        """Group points sharing a (hashable) label."""
        groups: dict = {}
        for x, lab in enumerate(labels):
            groups[lab] = groups.get(lab, 0) | 1 << x
        return cls.from_blocks(len(labels), groups.values())

    @classmethod
    def discrete(cls, n: int) -> Partition:
        return cls(n, tuple(1 << x for x in range(n)))

    @classmethod
    def indiscrete(cls, n: int) -> Partition:
        return cls(n, ((1 << n) - 1,) if n else ())

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            x = 0
            while b:
                if b & 1:
                    out[x] = i
                b >>= 1
                x += 1
        return tuple(out)

    def same_block(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def as_lists(self) -> list[list[int]]:
        return [[x for x in range(self.n) if b >> x & 1] for b in self.blocks]

    def __len__(self) -> int:
        return len(self.blocks)
