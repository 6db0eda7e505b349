"""Set partitions of {1, ..., n} in a canonical form.

Blocks are stored sorted internally and ordered by least element, so two
equal set partitions are equal as values.  The noncommutative product of
complete homogeneous elements is driven by the slash product defined here:
shift the second partition up by the size of the first and take the union
of blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .compositions import Composition, Partition


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1, ..., n} into disjoint nonempty blocks."""

    blocks: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        cleaned = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        object.__setattr__(self, "blocks", cleaned)
        seen: list[int] = []
        for block in cleaned:
            if not block:
                raise ValueError("set partition blocks must be nonempty")
            seen.extend(block)
        n = len(seen)
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError(f"blocks must partition 1..n exactly once, got {self.blocks!r}")

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def length(self) -> int:
        return len(self.blocks)

    @classmethod
    def from_composition(cls, alpha: Composition) -> SetPartition:
        """The set partition of {1..n} into consecutive intervals with the
        given lengths.

        >>> SetPartition.from_composition(Composition((1, 2, 1, 3, 2))).blocks
        ((1,), (2, 3), (4,), (5, 6, 7), (8, 9))
        """
        blocks = []
        start = 1
        for part in alpha.parts:
            blocks.append(tuple(range(start, start + part)))
            start += part
        return cls(tuple(blocks))

    def shape(self) -> Partition:
        """Block sizes sorted weakly decreasing."""
        return Partition(tuple(sorted((len(b) for b in self.blocks), reverse=True)))

    def shape_factorial(self) -> int:
        """Product of the factorials of the block sizes."""
        return self.shape().factorial()

    def slash(self, other: SetPartition) -> SetPartition:
        """Union with all of other's entries shifted up by self's size.

        >>> a = SetPartition(((1,), (2, 4), (3,)))
        >>> b = SetPartition(((1, 2, 3), (4, 5)))
        >>> a.slash(b).blocks
        ((1,), (2, 4), (3,), (5, 6, 7), (8, 9))
        """
        n = self.size
        shifted = tuple(tuple(e + n for e in block) for block in other.blocks)
        return SetPartition(self.blocks + shifted)

    def refines(self, other: SetPartition) -> bool:
        """True if every block of self sits inside some block of other.

        Both set partitions must be of the same ground set.
        """
        if self.size != other.size:
            raise ValueError("set partitions of different ground sets are incomparable")
        where = {}
        for i, block in enumerate(other.blocks):
            for e in block:
                where[e] = i
        return all(len({where[e] for e in block}) == 1 for block in self.blocks)


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of {1..n}, in restricted-growth order.

    >>> sum(1 for _ in set_partitions(4))
    15
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield SetPartition(())
        return

    def rec(i: int, blocks: list[list[int]]) -> Iterator[SetPartition]:
        if i > n:
            yield SetPartition(tuple(tuple(b) for b in blocks))
            return
        for block in blocks:
            block.append(i)
            yield from rec(i + 1, blocks)
            block.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(2, [[1]])
