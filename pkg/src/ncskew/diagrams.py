"""Skew diagrams in English notation.

A skew diagram outer/inner has row i occupying columns inner_i+1 .. outer_i
(inner padded with zeros).  Diagrams are normalized on construction to a
basic form: the common column offset is trimmed so the bottom row starts in
column 1, which makes horizontal translates compare equal.  Rows that would
be empty are rejected outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .compositions import Composition, Partition, WeakComposition, compositions


@dataclass(frozen=True)
class SubscriptMatrix:
    """The square matrix of Jacobi-Trudi subscripts of a skew diagram.

    Entry (i, j) is outer_i - inner_j - i + j with 1-based indices and inner
    padded with zeros.  Entries can be negative; those index nothing and
    kill the corresponding determinant terms.
    """

    entries: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        """1-based access, entry(1, 1) is the top left."""
        return self.entries[i - 1][j - 1]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.dimension))


@dataclass(frozen=True)
class SkewDiagram:
    """A skew shape outer/inner with no empty rows, in basic form.

    >>> SkewDiagram(Partition((3, 2)), Partition((1, 1))) == SkewDiagram(Partition((2, 1)))
    True
    """

    outer: Partition
    inner: Partition = Partition(())

    def __post_init__(self) -> None:
        lam, mu = self.outer.parts, self.inner.parts
        if not lam:
            raise ValueError("a skew diagram needs at least one row")
        if len(mu) > len(lam) or any(m > l for l, m in zip(lam, mu)):
            raise ValueError(f"inner shape {mu!r} does not fit inside outer shape {lam!r}")
        padded = mu + (0,) * (len(lam) - len(mu))
        if any(l == m for l, m in zip(lam, padded)):
            raise ValueError(f"shape {lam!r}/{mu!r} has an empty row")
        offset = padded[-1]
        if offset:
            lam = tuple(l - offset for l in lam)
            padded = tuple(m - offset for m in padded)
        object.__setattr__(self, "outer", Partition(lam))
        object.__setattr__(self, "inner", Partition(tuple(m for m in padded if m)))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def row_count(self) -> int:
        return self.outer.length

    def rows(self) -> tuple[tuple[int, int], ...]:
        """The (first column, last column) interval of each row, top down."""
        lam, mu = self.outer.parts, self.inner.parts
        padded = mu + (0,) * (len(lam) - len(mu))
        return tuple((m + 1, l) for l, m in zip(lam, padded))

    def row_lengths(self) -> Composition:
        """Row lengths read top to bottom.

        >>> ribbon(Composition((1, 2, 1, 3, 2))).row_lengths().parts
        (1, 2, 1, 3, 2)
        """
        return Composition(tuple(e - s + 1 for s, e in self.rows()))

    def is_connected(self) -> bool:
        """True if every pair of adjacent rows shares at least one column."""
        rows = self.rows()
        return all(below[1] >= above[0] for above, below in zip(rows, rows[1:]))

    def is_ribbon(self) -> bool:
        """True if every pair of adjacent rows shares exactly one column."""
        rows = self.rows()
        return all(below[1] == above[0] for above, below in zip(rows, rows[1:]))

    def rotate(self) -> SkewDiagram:
        """The diagram turned by 180 degrees, renormalized.

        >>> SkewDiagram(Partition((2, 1))).rotate() == SkewDiagram(Partition((2, 2)), Partition((1,)))
        True
        """
        width = self.outer.parts[0]
        flipped = tuple((width + 1 - e, width + 1 - s) for s, e in reversed(self.rows()))
        lam = tuple(e for _, e in flipped)
        mu = tuple(s - 1 for s, _ in flipped)
        return SkewDiagram(Partition(lam), Partition(tuple(m for m in mu if m)))

    def is_symmetric(self) -> bool:
        """True if the diagram equals its own rotation."""
        return self == self.rotate()

    def overlap_composition(self, k: int) -> WeakComposition:
        """Entry i counts the columns shared by all of rows i .. i+k-1.

        For a canonical diagram this is max(0, outer_{i+k-1} - inner_i).
        """
        if not 1 <= k <= self.row_count:
            raise ValueError(f"k must be between 1 and {self.row_count}, got {k}")
        rows = self.rows()
        out = []
        for i in range(self.row_count - k + 1):
            window = rows[i : i + k]
            start = max(s for s, _ in window)
            end = min(e for _, e in window)
            out.append(max(0, end - start + 1))
        return WeakComposition(tuple(out))

    def overlap_partition(self, k: int) -> Partition:
        """The overlap composition for k sorted decreasing with zeros dropped.

        For k beyond the row count this is empty.
        """
        if k > self.row_count:
            return Partition(())
        return self.overlap_composition(k).to_partition()

    def jt_subscripts(self) -> SubscriptMatrix:
        """The matrix of Jacobi-Trudi subscripts of the diagram.

        >>> SkewDiagram(Partition((2, 2)), Partition((1,))).jt_subscripts().entries
        ((1, 3), (0, 2))
        """
        lam, mu = self.outer.parts, self.inner.parts
        ell = len(lam)
        padded = mu + (0,) * (ell - len(mu))
        return SubscriptMatrix(
            tuple(
                tuple(lam[i] - padded[j] - (i + 1) + (j + 1) for j in range(ell))
                for i in range(ell)
            )
        )

    def ascii_art(self) -> str:
        """Rows of '#' cells padded with '.' to the bounding rectangle."""
        width = self.outer.parts[0]
        return "\n".join(
            "." * (s - 1) + "#" * (e - s + 1) + "." * (width - e) for s, e in self.rows()
        )


def ribbon(alpha: Composition) -> SkewDiagram:
    """The ribbon whose row lengths, top to bottom, are alpha.

    Adjacent rows overlap in exactly one column.

    >>> ribbon(Composition((1, 2, 1, 3, 2)))
    SkewDiagram(outer=Partition(parts=(5, 5, 4, 4, 2)), inner=Partition(parts=(4, 3, 3, 1)))
    """
    if not alpha.parts:
        raise ValueError("a ribbon needs at least one row")
    rows_bottom_up = []
    start, end = 1, alpha.parts[-1]
    rows_bottom_up.append((start, end))
    for part in alpha.parts[-2::-1]:
        start = end
        end = start + part - 1
        rows_bottom_up.append((start, end))
    rows = rows_bottom_up[::-1]
    lam = tuple(e for _, e in rows)
    mu = tuple(s - 1 for s, _ in rows)
    return SkewDiagram(Partition(lam), Partition(tuple(m for m in mu if m)))


def connected_diagrams(n: int) -> list[SkewDiagram]:
    """Every connected canonical skew diagram with n cells, in a fixed order.

    Built as stacks of row intervals from the bottom row up: the bottom row
    starts in column 1 (that is what basic form means) and each row above
    must start and end no further left while sharing at least one column
    with the row below.  Each diagram is produced exactly once.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for alpha in compositions(n):
        parts = alpha.parts
        stacks = [[(1, parts[-1])]]
        for part in parts[-2::-1]:
            grown = []
            for stack in stacks:
                below_start, below_end = stack[-1]
                for start in range(max(below_start, below_end - part + 1), below_end + 1):
                    grown.append(stack + [(start, start + part - 1)])
            stacks = grown
        for stack in stacks:
            rows = stack[::-1]
            lam = tuple(e for _, e in rows)
            mu = tuple(s - 1 for s, _ in rows)
            out.append(SkewDiagram(Partition(lam), Partition(tuple(m for m in mu if m))))
    return out
