"""Symmetric functions in noncommuting variables, h-basis expansions.

The complete homogeneous basis here is indexed by set partitions, and the
product of two basis elements is the basis element of the slash product of
their indices.  Skew Schur functions come from the noncommutative
Jacobi-Trudi determinant with entries h over interval set partitions scaled
by reciprocal factorials, expanded with row-ordered products.  Letting the
variables commute sends h indexed by pi to (product of block-size
factorials) times the commutative h of pi's shape.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Mapping, Union

from .compositions import Composition
from .diagrams import SkewDiagram
from .permutations import Permutation, signed_images
from .setpartitions import SetPartition
from .sym import SymExpansion

Coefficient = Union[Fraction, int]


def _term_order(key: SetPartition) -> tuple[int, tuple[tuple[int, ...], ...]]:
    return (-key.length, key.blocks)


class NCExpansion:
    """A rational linear combination of h_pi basis elements of one degree."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[SetPartition, Coefficient] | Iterable[tuple[SetPartition, Coefficient]] = (),
    ) -> None:
        data: dict[SetPartition, Fraction] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in pairs:
            if not isinstance(key, SetPartition):
                raise ValueError(f"expansion keys must be set partitions, got {key!r}")
            c = data.get(key, Fraction(0)) + Fraction(coeff)
            if c:
                data[key] = c
            else:
                data.pop(key, None)
        sizes = {key.size for key in data}
        if len(sizes) > 1:
            raise ValueError(f"expansion mixes degrees {sorted(sizes)}")
        self._terms = data

    @property
    def degree(self) -> int | None:
        for key in self._terms:
            return key.size
        return None

    def coefficient(self, key: SetPartition) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def items(self) -> list[tuple[SetPartition, Fraction]]:
        """Terms in display order: more blocks first, then lexicographic."""
        return sorted(self._terms.items(), key=lambda kv: _term_order(kv[0]))

    def support(self) -> set[SetPartition]:
        return set(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCExpansion):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: NCExpansion) -> NCExpansion:
        return NCExpansion(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: NCExpansion) -> NCExpansion:
        return self + other.scaled(-1)

    def scaled(self, c: Coefficient) -> NCExpansion:
        c = Fraction(c)
        return NCExpansion({key: coeff * c for key, coeff in self._terms.items()})

    def __mul__(self, other: NCExpansion) -> NCExpansion:
        """Bilinear extension of the slash product on basis indices."""
        out: list[tuple[SetPartition, Fraction]] = []
        for key1, c1 in self._terms.items():
            for key2, c2 in other._terms.items():
                out.append((key1.slash(key2), c1 * c2))
        return NCExpansion(out)

    def __str__(self) -> str:
        from .textio import format_nc_expansion

        return format_nc_expansion(self)

    def __repr__(self) -> str:
        inner = ", ".join(f"{key.blocks}: {coeff}" for key, coeff in self.items())
        return f"NCExpansion({{{inner}}})"


def h(key: SetPartition) -> NCExpansion:
    """The basis element h_pi."""
    return NCExpansion({key: 1})


def act(delta: Permutation, e: NCExpansion) -> NCExpansion:
    """Relabel every basis index of e through delta.

    This permutes the degree-n basis bijectively, so it maps expansions of
    degree n to expansions of degree n and preserves products of matching
    degrees.  The zero expansion is fixed by anything.
    """
    if not e:
        return e
    if delta.size != e.degree:
        raise ValueError(f"permutation of size {delta.size} cannot act in degree {e.degree}")
    return NCExpansion({delta.act(key): coeff for key, coeff in e._terms.items()})


@lru_cache(maxsize=None)
def source_skew_schur(d: SkewDiagram) -> NCExpansion:
    """The skew Schur function of d with the source labeling.

    Noncommutative Jacobi-Trudi: each permutation w of the rows contributes
    sign(w) times h of the interval set partition with consecutive block
    sizes A[1, w(1)], ..., A[ell, w(ell)] (zeros vanish), divided by the
    product of the factorials of those subscripts.  Negative subscripts kill
    the term.
    """
    a = d.jt_subscripts().entries
    ell = len(a)
    out: list[tuple[SetPartition, Fraction]] = []
    for images, sign in signed_images(ell):
        subs = [a[i][images[i] - 1] for i in range(ell)]
        if any(s < 0 for s in subs):
            continue
        denominator = prod(factorial(s) for s in subs)
        key = SetPartition.from_composition(Composition(tuple(s for s in subs if s)))
        out.append((key, Fraction(sign, denominator)))
    return NCExpansion(out)


def skew_schur(delta: Permutation, d: SkewDiagram) -> NCExpansion:
    """The skew Schur function of d relabeled by delta."""
    if delta.size != d.size:
        raise ValueError(f"labeling size {delta.size} differs from diagram size {d.size}")
    return act(delta, source_skew_schur(d))


def labeling_permutation(pi: SetPartition) -> Permutation:
    """The permutation read off pi's blocks sorted by decreasing size, ties
    by least element, each block in increasing order.

    It relabels the interval set partition of pi's sorted shape onto pi.

    >>> labeling_permutation(SetPartition(((1, 3), (2,)))).images
    (1, 3, 2)
    """
    ordered = sorted(pi.blocks, key=lambda b: (-len(b), b[0]))
    return Permutation(tuple(e for block in ordered for e in block))


def schur(pi: SetPartition) -> NCExpansion:
    """The Schur function indexed by a set partition: the straight-shape
    skew Schur function of pi's shape, relabeled onto pi."""
    straight = SkewDiagram(pi.shape())
    return act(labeling_permutation(pi), source_skew_schur(straight))


def ribbon_schur(alpha: Composition) -> NCExpansion:
    """The source-labeled ribbon Schur function of alpha via coarsenings.

    Sum over coarsenings beta of alpha of
    (-1)**(length(alpha) - length(beta)) / beta! times h of the interval set
    partition of beta.
    """
    if not alpha.parts:
        raise ValueError("a ribbon needs at least one row")
    out: list[tuple[SetPartition, Fraction]] = []
    for beta in alpha.coarsenings():
        sign = -1 if (alpha.length - beta.length) % 2 else 1
        out.append((SetPartition.from_composition(beta), Fraction(sign, beta.factorial())))
    return NCExpansion(out)


def to_commutative(e: NCExpansion) -> SymExpansion:
    """Let the variables commute: h_pi maps to pi's shape factorial times
    the commutative h of pi's shape."""
    return SymExpansion(
        [(key.shape(), coeff * key.shape_factorial()) for key, coeff in e._terms.items()]
    )


class MonomialTruncation:
    """The restriction of a degree-n element to finitely many variables.

    Coefficients of all words of a fixed length over the variable indices
    1..variables; words absent from the mapping have coefficient 0.
    """

    __slots__ = ("variables", "length", "_counts")

    def __init__(self, variables: int, length: int, counts: Mapping[tuple[int, ...], int]) -> None:
        if variables < 1:
            raise ValueError("need at least one variable")
        self.variables = variables
        self.length = length
        self._counts = {word: c for word, c in counts.items() if c}

    def coefficient(self, word: tuple[int, ...]) -> int:
        return self._counts.get(tuple(word), 0)

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._counts.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialTruncation):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.length == other.length
            and self._counts == other._counts
        )

    def __mul__(self, other: MonomialTruncation) -> MonomialTruncation:
        """Concatenation product of words."""
        if self.variables != other.variables:
            raise ValueError("truncations use different variable counts")
        counts: dict[tuple[int, ...], int] = {}
        for w1, c1 in self._counts.items():
            for w2, c2 in other._counts.items():
                word = w1 + w2
                counts[word] = counts.get(word, 0) + c1 * c2
        return MonomialTruncation(self.variables, self.length + other.length, counts)

    def __repr__(self) -> str:
        return f"MonomialTruncation(variables={self.variables}, length={self.length}, terms={len(self._counts)})"


def monomial_truncation(pi: SetPartition, variables: int) -> MonomialTruncation:
    """Expand h_pi over the variables x_1..x_m as a sum of words.

    Sum over the permutations fixing every block of pi setwise and over the
    index tuples that weakly increase along each block; each pair
    contributes the word read off through the block permutation.
    """
    if variables < 1:
        raise ValueError("need at least one variable")
    n = pi.size
    counts: dict[tuple[int, ...], int] = {}
    block_perms = [list(itertools.permutations(b)) for b in pi.blocks]
    block_values = [
        list(itertools.combinations_with_replacement(range(1, variables + 1), len(b)))
        for b in pi.blocks
    ]
    for images_by_block in itertools.product(*block_perms):
        eps = [0] * n
        for block, images in zip(pi.blocks, images_by_block):
            for src, dst in zip(block, images):
                eps[src - 1] = dst
        for choice in itertools.product(*block_values):
            value = [0] * n
            for block, vals in zip(pi.blocks, choice):
                for pos, v in zip(block, vals):
                    value[pos - 1] = v
            word = tuple(value[e - 1] for e in eps)
            counts[word] = counts.get(word, 0) + 1
    return MonomialTruncation(variables, n, counts)
