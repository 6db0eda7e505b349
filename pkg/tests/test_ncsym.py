from fractions import Fraction

import pytest

from ncskew.compositions import Composition, Partition, compositions
from ncskew.diagrams import SkewDiagram, connected_diagrams, ribbon
from ncskew.permutations import Permutation, symmetric_group
from ncskew.setpartitions import SetPartition, set_partitions
from ncskew import ncsym, sym
from ncskew.ncsym import (
    NCExpansion,
    act,
    h,
    labeling_permutation,
    monomial_truncation,
    ribbon_schur,
    schur,
    skew_schur,
    source_skew_schur,
    to_commutative,
)

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)


def _sp(*blocks):
    return SetPartition(tuple(tuple(b) for b in blocks))


def test_source_hook():
    e = source_skew_schur(ribbon(Composition((2, 1))))
    assert e == NCExpansion({_sp((1, 2), (3,)): HALF, _sp((1, 2, 3),): -SIXTH})
    assert str(e) == "1/2*h[12/3] - 1/6*h[123]"


def test_source_of_rotated_hook():
    e = source_skew_schur(SkewDiagram(Partition((2, 2)), Partition((1,))))
    assert e == NCExpansion({_sp((1,), (2, 3)): HALF, _sp((1, 2, 3),): -SIXTH})
    assert str(e) == "1/2*h[1/23] - 1/6*h[123]"


def test_act_moves_keys():
    e = source_skew_schur(SkewDiagram(Partition((2, 2)), Partition((1,))))
    moved = act(Permutation((3, 2, 1)), e)
    assert moved == source_skew_schur(ribbon(Composition((2, 1))))
    with pytest.raises(ValueError):
        act(Permutation((1, 2)), e)
    zero = e - e
    assert act(Permutation((3, 2, 1)), zero) == zero


def test_labeled_skew_schur():
    d = SkewDiagram(Partition((2, 2)), Partition((1,)))
    assert skew_schur(Permutation((3, 2, 1)), d) == source_skew_schur(
        ribbon(Composition((2, 1)))
    )
    assert skew_schur(Permutation.identity(3), d) == source_skew_schur(d)
    with pytest.raises(ValueError):
        skew_schur(Permutation((2, 1)), d)


def test_labeling_permutation():
    assert labeling_permutation(_sp((1, 3), (2,))).images == (1, 3, 2)
    assert labeling_permutation(_sp((1, 2), (3,))).images == (1, 2, 3)
    assert labeling_permutation(_sp((1,), (2, 3))).images == (2, 3, 1)
    # blocks of equal size are taken in order of their least elements
    assert labeling_permutation(_sp((1, 4), (2,), (3, 5))).images == (1, 4, 3, 5, 2)


def test_labeling_permutation_property():
    """The labeling permutation carries the interval partition of the shape
    onto the set partition itself."""
    for n in range(7):
        for pi in set_partitions(n):
            delta = labeling_permutation(pi)
            interval = SetPartition.from_composition(pi.shape().to_composition())
            assert delta.act(interval) == pi


def test_schur_of_set_partition():
    e = schur(_sp((1, 3), (2,)))
    assert e == NCExpansion({_sp((1, 3), (2,)): HALF, _sp((1, 2, 3),): -SIXTH})
    assert str(e) == "1/2*h[13/2] - 1/6*h[123]"
    # interval partitions reduce to the source expansion of the straight shape
    assert schur(_sp((1, 2), (3,))) == source_skew_schur(ribbon(Composition((2, 1))))


def test_ribbon_expansion():
    assert ribbon_schur(Composition((2, 1))) == source_skew_schur(
        ribbon(Composition((2, 1)))
    )
    with pytest.raises(ValueError):
        ribbon_schur(Composition(()))


def test_ribbon_matches_determinant():
    for n in range(1, 7):
        for alpha in compositions(n):
            assert ribbon_schur(alpha) == source_skew_schur(ribbon(alpha))


def test_h_product_is_slash():
    for total in range(2, 5):
        for k in range(1, total):
            for pi in set_partitions(k):
                for sg in set_partitions(total - k):
                    assert h(pi) * h(sg) == h(pi.slash(sg))


def test_product_is_bilinear():
    a = ribbon_schur(Composition((2,)))
    b = ribbon_schur(Composition((1, 1)))
    c = h(_sp((1,)))
    assert (a + b) * c == a * c + b * c
    assert c * (a - b) == c * a - c * b
    assert (a * b).degree == 4


def test_to_commutative_on_basis():
    assert to_commutative(h(_sp((1, 3), (2,)))) == sym.h(Partition((2, 1))).scaled(2)
    assert to_commutative(h(_sp((1, 2, 3),))) == sym.h(Partition((3,))).scaled(6)
    zero = h(_sp((1,))) - h(_sp((1,)))
    assert not to_commutative(zero)
    assert to_commutative(zero) == sym.SymExpansion({})


def test_to_commutative_of_skew_schur():
    """Letting the variables commute recovers the classical expansion,
    whatever the labeling."""
    for n in range(1, 6):
        for d in connected_diagrams(n):
            target = sym.skew_schur(d)
            src = source_skew_schur(d)
            assert to_commutative(src) == target
            for delta in symmetric_group(n):
                assert to_commutative(act(delta, src)) == target


def test_to_commutative_is_multiplicative():
    a = schur(_sp((1, 3), (2,)))
    b = ribbon_schur(Composition((2, 1)))
    assert to_commutative(a * b) == to_commutative(a) * to_commutative(b)


def test_truncation_worked_coefficients():
    t = monomial_truncation(_sp((1, 3), (2,)), 3)
    assert t.coefficient((1, 2, 1)) == 2
    assert t.coefficient((1, 1, 1)) == 2
    assert t.coefficient((1, 1, 2)) == 1
    assert t.coefficient((2, 1, 1)) == 1
    assert t.coefficient((1, 2, 3)) == 1
    assert t.coefficient((1, 2, 2)) == 1
    assert t.coefficient((3, 3, 3)) == 2
    assert t.coefficient((1, 1)) == 0


def test_truncation_totals():
    # nine words repeat the value in positions 1 and 3, each counted twice
    t = monomial_truncation(_sp((1, 3), (2,)), 3)
    assert sum(c for _, c in t.items()) == 2 * 9 + 18
    assert len(list(t.items())) == 27


def test_truncation_product_is_slash():
    for total in range(2, 5):
        for k in range(1, total):
            for pi in set_partitions(k):
                for sg in set_partitions(total - k):
                    left = monomial_truncation(pi, 3) * monomial_truncation(sg, 3)
                    assert left == monomial_truncation(pi.slash(sg), 3)


def test_truncation_separates_basis():
    for n in range(1, 5):
        seen = {}
        for pi in set_partitions(n):
            t = monomial_truncation(pi, n)
            for other, prev in seen.items():
                assert t != prev, (pi, other)
            seen[pi] = t


def test_term_order_in_str():
    e = ribbon_schur(Composition((1, 1, 1)))
    assert str(e) == "h[1/2/3] - 1/2*h[1/23] - 1/2*h[12/3] + 1/6*h[123]"
