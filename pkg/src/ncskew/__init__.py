"""Skew Schur functions in noncommuting variables.

The package models skew diagrams, expands their Schur functions over the
complete homogeneous bases of Sym and NCSym, and decides when two labeled
expansions coincide -- both by a structural predicate and by brute force.
"""

from .compositions import Composition, Partition, WeakComposition, compositions
from .diagrams import SkewDiagram, connected_diagrams, ribbon
from .setpartitions import SetPartition, set_partitions
from .permutations import Permutation, symmetric_group
from .sym import SymExpansion
from .ncsym import NCExpansion, labeling_permutation, to_commutative
from .classify import (
    LabeledDiagram,
    VerificationReport,
    count_equivalent,
    expansions_equal,
    failing_condition,
    predicts_equal,
    same_diagram_verdict,
    verify_exhaustive,
)

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "Partition",
    "WeakComposition",
    "compositions",
    "SetPartition",
    "set_partitions",
    "Permutation",
    "symmetric_group",
    "SkewDiagram",
    "connected_diagrams",
    "ribbon",
    "SymExpansion",
    "NCExpansion",
    "labeling_permutation",
    "to_commutative",
    "LabeledDiagram",
    "VerificationReport",
    "count_equivalent",
    "expansions_equal",
    "failing_condition",
    "predicts_equal",
    "same_diagram_verdict",
    "verify_exhaustive",
    "__version__",
]
