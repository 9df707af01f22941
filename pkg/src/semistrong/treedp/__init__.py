"""Dynamic program deciding semistrong colorability of trees.

Linear in the tree size for a fixed color budget: each vertex expands its
children's feasible state sets through the connecting edges and folds them
pairwise; the tree's semistrong chromatic index is the max degree exactly
when the root set for that budget is nonempty, and one more otherwise.
"""

from .classify import ColorTypePartition, NotSemistrongError, classify_colors
from .core import (
    Quadruple,
    Transfers,
    check_merge_system,
    merge_conditions,
    witness_assignment,
)
from .feasible import (
    BRANCH_FRESH,
    BRANCH_REUSE_S,
    FeasibleSet,
    MergeWitness,
    VerticalWitness,
    horizontal_merge,
    leaf_set,
    vertical_expand,
)
from .reconstruct import reconstruct_coloring
from .solve import (
    InternalInconsistency,
    TreeIndexResult,
    TreeSolveResult,
    WitnessStore,
    semistrong_index_tree,
    solve_tree,
)

__all__ = [
    "BRANCH_FRESH",
    "BRANCH_REUSE_S",
    "ColorTypePartition",
    "FeasibleSet",
    "InternalInconsistency",
    "MergeWitness",
    "NotSemistrongError",
    "Quadruple",
    "Transfers",
    "TreeIndexResult",
    "TreeSolveResult",
    "VerticalWitness",
    "WitnessStore",
    "check_merge_system",
    "classify_colors",
    "horizontal_merge",
    "leaf_set",
    "merge_conditions",
    "reconstruct_coloring",
    "semistrong_index_tree",
    "solve_tree",
    "vertical_expand",
    "witness_assignment",
]
