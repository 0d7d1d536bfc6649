"""Decompositions of permutation inversion sets."""

from .blocks import (
    BlockKind, Interval, SubstitutionTree, all_blocks, classify_block, inflate,
    is_block, is_simple, strong_blocks, substitution_tree, tree_to_permutation,
)
from .decomposition import (
    DecompositionChoice, InvDecomposition, LOPVertex, binomial_holds,
    count_decompositions, decomposition_by_inflation, enumerate_decompositions,
    is_decomposable, is_multiplicative, is_neighbor_of_identity, merge_parts,
    min_inversions_guarantee, multiplicative_witness, validate_partition, vertex_vector,
)
from .inv_graph import (
    EdgeClassPartition, Graph, connected_components, edge_classes_closure,
    edge_classes_structural, inversion_graph, is_module, strong_modules,
)
from .perm_core import (
    InversionSet, Permutation, apply_map, compose, identity, inverse, inversion_set,
    is_inversion_set, longest_decreasing_run, longest_element, parse_permutation,
    permutation_from_inversion_set, reversal,
)

__version__ = "0.1.0"
