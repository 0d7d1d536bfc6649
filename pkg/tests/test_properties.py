"""Randomized checks beyond the exhaustive sizes."""

from hypothesis import given, settings, strategies as st

from invdec.blocks import substitution_tree, tree_to_permutation
from invdec.decomposition import (
    count_decompositions, enumerate_decompositions, is_decomposable, is_multiplicative,
    multiplicative_witness,
)
from invdec.inv_graph import edge_classes_closure, edge_classes_structural, inversion_graph
from invdec.perm_core import (
    Permutation, compose, inverse, inversion_set, permutation_from_inversion_set,
)

perms = st.integers(1, 14).flatmap(
    lambda n: st.permutations(range(1, n + 1)).map(Permutation))


@given(perms)
def test_roundtrips(p):
    assert tree_to_permutation(substitution_tree(p)) == p
    assert permutation_from_inversion_set(inversion_set(p)) == p


@given(perms)
def test_edge_class_methods_agree(p):
    assert edge_classes_structural(p).as_partition() == edge_classes_closure(inversion_graph(p)).as_partition()


@given(perms)
def test_witness(p):
    w = multiplicative_witness(p)
    assert (w is not None) == is_decomposable(p) == (count_decompositions(p) > 0)
    if w is not None:
        assert w.is_valid_for(p) and is_multiplicative(p, w)


@given(perms)
def test_inverse(p):
    assert compose(p, inverse(p)).is_identity()


@settings(max_examples=30)
@given(st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1)).map(Permutation)))
def test_enumeration_count(p):
    if count_decompositions(p) <= 2000:
        items = list(enumerate_decompositions(p))
        assert len(items) == len(set(items)) == count_decompositions(p)
        assert all(d.is_valid_for(p) for d in items)
