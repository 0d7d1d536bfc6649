from itertools import combinations

import numpy as np
import pytest

from invdec.blocks import BlockKind, substitution_tree
from invdec.decomposition import (
    DecompositionChoice, InvDecomposition, binomial_difference, binomial_holds,
    count_decompositions, decomposition_by_inflation, decomposition_from_choice,
    decompositions_payload, enumerate_decompositions, is_decomposable, is_multiplicative,
    is_neighbor_of_identity, iter_choices, merge_parts, min_inversions_guarantee,
    multiplicative_witness, validate_partition, vertex_vector,
)
from invdec.blocks import Interval
from invdec.inv_graph import edge_classes_structural
from invdec.perm_core import (
    Permutation, all_permutations, compose, identity, inversion_set, longest_element,
    reversal,
)


def pair_scan(p):
    """Decompositions by scanning S_n for both parts; no structure used."""
    tp = inversion_set(p).edges
    found = set()
    for a in all_permutations(p.n):
        ta = inversion_set(a).edges
        if not ta or not ta < tp:
            continue
        for b in all_permutations(p.n):
            if inversion_set(b).edges == tp - ta:
                found.add(frozenset({a, b}))
    return found


def as_pairs(decs):
    return {frozenset(d.parts()) for d in decs}


class TestCounting:
    def test_examples(self, P):
        assert count_decompositions(P("321")) == 2
        assert count_decompositions(P("2413")) == 0
        assert count_decompositions(P("4321")) == 11

    def test_identity(self):
        for n in range(1, 6):
            assert count_decompositions(identity(n)) == 0

    @pytest.mark.parametrize("word", ["321", "2413", "4321", "3412", "2143", "4312", "25314"])
    def test_against_pair_scan(self, P, word):
        p = P(word)
        assert count_decompositions(p) == len(pair_scan(p))

    @pytest.mark.parametrize("n", range(1, 5))
    def test_enumeration_matches_pair_scan(self, n):
        for p in all_permutations(n):
            items = list(enumerate_decompositions(p))
            assert len(items) == count_decompositions(p)
            assert as_pairs(items) == pair_scan(p)


class TestEnumeration:
    def test_321(self, P):
        got = list(enumerate_decompositions(P("321")))
        assert set(got) == {InvDecomposition(P("213"), P("231")), InvDecomposition(P("312"), P("132"))}

    def test_2143(self, P):
        assert list(enumerate_decompositions(P("2143"))) == [InvDecomposition(P("2134"), P("1243"))]

    def test_identity_empty(self):
        assert list(enumerate_decompositions(identity(4))) == []

    def test_canonical_side(self, P):
        p = P("4321")
        least = min(inversion_set(p).edges)
        for d in enumerate_decompositions(p):
            assert least in inversion_set(d.tau1).edges

    def test_limit(self, P):
        assert len(list(enumerate_decompositions(P("54321"), limit=5))) == 5
        assert len(list(enumerate_decompositions(P("54321")))) == 59

    def test_deterministic(self, P):
        p = P("526413")
        assert list(enumerate_decompositions(p)) == list(enumerate_decompositions(p))

    @pytest.mark.parametrize("n", range(2, 6))
    def test_soundness_midpoint_and_atomicity(self, n):
        for p in all_permutations(n):
            classes = edge_classes_structural(p)
            mid = vertex_vector(identity(n)).matrix + vertex_vector(p).matrix
            for d in enumerate_decompositions(p):
                assert d.is_valid_for(p)
                t1 = inversion_set(d.tau1).edges
                assert all(c.edges <= t1 or not c.edges & t1 for c in classes)
                assert np.array_equal(mid, vertex_vector(d.tau1).matrix + vertex_vector(d.tau2).matrix)


class TestInflation:
    def test_4321(self, P):
        p = P("4321")
        choice = DecompositionChoice({}, {Interval(1, 4): P("2143")})
        d = decomposition_by_inflation(p, choice)
        assert set(d.parts()) == {P("2143"), P("3412")}
        assert d.is_valid_for(p)

    def test_321(self, P):
        p = P("321")
        choice = DecompositionChoice({}, {Interval(1, 3): P("213")})
        d = decomposition_by_inflation(p, choice)
        assert d == InvDecomposition(P("213"), P("231"))
        assert d in set(enumerate_decompositions(p))

    def test_word_reversal_would_overlap(self, P):
        # pairing sigma with its word reversal does not split T_321
        sigma = P("213")
        assert inversion_set(sigma).edges & inversion_set(reversal(sigma)).edges == {(1, 2)}

    def test_prime_trivial_rejected(self, P):
        choice = DecompositionChoice({Interval(1, 4): 1}, {})
        with pytest.raises(ValueError):
            decomposition_by_inflation(P("2413"), choice)

    def test_bad_choice(self, P):
        with pytest.raises(ValueError):
            decomposition_by_inflation(P("4321"), DecompositionChoice({}, {Interval(1, 4): P("21")}))
        with pytest.raises(ValueError):
            decomposition_by_inflation(P("4321"), DecompositionChoice({}, {}))

    def test_choice_count(self, P):
        # 2^m * prod(k!) choices in total
        p = P("31265487")
        nodes = [t for t in substitution_tree(p).preorder() if t.kind is not BlockKind.PARALLEL]
        assert len(list(iter_choices(p))) == 2 * (count_decompositions(p) + 1)
        assert nodes

    @pytest.mark.parametrize("n", range(2, 6))
    def test_equivalence(self, n):
        for p in all_permutations(n):
            built, classes = set(), set()
            for c in iter_choices(p):
                d = decomposition_from_choice(p, c)
                if d is None:
                    continue
                classes.add(d)
                built.add(decomposition_by_inflation(p, c))
            assert built == classes


class TestMultiplicative:
    def test_321(self, P):
        w = multiplicative_witness(P("321"))
        assert set(w.parts()) == {P("231"), P("213")}
        assert compose(P("231"), P("213")) == P("321")

    def test_none(self, P):
        assert multiplicative_witness(P("2413")) is None
        assert multiplicative_witness(identity(3)) is None

    def test_4321(self, P):
        p = P("4321")
        w = multiplicative_witness(p)
        assert w.is_valid_for(p) and is_multiplicative(p, w)

    def test_is_multiplicative(self, P):
        assert is_multiplicative(P("321"), InvDecomposition(P("231"), P("213")))
        # 312 o 132 maps 1->3, 2->2, 3->1
        assert is_multiplicative(P("321"), InvDecomposition(P("312"), P("132")))
        assert is_multiplicative(P("2143"), InvDecomposition(P("2134"), P("1243")))
        with pytest.raises(ValueError):
            is_multiplicative(P("321"), InvDecomposition(P("213"), P("132")))

    def test_a_non_multiplicative_exists(self, P):
        p = P("4321")
        assert not all(is_multiplicative(p, d) for d in enumerate_decompositions(p))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_witness_sweep(self, n):
        for p in all_permutations(n):
            w = multiplicative_witness(p)
            assert (w is not None) == is_decomposable(p)
            if w is not None:
                assert w.is_valid_for(p) and is_multiplicative(p, w)


class TestPolytope:
    def test_vectors(self, P):
        v = vertex_vector(identity(4))
        assert all(v[i, j] == (i < j) for i in range(1, 5) for j in range(1, 5) if i != j)
        v = vertex_vector(longest_element(4))
        assert all(v[i, j] == (i > j) for i in range(1, 5) for j in range(1, 5) if i != j)
        v = vertex_vector(P("2413"))
        assert v[1, 3] == 0 and v[1, 2] == 1 and v[3, 4] == 1

    def test_antisymmetric(self):
        for p in all_permutations(4):
            v = vertex_vector(p)
            assert all(v[i, j] + v[j, i] == 1 for i, j in combinations(range(1, 5), 2))

    def test_neighbours(self, P):
        assert is_neighbor_of_identity(P("2413"))
        assert not is_neighbor_of_identity(P("4321"))
        assert is_neighbor_of_identity(P("21"))
        with pytest.raises(ValueError):
            is_neighbor_of_identity(identity(3))


class TestPartitions:
    def test_validate(self, P):
        assert validate_partition(P("4321"), [P("2134"), P("1243"), P("3412")])
        assert not validate_partition(P("321"), [P("213"), P("132")])
        assert validate_partition(P("2413"), [P("2413")])
        with pytest.raises(ValueError):
            validate_partition(P("321"), [P("21")])

    def test_merge(self, P):
        parts = [P("2134"), P("1243"), P("3412")]
        assert merge_parts(P("4321"), parts, 0, 1) == P("2143")
        merged = merge_parts(P("4321"), parts, 0, 2)
        assert inversion_set(merged).edges == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)}
        assert merged == P("4312")
        assert merge_parts(P("321"), [P("213"), P("231")], 0, 1) == P("321")
        with pytest.raises(ValueError):
            merge_parts(P("321"), [P("213"), P("132")], 0, 1)
        with pytest.raises(ValueError):
            merge_parts(P("321"), [P("213"), P("231")], 1, 1)


class TestLengthBound:
    def test_values(self):
        assert min_inversions_guarantee(6) == 11
        assert min_inversions_guarantee(5) == 7
        assert min_inversions_guarantee(4) == 4

    def test_small_n_gap(self, P):
        p = P("3412")
        assert len(inversion_set(p)) == min_inversions_guarantee(4)
        assert count_decompositions(p) == 0

    @pytest.mark.parametrize("n", [5, 6])
    def test_bound_holds(self, n):
        bound = min_inversions_guarantee(n)
        for p in all_permutations(n):
            if len(inversion_set(p)) >= bound:
                assert is_decomposable(p)


class TestBinomial:
    def test_examples(self, P):
        assert binomial_holds([identity(4), P("2143")], [P("2134"), P("1243")])
        assert not binomial_holds([identity(4), P("2413")], [P("2314"), P("1423")])
        assert binomial_holds([P("2413")], [P("2413")])

    def test_witness(self, P):
        only_l, only_r = binomial_difference([identity(4), P("2413")], [P("2314"), P("1423")])
        assert not only_l and dict(only_r) == {(2, 3): 1}

    def test_size_mismatch(self, P):
        with pytest.raises(ValueError):
            binomial_holds([P("12")], [P("123")])

    def test_decompositions_give_binomials(self, P):
        p = P("4321")
        for d in enumerate_decompositions(p):
            assert binomial_holds([identity(4), p], list(d.parts()))


def test_payload(P):
    d = decompositions_payload(P("321"))
    assert d["pi"] == [3, 2, 1] and d["count"] == 2
    assert {(tuple(x["tau1"]), tuple(x["tau2"])) for x in d["decompositions"]} == {((2, 1, 3), (2, 3, 1)), ((3, 1, 2), (1, 3, 2))}
    assert all(x["multiplicative"] for x in d["decompositions"])
