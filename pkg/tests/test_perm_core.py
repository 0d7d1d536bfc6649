from itertools import combinations, permutations

import pytest

from invdec.perm_core import (
    InversionSet, Permutation, all_pairs, all_permutations, apply_map, complement,
    compose, identity, inverse, inversion_set, is_inversion_set, longest_decreasing_run,
    longest_element, parse_permutation, permutation_from_inversion_set, reversal,
)


def brute_realizable(t: InversionSet) -> bool:
    return any(inversion_set(q).edges == t.edges for q in all_permutations(t.n))


def brute_lds(p):
    best = 0
    for r in range(1, p.n + 1):
        for idx in combinations(range(p.n), r):
            vals = [p.word[i] for i in idx]
            if all(a > b for a, b in zip(vals, vals[1:])):
                best = r
    return best


class TestParse:
    def test_spaced(self):
        assert parse_permutation("2 4 1 3").word == (2, 4, 1, 3)

    def test_compact(self):
        p = parse_permutation("2413")
        assert p.word == (2, 4, 1, 3) and p.n == 4

    def test_large_spaced(self):
        assert parse_permutation("10 9 8 7 6 5 4 3 2 1").n == 10

    @pytest.mark.parametrize("text", ["2 2 3", "", "   ", "24 13", "1,2", "0", "1 2 4", "12345678910"])
    def test_errors(self, text):
        with pytest.raises(ValueError):
            parse_permutation(text)

    def test_repeat_message(self):
        with pytest.raises(ValueError, match="value 2 repeated"):
            parse_permutation("2 2 3")

    def test_str_roundtrip(self):
        p = parse_permutation("3142")
        assert str(p) == "3 1 4 2"
        assert parse_permutation(str(p)) == p


class TestGroup:
    def test_compose_pointwise(self, P):
        assert compose(P("231"), P("213")) == P("321")

    def test_compose_definition(self):
        for a in all_permutations(4):
            for b in (Permutation((2, 4, 1, 3)), Permutation((1, 3, 2, 4))):
                c = compose(a, b)
                assert all(c(i) == a(b(i)) for i in range(1, 5))

    def test_identity_and_inverse_laws(self, P):
        assert compose(identity(4), P("2413")) == P("2413")
        assert compose(P("2413"), inverse(P("2413"))) == identity(4)

    def test_inverse(self, P):
        assert inverse(P("2413")) == P("3142")
        assert inverse(identity(5)) == identity(5)
        assert inverse(P("4321")) == P("4321")

    def test_size_mismatch(self, P):
        with pytest.raises(ValueError):
            compose(P("12"), P("123"))

    def test_reversal(self, P):
        assert reversal(identity(4)) == longest_element(4) == P("4321")
        assert reversal(P("2413")) == P("3142")
        assert all(reversal(reversal(p)) == p for p in all_permutations(4))

    def test_complement_is_left_multiplication_by_w0(self):
        for p in all_permutations(4):
            assert complement(p) == compose(longest_element(4), p)


class TestInversionSets:
    def test_2413(self, P):
        assert inversion_set(P("2413")).sorted_edges() == [(1, 3), (2, 3), (2, 4)]

    def test_extremes(self):
        assert inversion_set(identity(5)).edges == frozenset()
        assert inversion_set(longest_element(4)).edges == frozenset(all_pairs(4))

    def test_criterion_examples(self):
        assert is_inversion_set(InversionSet(3, {(1, 2), (1, 3), (2, 3)}))
        assert not is_inversion_set(InversionSet(3, {(1, 3)}))
        assert is_inversion_set(InversionSet(5, frozenset()))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_criterion_matches_brute_force(self, n):
        pairs = all_pairs(n)
        for r in range(len(pairs) + 1):
            for sub in combinations(pairs, r):
                t = InversionSet(n, frozenset(sub))
                assert is_inversion_set(t) == brute_realizable(t)

    def test_ambient_size_matters(self):
        assert InversionSet(3, frozenset()) != InversionSet(4, frozenset())

    def test_bad_pairs(self):
        with pytest.raises(ValueError):
            InversionSet(3, {(1, 4)})
        with pytest.raises(ValueError):
            InversionSet(3, {(2, 2)})

    def test_from_inversion_set(self, P):
        assert permutation_from_inversion_set(InversionSet(3, {(1, 2)})) == P("213")
        assert permutation_from_inversion_set(InversionSet(4, {(1, 3), (2, 3), (2, 4)})) == P("2413")
        assert permutation_from_inversion_set(InversionSet(4, frozenset())) == identity(4)
        with pytest.raises(ValueError):
            permutation_from_inversion_set(InversionSet(3, {(1, 3)}))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_roundtrip_and_complement(self, n):
        w0 = longest_element(n)
        for p in all_permutations(n):
            t = inversion_set(p)
            assert permutation_from_inversion_set(t) == p
            assert t.complement().edges == inversion_set(compose(w0, p)).edges


class TestApplyMap:
    def test_example(self, P):
        assert apply_map(InversionSet(3, {(1, 2)}), inverse(P("132"))) == {(1, 3)}

    def test_identity(self, P):
        t = inversion_set(P("2413"))
        assert apply_map(t, identity(4)) == t.edges

    def test_product_identity_example(self, P):
        lhs = inversion_set(P("132")).edges ^ apply_map(inversion_set(P("213")), inverse(P("132")))
        assert lhs == {(1, 3), (2, 3)}
        assert compose(P("213"), P("132")) == P("231")
        assert inversion_set(P("231")).edges == lhs

    @pytest.mark.parametrize("n", range(1, 5))
    def test_product_identity_sweep(self, n):
        for a in all_permutations(n):
            ta = inversion_set(a)
            for b in all_permutations(n):
                expect = inversion_set(b).edges ^ apply_map(ta, inverse(b))
                assert inversion_set(compose(a, b)).edges == expect


class TestDecreasingRun:
    def test_examples(self, P):
        assert longest_decreasing_run(P("4321")) == 4
        assert longest_decreasing_run(P("1234")) == 1
        assert longest_decreasing_run(P("2413")) == 2

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_subsequence_search(self, n):
        for w in permutations(range(1, n + 1)):
            p = Permutation(w)
            assert longest_decreasing_run(p) == brute_lds(p)
