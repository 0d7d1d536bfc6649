"""Splitting an inversion set into two (or more) inversion sets.

For ``p`` we look for unordered pairs ``(tau1, tau2)``, neither the identity,
whose inversion sets are disjoint with union ``T_p``.  Every such split is
determined by one choice per decision node of the substitution tree:

* a prime node sends all its external edges to one side;
* a serial node with ``k`` children picks ``sigma`` in ``S_k`` and sends the
  edges between children ``a < b`` to the first side iff ``(a, b)`` is an
  inversion of ``sigma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import islice, permutations, product
from typing import Iterator, Mapping, Optional, Sequence

import numpy as np

from .blocks import BlockKind, Interval, SubstitutionTree, substitution_tree, tree_to_permutation
from .inv_graph import edge_classes_structural, inversion_graph
from .perm_core import (
    InversionSet, Pair, Permutation, as_permutations, complement, compose, identity,
    inversion_set, is_inversion_set, longest_element, permutation_from_inversion_set,
)

__all__ = [
    "InvDecomposition", "DecompositionChoice", "LOPVertex",
    "count_decompositions", "decision_nodes", "iter_choices", "enumerate_decompositions",
    "decomposition_from_choice", "decomposition_by_inflation",
    "is_decomposable", "multiplicative_witness", "is_multiplicative",
    "vertex_vector", "is_neighbor_of_identity",
    "validate_partition", "merge_parts", "min_inversions_guarantee",
    "binomial_holds", "binomial_difference", "decompositions_payload",
]


@dataclass(frozen=True)
class InvDecomposition:
    """Unordered pair of parts; ``tau1`` holds the least inversion of the whole."""

    tau1: Permutation
    tau2: Permutation

    @classmethod
    def canonical(cls, a: Permutation, b: Permutation) -> "InvDecomposition":
        ta, tb = inversion_set(a).edges, inversion_set(b).edges
        if not ta or not tb:
            raise ValueError("both parts of a decomposition must be non-identity")
        if min(tb) < min(ta):
            a, b = b, a
        return cls(a, b)

    def parts(self) -> tuple[Permutation, Permutation]:
        return self.tau1, self.tau2

    def is_valid_for(self, p: Permutation) -> bool:
        t1, t2 = inversion_set(self.tau1).edges, inversion_set(self.tau2).edges
        return (bool(t1) and bool(t2) and not (t1 & t2)
                and (t1 | t2) == inversion_set(p).edges)


@dataclass(frozen=True)
class DecompositionChoice:
    """Side for each prime node and ``sigma`` for each serial node, keyed by interval."""

    prime_side: Mapping[Interval, int] = field(default_factory=dict)
    serial_perm: Mapping[Interval, Permutation] = field(default_factory=dict)


@dataclass(frozen=True)
class LOPVertex:
    """0/1 matrix with ``entry(i, j) = 1`` iff ``p(i) < p(j)``; the diagonal is 0."""

    n: int
    matrix: np.ndarray = field(compare=False)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i == j:
            raise KeyError("diagonal entries are undefined")
        return int(self.matrix[i - 1, j - 1])

    def __eq__(self, other):
        return isinstance(other, LOPVertex) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.matrix.tobytes())


def _tree(p: Permutation) -> SubstitutionTree:
    return substitution_tree(p)


def decision_nodes(tree: SubstitutionTree) -> list[SubstitutionTree]:
    """Prime and serial nodes in preorder."""
    return [t for t in tree.preorder() if t.kind is not BlockKind.PARALLEL]


def count_decompositions(p: Permutation) -> int:
    """Number of unordered nontrivial splits, from the tree shape alone."""
    total = 1
    for node in decision_nodes(_tree(p)):
        total *= 2 if node.kind is BlockKind.PRIME else math.factorial(len(node.children))
    # no decision node: only the trivial split exists
    return total // 2 - 1 if total > 1 else 0


def iter_choices(p: Permutation) -> Iterator[DecompositionChoice]:
    """Every choice, nodes in preorder, side 1 before 2, sigma lexicographic.

    The two choices giving an empty part are included.
    """
    nodes = decision_nodes(_tree(p))
    options = []
    for node in nodes:
        if node.kind is BlockKind.PRIME:
            options.append((1, 2))
        else:
            options.append(tuple(Permutation(w) for w in permutations(range(1, len(node.children) + 1))))
    for combo in product(*options):
        sides, perms = {}, {}
        for node, val in zip(nodes, combo):
            if node.kind is BlockKind.PRIME:
                sides[node.interval] = val
            else:
                perms[node.interval] = val
        yield DecompositionChoice(sides, perms)


def _check_choice(tree: SubstitutionTree, choice: DecompositionChoice) -> list[SubstitutionTree]:
    nodes = decision_nodes(tree)
    primes = {t.interval for t in nodes if t.kind is BlockKind.PRIME}
    serials = {t.interval: len(t.children) for t in nodes if t.kind is BlockKind.SERIAL}
    if set(choice.prime_side) != primes or set(choice.serial_perm) != set(serials):
        raise ValueError("choice does not match the decision nodes of the tree")
    for iv, side in choice.prime_side.items():
        if side not in (1, 2):
            raise ValueError(f"side for {iv!r} must be 1 or 2")
    for iv, sigma in choice.serial_perm.items():
        if sigma.n != serials[iv]:
            raise ValueError(f"sigma for {iv!r} must have size {serials[iv]}")
    return nodes


def _first_side_edges(p: Permutation, choice: DecompositionChoice) -> frozenset[Pair]:
    tree = _tree(p)
    _check_choice(tree, choice)
    t1: set[Pair] = set()
    for cls in edge_classes_structural(p):
        origin = cls.origin
        if origin.kind == "prime-external":
            if choice.prime_side[origin.module] == 1:
                t1 |= cls.edges
        else:
            a, b = origin.pair
            sigma = choice.serial_perm[origin.module]
            if sigma(a) > sigma(b):
                t1 |= cls.edges
    return frozenset(t1)


def decomposition_from_choice(p: Permutation, choice: DecompositionChoice) -> Optional[InvDecomposition]:
    """Edge-class construction; ``None`` for the two choices with an empty side."""
    t1 = _first_side_edges(p, choice)
    t2 = inversion_set(p).edges - t1
    if not t1 or not t2:
        return None
    return InvDecomposition.canonical(
        permutation_from_inversion_set(InversionSet(p.n, t1)),
        permutation_from_inversion_set(InversionSet(p.n, t2)),
    )


def enumerate_decompositions(p: Permutation, limit: Optional[int] = None) -> Iterator[InvDecomposition]:
    """Lazily yield every decomposition once, in choice order."""
    def gen():
        seen = set()
        for choice in iter_choices(p):
            d = decomposition_from_choice(p, choice)
            if d is None or d in seen:
                continue
            seen.add(d)
            yield d
    return islice(gen(), limit) if limit is not None else gen()


def _rewrite(tree: SubstitutionTree, choice: DecompositionChoice, first: bool) -> SubstitutionTree:
    kids = tuple(_rewrite(c, choice, first) for c in tree.children)
    skeleton = tree.skeleton
    if tree.kind is BlockKind.PRIME:
        keep = (choice.prime_side[tree.interval] == 1) == first
        if not keep:
            skeleton = identity(skeleton.n)
    elif tree.kind is BlockKind.SERIAL:
        sigma = choice.serial_perm[tree.interval]
        # the other copy takes the value complement, whose inversions are the rest
        skeleton = sigma if first else complement(sigma)
    return SubstitutionTree(tree.interval, tree.kind, skeleton, kids)


def decomposition_by_inflation(p: Permutation, choice: DecompositionChoice) -> InvDecomposition:
    """Rewrite two copies of the tree and inflate each.

    A prime skeleton survives in the copy named by its side and becomes an
    identity in the other; a serial skeleton becomes ``sigma`` in the first
    copy and ``complement(sigma)`` in the second.
    """
    tree = _tree(p)
    _check_choice(tree, choice)
    tau1 = tree_to_permutation(_rewrite(tree, choice, True))
    tau2 = tree_to_permutation(_rewrite(tree, choice, False))
    if tau1.is_identity() or tau2.is_identity():
        raise ValueError("choice puts every inversion on one side")
    return InvDecomposition.canonical(tau1, tau2)


def is_decomposable(p: Permutation) -> bool:
    return len(edge_classes_structural(p)) >= 2


def _split_on(p: Permutation, vertices) -> InvDecomposition:
    graph = inversion_graph(p)
    t2 = graph.induced_edges(vertices)
    t1 = graph.edges - t2
    tau1 = permutation_from_inversion_set(InversionSet(p.n, t1))
    tau2 = permutation_from_inversion_set(InversionSet(p.n, t2))
    return InvDecomposition.canonical(tau1, tau2)


def multiplicative_witness(p: Permutation) -> Optional[InvDecomposition]:
    """A decomposition whose parts multiply to ``p`` in some order.

    One side is all edges induced on a single non-parallel strong block that
    misses some other non-parallel strong block (earliest in preorder), or
    failing that, on the first two children of a serial block with at least
    three children.
    """
    tree = _tree(p)
    heavy = [t for t in tree.preorder() if t.kind is not BlockKind.PARALLEL]
    for cand in heavy:
        if any(other is not cand and other.interval not in cand.interval for other in heavy):
            return _split_on(p, cand.interval)
    for node in heavy:
        if node.kind is BlockKind.SERIAL and len(node.children) >= 3:
            first, second = node.children[:2]
            return _split_on(p, range(first.interval.lo, second.interval.hi + 1))
    return None


def is_multiplicative(p: Permutation, d: InvDecomposition) -> bool:
    if not d.is_valid_for(p):
        raise ValueError(f"{d} is not a decomposition of {p}")
    return compose(d.tau1, d.tau2) == p or compose(d.tau2, d.tau1) == p


def vertex_vector(p: Permutation) -> LOPVertex:
    w = np.asarray(p.word)
    m = (w[:, None] < w[None, :]).astype(np.int8)
    return LOPVertex(p.n, m)


def is_neighbor_of_identity(p: Permutation) -> bool:
    """Adjacency of ``v_p`` and ``v_id`` on the linear ordering polytope."""
    if p.is_identity():
        raise ValueError("the identity is not its own neighbour")
    return not is_decomposable(p)


def _sizes_match(p: Permutation, parts: Sequence[Permutation]) -> None:
    for q in parts:
        if q.n != p.n:
            raise ValueError(f"size mismatch: {q.n} vs {p.n}")


def validate_partition(p: Permutation, parts: Sequence[Permutation]) -> bool:
    parts = as_permutations(parts)
    _sizes_match(p, parts)
    union: set[Pair] = set()
    for q in parts:
        t = inversion_set(q).edges
        if union & t:
            return False
        union |= t
    return union == inversion_set(p).edges


def merge_parts(p: Permutation, parts: Sequence[Permutation], i: int, j: int) -> Permutation:
    """The permutation whose inversions are those of ``parts[i]`` and ``parts[j]`` (0-based)."""
    parts = as_permutations(parts)
    if i == j:
        raise ValueError("merge needs two distinct parts")
    if not validate_partition(p, parts):
        raise ValueError("parts do not partition the inversion set")
    merged = InversionSet(p.n, inversion_set(parts[i]).edges | inversion_set(parts[j]).edges)
    return permutation_from_inversion_set(merged)


def min_inversions_guarantee(n: int) -> int:
    """Inversion count from which decomposability is guaranteed (for ``n >= 5``)."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.comb(n, 2) - n + 2


def _multiset(perms: Sequence[Permutation]):
    from collections import Counter
    c: Counter = Counter()
    for q in perms:
        c.update(inversion_set(q).edges)
    return c


def binomial_difference(lhs: Sequence[Permutation], rhs: Sequence[Permutation]):
    """Inversion multiplicities left over on each side, as ``(lhs_only, rhs_only)`` Counters."""
    lhs, rhs = as_permutations(lhs), as_permutations(rhs)
    if not lhs or not rhs:
        raise ValueError("both sides need at least one permutation")
    _sizes_match(lhs[0], lhs[1:] + rhs)
    a, b = _multiset(lhs), _multiset(rhs)
    return a - b, b - a


def binomial_holds(lhs: Sequence[Permutation], rhs: Sequence[Permutation]) -> bool:
    """Whether ``prod X_lhs - prod X_rhs`` lies in the toric ideal of the inversion model."""
    only_l, only_r = binomial_difference(lhs, rhs)
    return not only_l and not only_r


def decompositions_payload(p: Permutation, limit: Optional[int] = None) -> dict:
    items = [
        {"tau1": d.tau1.to_list(), "tau2": d.tau2.to_list(), "multiplicative": is_multiplicative(p, d)}
        for d in enumerate_decompositions(p, limit)
    ]
    return {"pi": p.to_list(), "count": count_decompositions(p), "decompositions": items}
