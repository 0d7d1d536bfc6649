"""Brute-force counterparts of the structural routines, and exhaustive sweeps.

Nothing here consults the substitution tree: modules come from all vertex
subsets, blocks from literal image tests, decompositions from all subsets of
the inversion set.  :func:`sweep_verify` runs named checks over all of
``S_n`` and collects failing permutations.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice, permutations
from typing import Callable, Iterable, Optional, Sequence

from .blocks import (
    BlockKind, Interval, all_blocks, classify_block, strong_blocks,
    substitution_tree, tree_to_permutation,
)
from .decomposition import (
    InvDecomposition, count_decompositions, decomposition_by_inflation,
    decomposition_from_choice, enumerate_decompositions, is_decomposable,
    is_multiplicative, iter_choices, merge_parts, min_inversions_guarantee,
    multiplicative_witness, validate_partition, vertex_vector,
)
from .inv_graph import (
    Graph, connected_components, edge_classes_closure, edge_classes_structural,
    inversion_graph, is_module, strong_modules,
)
from .perm_core import (
    InversionSet, Permutation, all_pairs, all_permutations, apply_map, compose,
    identity, inverse, inversion_set, is_inversion_set, longest_decreasing_run,
    longest_element, permutation_from_inversion_set,
)

__all__ = [
    "SweepReport", "CheckResult", "CHECKS",
    "brute_decompositions", "brute_modules", "brute_strong_modules", "brute_blocks",
    "brute_three_part_partitions", "default_checks", "sweep_verify",
]

SUBSET_BUDGET = 25
MODULE_BUDGET = 10


def _triple_masks(n: int, index: dict) -> list[tuple[int, int, int]]:
    return [
        (1 << index[(i, j)], 1 << index[(j, k)], 1 << index[(i, k)])
        for i, j, k in combinations(range(1, n + 1), 3)
    ]


def _mask_ok(mask: int, triples) -> bool:
    for ij, jk, ik in triples:
        if mask & ij and mask & jk and not mask & ik:
            return False
        if mask & ik and not (mask & ij or mask & jk):
            return False
    return True


def brute_decompositions(p: Permutation, method: str = "subsets") -> set[InvDecomposition]:
    """All splits found by exhaustion.

    ``"subsets"`` tests every subset of ``T_p`` that holds its least inversion
    (``|T_p| <= 25``); ``"pairs"`` scans ``S_n`` for parts (``n <= 5``).
    """
    t = sorted(inversion_set(p).edges)
    if method == "pairs":
        if p.n > 5:
            raise ValueError("pair scan is limited to n <= 5")
        tp = set(t)
        sets = {q: inversion_set(q).edges for q in all_permutations(p.n)}
        sub = [(q, s) for q, s in sets.items() if s and s < tp]
        by_set = {s: q for q, s in sub}
        out = set()
        for q, s in sub:
            rest = frozenset(tp - s)
            if rest in by_set:
                out.add(InvDecomposition.canonical(q, by_set[rest]))
        return out
    if method != "subsets":
        raise ValueError(f"unknown method {method!r}")
    if len(t) > SUBSET_BUDGET:
        raise ValueError(f"{len(t)} inversions exceed the subset budget of {SUBSET_BUDGET}")
    if not t:
        return set()
    # only pairs of T_p can occur; index them all so triple masks stay total
    pairs = all_pairs(p.n)
    index = {e: k for k, e in enumerate(pairs)}
    triples = _triple_masks(p.n, index)
    bits = [1 << index[e] for e in t]
    full = sum(bits)
    out = set()
    rest_bits = bits[1:]
    for r in range(len(rest_bits) + 1):
        for chosen in combinations(rest_bits, r):
            mask = bits[0] + sum(chosen)
            other = full ^ mask
            if not other:
                continue
            if _mask_ok(mask, triples) and _mask_ok(other, triples):
                s1 = frozenset(e for e in pairs if mask >> index[e] & 1)
                s2 = frozenset(t) - s1
                out.add(InvDecomposition.canonical(
                    permutation_from_inversion_set(InversionSet(p.n, s1)),
                    permutation_from_inversion_set(InversionSet(p.n, s2)),
                ))
    return out


def brute_modules(graph: Graph) -> set[frozenset[int]]:
    if graph.n > MODULE_BUDGET:
        raise ValueError(f"module enumeration is limited to n <= {MODULE_BUDGET}")
    verts = range(1, graph.n + 1)
    out = set()
    for r in range(1, graph.n + 1):
        for s in combinations(verts, r):
            if is_module(graph, s):
                out.add(frozenset(s))
    return out


def _overlap(a: frozenset, b: frozenset) -> bool:
    return bool(a & b) and not a <= b and not b <= a


def brute_strong_modules(graph: Graph, modules: Optional[set] = None) -> set[frozenset[int]]:
    mods = brute_modules(graph) if modules is None else modules
    return {m for m in mods if not any(_overlap(m, o) for o in mods)}


def brute_blocks(p: Permutation) -> set[Interval]:
    """Literal test: the image of ``[lo, hi]`` is a run of consecutive values."""
    out = set()
    for lo in range(1, p.n + 1):
        for hi in range(lo, p.n + 1):
            image = sorted(p(i) for i in range(lo, hi + 1))
            if image == list(range(image[0], image[0] + hi - lo + 1)):
                out.add(Interval(lo, hi))
    return out


def _as_interval_sets(intervals: Iterable[Interval]) -> set[frozenset[int]]:
    return {iv.as_set() for iv in intervals}


def brute_three_part_partitions(p: Permutation) -> set[tuple[Permutation, Permutation, Permutation]]:
    """3-part partitions of ``T_p`` reached by splitting one part of a 2-split again."""
    out = set()
    for d in brute_decompositions(p):
        for keep, split in ((d.tau1, d.tau2), (d.tau2, d.tau1)):
            for e in brute_decompositions(split):
                out.add(tuple(sorted((keep, e.tau1, e.tau2))))
    return out


# ---------------------------------------------------------------------------
# checks: each takes a permutation and returns True on success

def _check_blocks(p):
    return brute_blocks(p) == all_blocks(p)


def _check_tree_roundtrip(p):
    return tree_to_permutation(substitution_tree(p)) == p


def _check_tree_shape(p):
    tree = substitution_tree(p)
    for node in tree.preorder():
        if node.is_leaf:
            if len(node.interval) != 1 or node.kind is not BlockKind.PARALLEL:
                return False
            continue
        if node.kind is BlockKind.PRIME and node.skeleton.n < 4:
            return False
        for c in node.children:
            if c.kind is node.kind and node.kind is not BlockKind.PRIME and not c.is_leaf:
                return False
    if {n.interval for n in tree.preorder()} != strong_blocks(p):
        return False
    brute = brute_blocks(p)
    brute_strong = {b for b in brute if not any(b.overlaps(c) for c in brute)}
    if strong_blocks(p) != brute_strong:
        return False
    for b in brute:
        if len(b) >= 2:
            classify_block(p, b)
    return True


def _check_inversion_roundtrip(p):
    t = inversion_set(p)
    if permutation_from_inversion_set(t) != p or not is_inversion_set(t):
        return False
    return t.complement().edges == inversion_set(compose(longest_element(p.n), p)).edges


def _check_clique(p):
    g = inversion_graph(p)
    best = 1
    for r in range(2, p.n + 1):
        if any(all(g.has_edge(a, b) for a, b in combinations(s, 2))
               for s in combinations(range(1, p.n + 1), r)):
            best = r
        else:
            break
    return longest_decreasing_run(p) == best


def _check_strong_modules(p):
    g = inversion_graph(p)
    mods = brute_modules(g)
    strong = brute_strong_modules(g, mods)
    if strong != _as_interval_sets(strong_modules(p)):
        return False
    for lo in range(1, p.n + 1):
        for hi in range(lo, p.n + 1):
            iv = Interval(lo, hi)
            if (iv.as_set() in mods) != (iv in all_blocks(p)):
                return False
    # a non-strong module is a union of children of a parallel or serial node
    nodes = [t for t in substitution_tree(p).preorder() if t.kind is not BlockKind.PRIME and t.children]
    for m in mods - strong:
        ok = False
        for node in nodes:
            kids = [c.interval.as_set() for c in node.children]
            inside = [k for k in kids if k <= m]
            if sum(len(k) for k in inside) == len(m) and 1 < len(inside) < len(kids):
                ok = True
                break
        if not ok:
            return False
    # the converse: any proper union of two or more such children is a module
    for node in nodes:
        kids = [c.interval.as_set() for c in node.children]
        for r in range(2, len(kids)):
            for sel in combinations(kids, r):
                if frozenset().union(*sel) not in mods:
                    return False
    # image of the outside / in-between parts of every module
    n = p.n
    full = set(range(1, n + 1))
    for m in mods:
        lo, hi = min(m), max(m)
        below = {x for x in full if x < lo}
        above = {x for x in full if x > hi}
        between = full - below - above - m
        img = {p(x) for x in m}
        ilo, ihi = min(img), max(img)
        ibelow = {x for x in full if x < ilo}
        iabove = {x for x in full if x > ihi}
        ibetween = full - ibelow - iabove - img
        if {p(x) for x in below | above} != ibelow | iabove:
            return False
        if {p(x) for x in between} != ibetween:
            return False
    return True


def _check_edge_classes(p):
    structural = edge_classes_structural(p)
    closure = edge_classes_closure(inversion_graph(p))
    if structural.as_partition() != closure.as_partition():
        return False
    # each class is external to exactly one strong module
    edges = inversion_set(p).edges
    seen = set()
    for cls in structural:
        if seen & cls.edges:
            return False
        seen |= cls.edges
    return seen == edges


def _check_components(p):
    return all({p(c) for c in comp} == set(comp) for comp in connected_components(inversion_graph(p)))


def _check_count_vs_brute(p):
    return count_decompositions(p) == len(brute_decompositions(p))


def _check_enumeration(p):
    items = list(enumerate_decompositions(p))
    if len(items) != count_decompositions(p) or len(set(items)) != len(items):
        return False
    classes = edge_classes_structural(p)
    v_sum = vertex_vector(identity(p.n)).matrix + vertex_vector(p).matrix
    for d in items:
        if not d.is_valid_for(p):
            return False
        t1 = inversion_set(d.tau1).edges
        if any(not (c.edges <= t1 or not (c.edges & t1)) for c in classes):
            return False
        if not (v_sum == vertex_vector(d.tau1).matrix + vertex_vector(d.tau2).matrix).all():
            return False
    return (len(items) > 0) == is_decomposable(p)


def _check_inflation(p):
    built = set()
    by_classes = set()
    for choice in iter_choices(p):
        d = decomposition_from_choice(p, choice)
        if d is None:
            continue
        by_classes.add(d)
        built.add(decomposition_by_inflation(p, choice))
    return built == by_classes == set(enumerate_decompositions(p))


def _check_multiplicative(p):
    w = multiplicative_witness(p)
    if not is_decomposable(p):
        return w is None
    return w is not None and w.is_valid_for(p) and is_multiplicative(p, w)


def _check_clique_bound(p):
    if len(connected_components(inversion_graph(p))) != 1:
        return True
    if any(not is_multiplicative(p, d) for d in enumerate_decompositions(p)):
        return longest_decreasing_run(p) >= 4
    return True


def _check_length_bound(p):
    if len(inversion_set(p)) >= min_inversions_guarantee(p.n):
        return is_decomposable(p)
    return True


def _check_merges(p):
    for parts in brute_three_part_partitions(p):
        if not validate_partition(p, parts):
            return False
        for i, j in combinations(range(3), 2):
            merged = inversion_set(parts[i]).edges | inversion_set(parts[j]).edges
            if not is_inversion_set(InversionSet(p.n, merged)):
                return False
            if inversion_set(merge_parts(p, parts, i, j)).edges != merged:
                return False
    return True


def _check_product_identity(p):
    # p plays tau2; sweep all tau1 of the same size
    t2 = inversion_set(p).edges
    inv = inverse(p)
    for q in all_permutations(p.n):
        lhs = inversion_set(compose(q, p)).edges
        if lhs != t2 ^ apply_map(inversion_set(q), inv):
            return False
    return True


@dataclass(frozen=True)
class _Check:
    fn: Callable[[Permutation], bool]
    max_n: int
    # guarantee only holds from this size on; smaller sizes run only on request
    min_n: int = 1


CHECKS: dict[str, _Check] = {
    "blocks": _Check(_check_blocks, 9),
    "tree-roundtrip": _Check(_check_tree_roundtrip, 9),
    "tree-shape": _Check(_check_tree_shape, 8),
    "inversion-roundtrip": _Check(_check_inversion_roundtrip, 9),
    "clique": _Check(_check_clique, 7),
    "components": _Check(_check_components, 9),
    "strong-modules": _Check(_check_strong_modules, 6),
    "edge-classes": _Check(_check_edge_classes, 8),
    "count-vs-brute": _Check(_check_count_vs_brute, 6),
    "enumeration": _Check(_check_enumeration, 6),
    "inflation": _Check(_check_inflation, 6),
    "multiplicative": _Check(_check_multiplicative, 8),
    "clique-bound": _Check(_check_clique_bound, 6),
    "length-bound": _Check(_check_length_bound, 8, min_n=5),
    "merges": _Check(_check_merges, 5),
    "product-identity": _Check(_check_product_identity, 6),
}


def default_checks(n: int) -> list[str]:
    """Checks selected by ``"all"``: within budget and guaranteed at this size."""
    return [name for name, c in CHECKS.items() if c.min_n <= n <= c.max_n]


@dataclass
class CheckResult:
    passes: int = 0
    failures: int = 0
    witnesses: list[list[int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"passes": self.passes, "failures": self.failures, "witnesses": self.witnesses}


@dataclass
class SweepReport:
    n: int
    permutations_checked: int = 0
    checks: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def failures(self) -> int:
        return sum(c.failures for c in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def merge(self, other: "SweepReport", cap: Optional[int]) -> "SweepReport":
        out = SweepReport(self.n, self.permutations_checked + other.permutations_checked)
        for name in self.checks.keys() | other.checks.keys():
            a = self.checks.get(name, CheckResult())
            b = other.checks.get(name, CheckResult())
            w = a.witnesses + b.witnesses
            out.checks[name] = CheckResult(a.passes + b.passes, a.failures + b.failures,
                                           w if cap is None else w[:cap])
        out.checks = {k: out.checks[k] for k in sorted(out.checks)}
        return out

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "permutations_checked": self.permutations_checked,
            "checks": {k: v.as_dict() for k, v in sorted(self.checks.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))


def _resolve_checks(n: int, checks) -> list[str]:
    if checks is None or checks == "all":
        return default_checks(n)
    names = [checks] if isinstance(checks, str) else list(checks)
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
        if n > CHECKS[name].max_n:
            raise ValueError(f"check {name!r} is limited to n <= {CHECKS[name].max_n}")
    return names


def _sweep_range(n: int, names: Sequence[str], start: int, stop: int, cap: Optional[int]) -> SweepReport:
    report = SweepReport(n, checks={name: CheckResult() for name in names})
    for word in islice(permutations(range(1, n + 1)), start, stop):
        p = Permutation(word)
        report.permutations_checked += 1
        for name in names:
            res = report.checks[name]
            if CHECKS[name].fn(p):
                res.passes += 1
            else:
                res.failures += 1
                if cap is None or len(res.witnesses) < cap:
                    res.witnesses.append(p.to_list())
    return report


def sweep_verify(n: int, checks="all", jobs: int = 1, witness_cap: Optional[int] = 10) -> SweepReport:
    """Run the selected checks on every permutation of size ``n``.

    Work is split into contiguous lexicographic rank ranges when ``jobs > 1``;
    shard reports are merged in rank order, so the result does not depend on
    ``jobs``.  ``witness_cap=None`` keeps every failing permutation.
    """
    if n < 1:
        raise ValueError("n must be positive")
    names = _resolve_checks(n, checks)
    total = math.factorial(n)
    jobs = max(1, min(jobs, total))
    bounds = [total * k // jobs for k in range(jobs + 1)]
    if jobs == 1:
        shards = [_sweep_range(n, names, 0, total, witness_cap)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_sweep_range, n, names, bounds[k], bounds[k + 1], witness_cap)
                       for k in range(jobs)]
            shards = [f.result() for f in futures]
    report = SweepReport(n, checks={name: CheckResult() for name in names})
    for shard in shards:
        report = report.merge(shard, witness_cap)
    return report
