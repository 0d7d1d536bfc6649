"""Blocks (common intervals) of a permutation and its substitution tree.

A block of ``p`` is an interval of positions whose image is an interval of
values.  Strong blocks (those overlapped by no other block) nest into a tree;
each node is parallel, serial or prime according to how its children's
images are ordered, and ``p`` is the iterated inflation of the node skeletons.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perm_core import Permutation, identity, longest_element

__all__ = [
    "Interval", "BlockKind", "SubstitutionTree",
    "is_block", "all_blocks", "strong_blocks", "classify_block", "is_simple",
    "substitution_tree", "inflate", "tree_to_permutation", "pattern_of",
]


@dataclass(frozen=True, order=True)
class Interval:
    """The positions ``lo, lo+1, ..., hi``."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def overlaps(self, other: "Interval") -> bool:
        """Intersect without either containing the other."""
        if self.hi < other.lo or other.hi < self.lo:
            return False
        return other not in self and self not in other

    def as_set(self) -> frozenset[int]:
        return frozenset(self)

    def to_list(self) -> list[int]:
        return [self.lo, self.hi]

    def __repr__(self) -> str:
        return f"[{self.lo},{self.hi}]"


class BlockKind(enum.Enum):
    PARALLEL = "parallel"
    SERIAL = "serial"
    PRIME = "prime"


@dataclass(frozen=True)
class SubstitutionTree:
    """Node of the substitution decomposition, covering one strong block."""

    interval: Interval
    kind: BlockKind
    skeleton: Permutation
    children: tuple["SubstitutionTree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def preorder(self) -> Iterator["SubstitutionTree"]:
        yield self
        for c in self.children:
            yield from c.preorder()

    def intervals(self) -> set[Interval]:
        return {node.interval for node in self.preorder()}

    def as_dict(self) -> dict:
        return {
            "interval": self.interval.to_list(),
            "kind": self.kind.value,
            "skeleton": self.skeleton.to_list(),
            "children": [c.as_dict() for c in self.children],
        }

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        line = f"{pad}{self.interval!r} {self.kind.value} {self.skeleton}"
        return "\n".join([line] + [c.render(indent + 1) for c in self.children])


def _check_interval(p: Permutation, interval: Interval) -> None:
    if interval.hi > p.n:
        raise ValueError(f"interval {interval!r} outside [1, {p.n}]")


def is_block(p: Permutation, interval: Interval) -> bool:
    _check_interval(p, interval)
    image = p.word[interval.lo - 1:interval.hi]
    return max(image) - min(image) == len(interval) - 1


def all_blocks(p: Permutation) -> set[Interval]:
    # running min/max per left end: O(n^2) overall
    w = p.word
    out = set()
    for lo in range(p.n):
        mn = mx = w[lo]
        for hi in range(lo, p.n):
            mn, mx = min(mn, w[hi]), max(mx, w[hi])
            if mx - mn == hi - lo:
                out.add(Interval(lo + 1, hi + 1))
    return out


def strong_blocks(p: Permutation) -> set[Interval]:
    blocks = all_blocks(p)
    return {b for b in blocks if not any(b.overlaps(c) for c in blocks)}


def _maximal_inside(interval: Interval, strong: set[Interval]) -> list[Interval]:
    inside = [b for b in strong if b in interval and b != interval]
    top = [b for b in inside if not any(b in c and b != c for c in inside)]
    return sorted(top)


def pattern_of(values: Sequence[int]) -> Permutation:
    """The permutation order isomorphic to a sequence of distinct numbers."""
    rank = {v: r for r, v in enumerate(sorted(values), 1)}
    return Permutation(tuple(rank[v] for v in values))


def _kind_of(skeleton: Permutation) -> BlockKind:
    if skeleton.is_identity():
        return BlockKind.PARALLEL
    if skeleton == longest_element(skeleton.n):
        return BlockKind.SERIAL
    return BlockKind.PRIME


def _skeleton(p: Permutation, parts: Sequence[Interval]) -> Permutation:
    return pattern_of([p(part.lo) for part in parts])


def classify_block(p: Permutation, interval: Interval) -> BlockKind:
    """Kind of a block with at least two positions, read off its children.

    The children are the maximal strong blocks strictly inside ``interval``.
    """
    if not is_block(p, interval):
        raise ValueError(f"{interval!r} is not a block of {p}")
    if len(interval) < 2:
        raise ValueError("singleton blocks have no kind to classify")
    parts = _maximal_inside(interval, strong_blocks(p))
    return _kind_of(_skeleton(p, parts))


def is_simple(p: Permutation) -> bool:
    """No blocks besides the singletons and ``[1, n]``.

    Read literally, so ``1``, ``12`` and ``21`` count as simple.
    """
    return all(len(b) == 1 or len(b) == p.n for b in all_blocks(p))


def substitution_tree(p: Permutation) -> SubstitutionTree:
    strong = strong_blocks(p)

    def build(interval: Interval) -> SubstitutionTree:
        if len(interval) == 1:
            return SubstitutionTree(interval, BlockKind.PARALLEL, identity(1))
        parts = _maximal_inside(interval, strong)
        skeleton = _skeleton(p, parts)
        return SubstitutionTree(
            interval, _kind_of(skeleton), skeleton,
            tuple(build(part) for part in parts),
        )

    return build(Interval(1, p.n))


def inflate(skeleton: Permutation, parts: Sequence[Permutation]) -> Permutation:
    """Replace each letter ``skeleton(i)`` by an interval patterned on ``parts[i]``."""
    if len(parts) != skeleton.n:
        raise ValueError(f"skeleton of size {skeleton.n} needs {skeleton.n} parts, got {len(parts)}")
    sizes = [q.n for q in parts]
    # value offset of part i: total size of parts whose skeleton letter is smaller
    by_value = sorted(range(skeleton.n), key=lambda i: skeleton.word[i])
    offset = [0] * skeleton.n
    acc = 0
    for i in by_value:
        offset[i] = acc
        acc += sizes[i]
    word = []
    for i, q in enumerate(parts):
        word.extend(offset[i] + x for x in q.word)
    return Permutation(tuple(word))


def tree_to_permutation(tree: SubstitutionTree) -> Permutation:
    if tree.is_leaf:
        if len(tree.interval) != 1:
            raise ValueError(f"leaf {tree.interval!r} is not a singleton")
        return identity(1)
    if tree.skeleton.n != len(tree.children):
        raise ValueError(f"node {tree.interval!r}: skeleton arity does not match children")
    expect = tree.interval.lo
    for child in tree.children:
        if child.interval.lo != expect:
            raise ValueError(f"children of {tree.interval!r} do not partition it")
        expect = child.interval.hi + 1
    if expect != tree.interval.hi + 1:
        raise ValueError(f"children of {tree.interval!r} do not partition it")
    return inflate(tree.skeleton, [tree_to_permutation(c) for c in tree.children])
