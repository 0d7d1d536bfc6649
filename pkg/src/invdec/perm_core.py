"""Permutations in one-line notation and their inversion sets.

Values and positions are 1-based throughout, so ``Permutation((2, 4, 1, 3))``
maps 1 -> 2, 2 -> 4, 3 -> 1, 4 -> 3.  Inversions are stored as sorted pairs
``(i, j)`` with ``i < j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

__all__ = [
    "Pair", "Permutation", "InversionSet",
    "parse_permutation", "identity", "longest_element", "all_permutations",
    "compose", "inverse", "reversal", "complement",
    "inversion_set", "is_inversion_set", "permutation_from_inversion_set",
    "apply_map", "longest_decreasing_run", "all_pairs",
]

Pair = tuple[int, int]


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``[n]`` given by its word ``pi_1 pi_2 ... pi_n``."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise ValueError("a permutation needs at least one letter")
        if sorted(word) != list(range(1, len(word) + 1)):
            seen = set()
            for x in word:
                if x in seen:
                    raise ValueError(f"value {x} repeated in {list(word)}")
                seen.add(x)
            raise ValueError(f"{list(word)} is not a bijection of [{len(word)}]")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        return self.word[i - 1]

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __str__(self) -> str:
        return " ".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.word, 1))

    def to_list(self) -> list[int]:
        return list(self.word)


@dataclass(frozen=True)
class InversionSet:
    """A set of pairs ``(i, j)``, ``1 <= i < j <= n``, over the ambient size ``n``.

    Well-formedness is enforced; realizability by a permutation is not (see
    :func:`is_inversion_set`).  Two empty sets with different ``n`` differ.
    """

    n: int
    edges: frozenset[Pair]

    def __post_init__(self):
        edges = frozenset(_normalize(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise ValueError("ambient size must be positive")
        for i, j in edges:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"pair {(i, j)} outside [1, {self.n}]")

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, pair) -> bool:
        return _normalize(pair) in self.edges

    def __iter__(self) -> Iterator[Pair]:
        return iter(sorted(self.edges))

    def sorted_edges(self) -> list[Pair]:
        return sorted(self.edges)

    def complement(self) -> "InversionSet":
        return InversionSet(self.n, frozenset(all_pairs(self.n)) - self.edges)


def _normalize(pair) -> Pair:
    i, j = pair
    if i == j:
        raise ValueError(f"degenerate pair {(i, j)}")
    return (i, j) if i < j else (j, i)


def all_pairs(n: int) -> list[Pair]:
    return list(combinations(range(1, n + 1), 2))


def parse_permutation(text: str) -> Permutation:
    """Read one-line notation.

    Accepts whitespace-separated values (``"2 4 1 3"``) or, for ``n <= 9``, a
    contiguous digit string (``"2413"``).

    >>> parse_permutation("2413")
    Permutation(2 4 1 3)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    tokens = text.split()
    if len(tokens) == 1:
        token = tokens[0]
        if not token.isdigit():
            raise ValueError(f"cannot parse {text!r} as a permutation")
        if len(token) > 9:
            raise ValueError("compact notation only covers n <= 9; separate values by spaces")
        return Permutation(tuple(int(c) for c in token))
    if not all(t.isdigit() for t in tokens):
        raise ValueError(f"cannot parse {text!r} as a permutation")
    if len(tokens) <= 9 and any(len(t) > 1 for t in tokens):
        raise ValueError(f"mixed compact and spaced notation in {text!r}")
    return Permutation(tuple(int(t) for t in tokens))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    """The reverse identity ``n (n-1) ... 1``."""
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic order of words."""
    from itertools import permutations
    for w in permutations(range(1, n + 1)):
        yield Permutation(w)


def _check_sizes(a: Permutation, b: Permutation) -> None:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``i -> a(b(i))``; ``b`` acts first."""
    _check_sizes(a, b)
    return Permutation(tuple(a.word[x - 1] for x in b.word))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, x in enumerate(p.word, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def reversal(p: Permutation) -> Permutation:
    return Permutation(p.word[::-1])


def complement(p: Permutation) -> Permutation:
    """Value complement ``n+1-p(i)``, i.e. ``compose(w0, p)``.

    Its inversion set is the complement of ``T_p`` among all pairs.
    """
    return Permutation(tuple(p.n + 1 - x for x in p.word))


def inversion_set(p: Permutation) -> InversionSet:
    w = p.word
    return InversionSet(p.n, frozenset(
        (i + 1, j + 1)
        for i, j in combinations(range(p.n), 2) if w[i] > w[j]
    ))


def is_inversion_set(t: InversionSet) -> bool:
    """Both transitivity conditions over every triple ``i < j < k``.

    ``ij, jk`` in T forces ``ik`` in T; ``ik`` in T forces ``ij`` or ``jk``.
    """
    e = t.edges
    for i, j, k in combinations(range(1, t.n + 1), 3):
        ij, jk, ik = (i, j) in e, (j, k) in e, (i, k) in e
        if ij and jk and not ik:
            return False
        if ik and not (ij or jk):
            return False
    return True


def permutation_from_inversion_set(t: InversionSet) -> Permutation:
    """The unique permutation with inversion set ``t``.

    ``p(i) = i + #{j > i : ij in t} - #{j < i : ji in t}``.  The result is
    checked by recomputing its inversion set.
    """
    shift = [0] * (t.n + 1)
    for i, j in t.edges:
        shift[i] += 1
        shift[j] -= 1
    try:
        p = Permutation(tuple(i + shift[i] for i in range(1, t.n + 1)))
    except ValueError:
        raise ValueError("not the inversion set of any permutation") from None
    if inversion_set(p).edges != t.edges:
        raise ValueError("not the inversion set of any permutation")
    return p


def apply_map(t: InversionSet, s: Permutation) -> frozenset[Pair]:
    """Relabel every pair of ``t`` by ``s``; the image need not be realizable."""
    if t.n != s.n:
        raise ValueError(f"size mismatch: {t.n} vs {s.n}")
    return frozenset(_normalize((s(i), s(j))) for i, j in t.edges)


def longest_decreasing_run(p: Permutation) -> int:
    """Length of the longest strictly decreasing subsequence of the word."""
    # patience sorting on negated values
    from bisect import bisect_left
    tails: list[int] = []
    for x in p.word:
        k = bisect_left(tails, -x)
        if k == len(tails):
            tails.append(-x)
        else:
            tails[k] = -x
    return len(tails)


def as_permutations(items: Iterable) -> list[Permutation]:
    """Coerce words, strings or permutations to a list of permutations."""
    out = []
    for item in items:
        if isinstance(item, Permutation):
            out.append(item)
        elif isinstance(item, str):
            out.append(parse_permutation(item))
        else:
            out.append(Permutation(tuple(item)))
    return out
