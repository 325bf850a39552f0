"""Plane trees, plane forests and degree sequences.

A plane tree is a tuple of its children (a leaf is the empty tuple) and a
plane forest is a nonempty tuple of plane trees.  Both are plain nested
tuples, so they are immutable, hashable and compare structurally.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence, Tuple

PlaneTree = Tuple["PlaneTree", ...]
PlaneForest = Tuple[PlaneTree, ...]

LEAF: PlaneTree = ()


class InvalidTypeError(ValueError):
    """Raised for degree sequences that no nonempty forest realizes."""


class ForestParseError(ValueError):
    """Malformed forest text.  ``pos`` is the character offset of the fault."""

    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class DegreeSequence:
    """The type ``(r_0, r_1, ...)`` of a plane forest.

    ``counts[d]`` is the number of vertices with exactly ``d`` children.
    Trailing zeros are stripped on construction, so two sequences compare
    equal iff they describe the same type.
    """

    counts: Tuple[int, ...]

    def __init__(self, counts: Iterable[int]):
        counts = [int(c) for c in counts]
        while counts and counts[-1] == 0:
            counts.pop()
        if any(c < 0 for c in counts):
            raise InvalidTypeError(f"negative multiplicity in {counts}")
        object.__setattr__(self, "counts", tuple(counts))
        if self.ell < 1:
            raise InvalidTypeError(
                f"type {list(self.counts)} has {self.ell} trees; need at least one"
            )

    @classmethod
    def from_mapping(cls, mapping: dict) -> "DegreeSequence":
        top = max(mapping, default=0)
        return cls(mapping.get(d, 0) for d in range(top + 1))

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse the comma separated form ``r0,r1,r2,...``."""
        try:
            parts = [int(p) for p in text.replace(" ", "").split(",") if p != ""]
        except ValueError:
            raise InvalidTypeError(f"not a degree sequence: {text!r}") from None
        return cls(parts)

    def __getitem__(self, d: int) -> int:
        return self.counts[d] if 0 <= d < len(self.counts) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self.counts))

    def __repr__(self) -> str:
        return f"DegreeSequence({list(self.counts)})"

    @property
    def r0(self) -> int:
        return self[0]

    @property
    def n(self) -> int:
        """Number of internal vertices."""
        return sum(self.counts[1:])

    @property
    def ell(self) -> int:
        """Number of trees."""
        return -sum((d - 1) * c for d, c in enumerate(self.counts))

    @property
    def total_vertices(self) -> int:
        return self.n + self.r0

    @property
    def max_degree(self) -> int:
        return len(self.counts) - 1

    def internal_degrees(self) -> Iterator[Tuple[int, int]]:
        """Yield ``(d, r_d)`` for every ``d >= 1`` with ``r_d > 0``."""
        for d, c in enumerate(self.counts):
            if d >= 1 and c:
                yield d, c

    def without(self, d: int) -> "DegreeSequence":
        """Type obtained by deleting one vertex of degree ``d``.

        The leaf count is kept, so the tree count grows by ``d - 1``.
        """
        counts = list(self.counts)
        if d >= len(counts) or counts[d] == 0:
            raise InvalidTypeError(f"no vertex of degree {d} in {self}")
        counts[d] -= 1
        return DegreeSequence(counts)


class VertexRef(NamedTuple):
    """A vertex addressed by tree number and child positions, all 1-based."""

    tree: int
    path: Tuple[int, ...] = ()


def degree_sequence_of(forest: PlaneForest) -> DegreeSequence:
    counts: dict = {}
    stack = list(forest)
    while stack:
        node = stack.pop()
        counts[len(node)] = counts.get(len(node), 0) + 1
        stack.extend(node)
    return DegreeSequence.from_mapping(counts)


def vertex_at(forest: PlaneForest, ref: VertexRef) -> PlaneTree:
    if not 1 <= ref.tree <= len(forest):
        raise IndexError(f"no tree {ref.tree} in a forest of {len(forest)}")
    node = forest[ref.tree - 1]
    for step in ref.path:
        if not 1 <= step <= len(node):
            raise IndexError(f"vertex {ref} does not exist")
        node = node[step - 1]
    return node


def internal_count(tree: PlaneTree) -> int:
    if not tree:
        return 0
    return 1 + sum(internal_count(c) for c in tree)


def hook_length(forest: PlaneForest, ref: VertexRef) -> int:
    """Internal vertices in the subtree rooted at ``ref``, itself included."""
    node = vertex_at(forest, ref)
    if not node:
        raise ValueError(f"hook length is defined for internal vertices only; {ref} is a leaf")
    return internal_count(node)


@dataclass(frozen=True)
class FlatForest:
    """Preorder listing of the internal vertices of a plane forest.

    Internal descendants of slot ``v`` occupy slots ``v+1 .. ends[v]-1``,
    so the hook length of ``v`` is ``ends[v] - v``.
    """

    refs: Tuple[VertexRef, ...]
    degrees: Tuple[int, ...]
    ends: Tuple[int, ...]
    trees: Tuple[int, ...]  # 0-based tree index of each slot

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def hooks(self) -> Tuple[int, ...]:
        return tuple(e - v for v, e in enumerate(self.ends))


@lru_cache(maxsize=65536)
def flatten(forest: PlaneForest) -> FlatForest:
    refs, degrees, ends, trees = [], [], [], []

    def walk(node: PlaneTree, t: int, path: Tuple[int, ...]) -> None:
        if not node:
            return
        slot = len(degrees)
        refs.append(VertexRef(t + 1, path))
        degrees.append(len(node))
        ends.append(-1)
        trees.append(t)
        for j, child in enumerate(node, 1):
            walk(child, t, path + (j,))
        ends[slot] = len(degrees)

    for t, tree in enumerate(forest):
        walk(tree, t, ())
    return FlatForest(tuple(refs), tuple(degrees), tuple(ends), tuple(trees))


def internal_vertices(forest: PlaneForest) -> Iterator[Tuple[VertexRef, int, int]]:
    """Yield ``(ref, degree, hook length)`` for internal vertices in preorder."""
    flat = flatten(forest)
    yield from zip(flat.refs, flat.degrees, flat.hooks)


# -- serialization ---------------------------------------------------------

def serialize_forest(forest: PlaneForest) -> str:
    return json.dumps(forest, separators=(",", ":"))


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        got = self.peek()
        if got != ch:
            found = repr(got) if got else "end of input"
            raise ForestParseError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def array(self) -> PlaneTree:
        self.expect("[")
        items = []
        if self.peek() == "]":
            self.pos += 1
            return ()
        while True:
            items.append(self.array())
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("]")
            return tuple(items)


def parse_forest(text: str) -> PlaneForest:
    """Inverse of :func:`serialize_forest`; whitespace is ignored."""
    reader = _Reader(text)
    forest = reader.array()
    if reader.peek():
        raise ForestParseError("trailing characters", reader.pos)
    if not forest:
        raise ForestParseError("the empty forest is not allowed", 0)
    return forest


def _as_tree(obj) -> PlaneTree:
    if not isinstance(obj, list):
        raise ForestParseError(f"expected an array, got {type(obj).__name__}", 0)
    return tuple(_as_tree(c) for c in obj)


def forest_from_json(obj) -> PlaneForest:
    """Forest from an already decoded JSON value."""
    if not isinstance(obj, list) or not obj:
        raise ForestParseError("a forest must be a nonempty array of trees", 0)
    return tuple(_as_tree(t) for t in obj)


# -- counting and enumeration ----------------------------------------------

def count_forests(r: DegreeSequence) -> int:
    """Number of plane forests of type ``r``, from the cycle-lemma formula."""
    top = r.total_vertices
    num = r.ell * math.factorial(top)
    den = top
    for c in r.counts:
        den *= math.factorial(c)
    q, rem = divmod(num, den)
    assert rem == 0, f"non-integral forest count for {r}"
    return q


def _lukasiewicz_words(r: DegreeSequence) -> Iterator[Tuple[int, ...]]:
    # Preorder degree words of forests of type r: the walk of partial sums of
    # (d - 1) first reaches -ell at the final letter.
    remaining = list(r.counts)
    total = r.total_vertices
    floor = -r.ell
    word: list = []

    def rec(height: int) -> Iterator[Tuple[int, ...]]:
        if len(word) == total:
            yield tuple(word)
            return
        for d, c in enumerate(remaining):
            if not c:
                continue
            h = height + d - 1
            if h == floor and len(word) + 1 < total:
                continue
            remaining[d] -= 1
            word.append(d)
            yield from rec(h)
            word.pop()
            remaining[d] += 1

    yield from rec(0)


def _forest_from_word(word: Sequence[int]) -> PlaneForest:
    it = iter(word)

    def tree() -> PlaneTree:
        d = next(it)
        return tuple(tree() for _ in range(d))

    trees = []
    for _ in range(-sum(d - 1 for d in word)):
        trees.append(tree())
    return tuple(trees)


@lru_cache(maxsize=1024)
def enumerate_forests(r: DegreeSequence) -> Tuple[PlaneForest, ...]:
    """All plane forests of type ``r``, sorted by their serialized text."""
    forests = [_forest_from_word(w) for w in _lukasiewicz_words(r)]
    forests.sort(key=serialize_forest)
    return tuple(forests)


def degree_sequences(max_total: int, max_degree: int, min_total: int = 1) -> Iterator[DegreeSequence]:
    """Every valid type with ``min_total <= n + r_0 <= max_total`` and degrees
    bounded by ``max_degree``, ordered by size and then lexicographically."""

    def tails(d: int, budget: int) -> Iterator[Tuple[int, ...]]:
        if d > max_degree:
            yield ()
            return
        for c in range(budget + 1):
            for rest in tails(d + 1, budget - c):
                yield (c,) + rest

    for total in range(min_total, max_total + 1):
        for internal in tails(1, total):
            r0 = total - sum(internal)
            counts = (r0,) + internal
            if -sum((d - 1) * c for d, c in enumerate(counts)) >= 1:
                yield DegreeSequence(counts)
