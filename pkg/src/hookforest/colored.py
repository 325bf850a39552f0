"""Labelled plane forests, proper vertices and proper k-colorings.

A labelled forest is a tuple of :class:`Vertex` trees.  Internal vertices
carry an integer label (and, once colored, a :class:`Color`); leaves are
``Vertex(())``.  A colored labelled forest pairs such trees with the number
``k`` of special colors it was drawn from.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .algebra import multinomial
from .forest import (
    DegreeSequence,
    PlaneForest,
    PlaneTree,
    VertexRef,
    degree_sequence_of,
    enumerate_forests,
    flatten,
)


class Color(NamedTuple):
    """``kind`` is ``"e"`` for an edge color, ``"s"`` for a special one."""

    kind: str
    index: int

    def to_json(self) -> dict:
        return {self.kind: self.index}

    @classmethod
    def from_json(cls, obj) -> "Color":
        if not isinstance(obj, dict) or len(obj) != 1:
            raise ValueError(f"bad color {obj!r}")
        (kind, index), = obj.items()
        if kind not in ("e", "s") or not isinstance(index, int) or index < 1:
            raise ValueError(f"bad color {obj!r}")
        return cls(kind, index)


def Edge(j: int) -> Color:
    return Color("e", j)


def Special(t: int) -> Color:
    return Color("s", t)


class Vertex(NamedTuple):
    children: Tuple["Vertex", ...] = ()
    label: Optional[int] = None
    color: Optional[Color] = None


LEAF = Vertex()

LabelledForest = Tuple[Vertex, ...]


class ColoredLabelledForest(NamedTuple):
    trees: Tuple[Vertex, ...]
    k: int

    def to_json(self) -> list:
        return [_vertex_to_json(t) for t in self.trees]

    @classmethod
    def from_json(cls, obj, k: int) -> "ColoredLabelledForest":
        if not isinstance(obj, list) or not obj:
            raise ValueError("a forest must be a nonempty array of trees")
        return cls(tuple(_vertex_from_json(t) for t in obj), k)


def _vertex_to_json(v: Vertex) -> dict:
    out: dict = {"c": [_vertex_to_json(c) for c in v.children]}
    if v.label is not None:
        out["label"] = v.label
    if v.color is not None:
        out["color"] = v.color.to_json()
    return out


def _vertex_from_json(obj) -> Vertex:
    if not isinstance(obj, dict) or not isinstance(obj.get("c"), list):
        raise ValueError(f"bad tree node {obj!r}")
    children = tuple(_vertex_from_json(c) for c in obj["c"])
    label = obj.get("label")
    color = Color.from_json(obj["color"]) if "color" in obj else None
    if children and not isinstance(label, int):
        raise ValueError("internal vertex without an integer label")
    if not children and (label is not None or color is not None):
        raise ValueError("leaves carry neither label nor color")
    return Vertex(children, label, color)


# -- traversal -------------------------------------------------------------

def walk(trees: Sequence[Vertex]) -> Iterator[Tuple[VertexRef, Vertex]]:
    """Internal vertices in preorder with their 1-based references."""

    def rec(v: Vertex, t: int, path: Tuple[int, ...]):
        if v.children:
            yield VertexRef(t, path), v
            for j, c in enumerate(v.children, 1):
                yield from rec(c, t, path + (j,))

    for t, tree in enumerate(trees, 1):
        yield from rec(tree, t, ())


def _trees(forest) -> Tuple[Vertex, ...]:
    return forest.trees if isinstance(forest, ColoredLabelledForest) else tuple(forest)


def node_at(forest, ref: VertexRef) -> Vertex:
    node = _trees(forest)[ref.tree - 1]
    for step in ref.path:
        node = node.children[step - 1]
    return node


def shape_of(forest) -> PlaneForest:
    def strip(v: Vertex) -> PlaneTree:
        return tuple(strip(c) for c in v.children)

    return tuple(strip(t) for t in _trees(forest))


def labels_of(forest) -> Tuple[int, ...]:
    """Labels of internal vertices in preorder."""
    return tuple(v.label for _, v in walk(_trees(forest)))


def subtree_labels(v: Vertex) -> Iterator[int]:
    if v.children:
        yield v.label
        for c in v.children:
            yield from subtree_labels(c)


def min_below(v: Vertex) -> Optional[int]:
    """Smallest label strictly below ``v``, or None."""
    return min((x for c in v.children for x in subtree_labels(c)), default=None)


def is_proper(forest, ref: VertexRef) -> bool:
    """True iff no internal strict descendant has a smaller label."""
    v = node_at(forest, ref)
    if not v.children:
        raise ValueError(f"{ref} is a leaf")
    below = min_below(v)
    return below is None or below > v.label


def label_forest(shape: PlaneForest, labels: Sequence[int], colors: Optional[Sequence[Color]] = None) -> Tuple[Vertex, ...]:
    """Attach labels (and colors) to the internal vertices of ``shape``,
    both given in preorder."""
    it = iter(range(len(labels)))

    def build(node: PlaneTree) -> Vertex:
        if not node:
            return LEAF
        slot = next(it)
        kids = tuple(build(c) for c in node)
        return Vertex(kids, labels[slot], colors[slot] if colors is not None else None)

    return tuple(build(t) for t in shape)


def proper_flags(flat, labels: Sequence[int]) -> List[bool]:
    return [
        all(labels[u] > labels[v] for u in range(v + 1, flat.ends[v]))
        for v in range(flat.n)
    ]


def count_colorings(forest, k: int) -> int:
    """Number of proper k-colorings of a labelled forest."""
    out = 1
    for _, v in walk(_trees(forest)):
        below = min_below(v)
        proper = below is None or below > v.label
        out *= len(v.children) + (0 if proper else k)
    return out


# -- partitions of the labels by degree -------------------------------------

@dataclass(frozen=True, order=True)
class Partition:
    """Partition ``(S_1, S_2, ...)`` of ``[n]``: ``word[i-1]`` is the degree
    class that label ``i`` belongs to."""

    word: Tuple[int, ...]

    def __post_init__(self):
        if any(d < 1 for d in self.word):
            raise ValueError(f"degree classes start at 1, got {self.word}")

    @classmethod
    def from_classes(cls, classes: Dict[int, Iterable[int]]) -> "Partition":
        owner: Dict[int, int] = {}
        for d, labels in classes.items():
            d = int(d)
            for lab in labels:
                if lab in owner:
                    raise ValueError(f"label {lab} appears in two classes")
                owner[int(lab)] = d
        n = len(owner)
        if set(owner) != set(range(1, n + 1)):
            raise ValueError(f"classes do not partition [1..{n}]: {sorted(owner)}")
        return cls(tuple(owner[i] for i in range(1, n + 1)))

    @classmethod
    def from_json(cls, obj) -> "Partition":
        if not isinstance(obj, dict):
            raise ValueError("a partition is an object mapping degree to labels")
        return cls.from_classes({int(d): labs for d, labs in obj.items()})

    @property
    def n(self) -> int:
        return len(self.word)

    def degree_of(self, label: int) -> int:
        return self.word[label - 1]

    def classes(self) -> Dict[int, Tuple[int, ...]]:
        out: Dict[int, List[int]] = {}
        for i, d in enumerate(self.word, 1):
            out.setdefault(d, []).append(i)
        return {d: tuple(out[d]) for d in sorted(out)}

    def class_sizes(self) -> Dict[int, int]:
        return {d: len(labs) for d, labs in self.classes().items()}

    def matches(self, r: DegreeSequence) -> bool:
        sizes = self.class_sizes()
        return all(sizes.get(d, 0) == r[d] for d in range(1, max(r.max_degree, max(sizes, default=0)) + 1))

    def without(self, label: int) -> Dict[int, int]:
        return {i: d for i, d in enumerate(self.word, 1) if i != label}

    def to_json(self) -> dict:
        return {str(d): list(labs) for d, labs in self.classes().items()}

    def __str__(self) -> str:
        return "(" + ", ".join(f"S_{d}={{{','.join(map(str, labs))}}}" for d, labs in self.classes().items()) + ")"


def partitions(r: DegreeSequence) -> List[Partition]:
    """All of ``V_r`` in lexicographic order of their words."""
    remaining = {d: c for d, c in r.internal_degrees()}
    word: List[int] = []
    out: List[Partition] = []

    def rec():
        if len(word) == r.n:
            out.append(Partition(tuple(word)))
            return
        for d in sorted(remaining):
            if remaining[d]:
                remaining[d] -= 1
                word.append(d)
                rec()
                word.pop()
                remaining[d] += 1

    rec()
    return out


def _same_type(s1: Partition, s2: Partition) -> None:
    if sorted(s1.word) != sorted(s2.word):
        raise ValueError(f"partitions {s1} and {s2} are of different types")


def swap_position(s1: Partition, s2: Partition) -> Optional[int]:
    """The ``i`` with ``s2 = (i, i+1) s1``, or None when not adjacent."""
    _same_type(s1, s2)
    diff = [p for p in range(s1.n) if s1.word[p] != s2.word[p]]
    if len(diff) == 2 and diff[1] == diff[0] + 1:
        p = diff[0]
        if s1.word[p] == s2.word[p + 1] and s1.word[p + 1] == s2.word[p]:
            return p + 1
    return None


def adjacent(s1: Partition, s2: Partition) -> bool:
    return swap_position(s1, s2) is not None


def swap_labels(s: Partition, i: int) -> Partition:
    w = list(s.word)
    w[i - 1], w[i] = w[i], w[i - 1]
    return Partition(tuple(w))


def partition_path(s1: Partition, s2: Partition) -> List[Partition]:
    """A walk through adjacent partitions from ``s1`` to ``s2``."""
    _same_type(s1, s2)
    path = [s1]
    cur = list(s1.word)
    for p in range(len(cur)):
        if cur[p] == s2.word[p]:
            continue
        q = cur.index(s2.word[p], p)
        # letters strictly between p and q differ from the one moving left
        for j in range(q, p, -1):
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            path.append(Partition(tuple(cur)))
    return path


# -- enumeration and counts ------------------------------------------------

def _labellings(flat, partition: Optional[Partition]) -> Iterator[Tuple[int, ...]]:
    n = flat.n
    if partition is None:
        yield from itertools.permutations(range(1, n + 1))
        return
    pools = partition.classes()
    used = set()
    out: List[int] = []

    def rec(slot: int):
        if slot == n:
            yield tuple(out)
            return
        for lab in pools.get(flat.degrees[slot], ()):
            if lab not in used:
                used.add(lab)
                out.append(lab)
                yield from rec(slot + 1)
                out.pop()
                used.discard(lab)

    yield from rec(0)


def _color_options(d: int, proper: bool, k: int) -> List[Color]:
    opts = [Edge(j) for j in range(1, d + 1)]
    if not proper:
        opts += [Special(t) for t in range(1, k + 1)]
    return opts


def iter_colored(
    r: DegreeSequence,
    k: int,
    partition: Optional[Partition] = None,
    first_tree_min: bool = False,
) -> Iterator[ColoredLabelledForest]:
    """Lazy form of :func:`enumerate_colored`."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if partition is not None and (partition.n != r.n or not partition.matches(r)):
        raise ValueError(f"partition {partition} is inconsistent with type {r}")
    for shape in enumerate_forests(r):
        flat = flatten(shape)
        for labels in _labellings(flat, partition):
            if first_tree_min and (not labels or flat.trees[labels.index(1)] != 0):
                continue
            flags = proper_flags(flat, labels)
            options = [_color_options(d, p, k) for d, p in zip(flat.degrees, flags)]
            for colors in itertools.product(*options):
                yield ColoredLabelledForest(label_forest(shape, labels, colors), k)


def enumerate_colored(
    r: DegreeSequence,
    k: int,
    partition: Optional[Partition] = None,
    first_tree_min: bool = False,
) -> List[ColoredLabelledForest]:
    """Every proper k-colored labelled forest of type ``r``.

    With ``partition`` only forests whose labels respect the degree classes
    are kept; with ``first_tree_min`` only those with label 1 in the first
    tree (none when ``n = 0``).  Order: forest shape, then labelling, then
    coloring, each lexicographic.
    """
    return list(iter_colored(r, k, partition, first_tree_min))


def count_colored(r: DegreeSequence, k: int, partition: Optional[Partition] = None,
                  first_tree_min: bool = False) -> int:
    return sum(1 for _ in iter_colored(r, k, partition, first_tree_min))


def lemma_ccf_lhs(r: DegreeSequence, k: int) -> Fraction:
    """``sum_F n! prod_v ((d_v + k) - k/h_v)`` over plane forests of type r."""
    total = Fraction(0)
    nfact = math.factorial(r.n)
    for shape in enumerate_forests(r):
        flat = flatten(shape)
        term = Fraction(nfact)
        for d, h in zip(flat.degrees, flat.hooks):
            term *= (d + k) - Fraction(k, h)
        total += term
    return total


def _shifted(r: DegreeSequence, k: int) -> Fraction:
    # prod_{i=1}^{n-1} (r0 + i(1+k)); for n = 0 read as 1/r0 (see algebra.shifted_product)
    if r.n == 0:
        return Fraction(1, r.r0)
    return Fraction(math.prod(r.r0 + i * (1 + k) for i in range(1, r.n)))


def _degree_power(r: DegreeSequence) -> int:
    return math.prod(d ** c for d, c in r.internal_degrees())


def _integral(value: Fraction) -> int:
    assert value.denominator == 1, f"non-integral count {value}"
    return value.numerator


def prop_cf_count(r: DegreeSequence, k: int) -> int:
    """``multinomial(n; r_1, r_2, ...) * ell * prod d^{r_d} * prod_{i<n} (r0 + i(1+k))``."""
    m = multinomial(r.n, list(r.counts[1:]))
    return _integral(m * r.ell * _degree_power(r) * _shifted(r, k))


def thm_cfs_count(r: DegreeSequence, k: int) -> int:
    """``ell * prod d^{r_d} * prod_{i<n} (r0 + i(1+k))``; the size of every
    class-restricted set."""
    return _integral(r.ell * _degree_power(r) * _shifted(r, k))


def labellings_with_proper_set(shape: PlaneForest, proper_slots: Iterable[int]) -> int:
    """Labellings of ``shape`` in which every listed preorder slot is proper
    (brute force over all ``n!`` labellings)."""
    flat = flatten(shape)
    slots = list(proper_slots)
    count = 0
    for labels in itertools.permutations(range(1, flat.n + 1)):
        if all(all(labels[u] > labels[v] for u in range(v + 1, flat.ends[v])) for v in slots):
            count += 1
    return count


# -- membership -------------------------------------------------------------

def check_colored(forest: ColoredLabelledForest, partition: Optional[Partition] = None,
                  r: Optional[DegreeSequence] = None) -> None:
    """Raise ValueError unless ``forest`` is a proper k-colored labelled
    forest (respecting ``partition`` and of type ``r`` when given)."""
    if not forest.trees:
        raise ValueError("empty forest")
    shape = shape_of(forest)
    if r is not None and degree_sequence_of(shape) != r:
        raise ValueError(f"forest has type {degree_sequence_of(shape)}, expected {r}")
    nodes = list(walk(forest.trees))
    labels = sorted(v.label for _, v in nodes)
    if labels != list(range(1, len(nodes) + 1)):
        raise ValueError(f"labels {labels} are not a bijection onto [1..{len(nodes)}]")
    if partition is not None and partition.n != len(nodes):
        raise ValueError(f"partition {partition} has the wrong size")
    for ref, v in nodes:
        d = len(v.children)
        if partition is not None and partition.degree_of(v.label) != d:
            raise ValueError(f"label {v.label} sits on a degree-{d} vertex, outside its class")
        if v.color is None:
            raise ValueError(f"vertex {ref} is uncolored")
        below = min_below(v)
        proper = below is None or below > v.label
        if v.color.kind == "e" and not 1 <= v.color.index <= d:
            raise ValueError(f"edge color {v.color.index} out of range at {ref}")
        if v.color.kind == "s":
            if proper:
                raise ValueError(f"proper vertex {ref} carries a special color")
            if not 1 <= v.color.index <= forest.k:
                raise ValueError(f"special color {v.color.index} exceeds k={forest.k}")
    for t in forest.trees:
        for c in _leaves_and_nodes(t):
            if not c.children and (c.label is not None or c.color is not None):
                raise ValueError("leaf carries a label or color")


def _leaves_and_nodes(v: Vertex) -> Iterator[Vertex]:
    yield v
    for c in v.children:
        yield from _leaves_and_nodes(c)


def is_member(forest: ColoredLabelledForest, partition: Optional[Partition] = None,
              r: Optional[DegreeSequence] = None) -> bool:
    try:
        check_colored(forest, partition, r)
    except ValueError:
        return False
    return True
