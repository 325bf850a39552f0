"""Two bijections on colored labelled forests.

``psi`` moves a forest between the class-restricted sets of two adjacent
partitions (labels ``i`` and ``i+1`` trade degree classes).  ``encode`` and
``decode`` identify the forests whose smallest label sits in the first tree
with a box of integer code sequences.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, Sequence, Tuple

from .colored import (
    Color,
    ColoredLabelledForest,
    Edge,
    Partition,
    Special,
    Vertex,
    check_colored,
    min_below,
    swap_position,
)
from .forest import DegreeSequence


class PsiCase(enum.Enum):
    DISJOINT = "i"
    BELOW_IMPROPER = "ii"
    BELOW_PROPER = "iii"
    ABOVE_SMALLER_BELOW = "iv"
    ABOVE_EDGE_COLOR = "v"
    ABOVE_SPECIAL_COLOR = "vi"


def _locate(trees: Sequence[Vertex], labels: Tuple[int, ...]) -> Dict[int, Tuple[int, Tuple[int, ...]]]:
    # 0-based tree index and child path for each wanted label
    found: Dict[int, Tuple[int, Tuple[int, ...]]] = {}
    stack = [(t, (), tree) for t, tree in enumerate(trees)]
    while stack and len(found) < len(labels):
        t, path, v = stack.pop()
        if not v.children:
            continue
        if v.label in labels:
            found[v.label] = (t, path)
        stack.extend((t, path + (j,), c) for j, c in enumerate(v.children))
    return found


def _get(v: Vertex, path: Sequence[int]) -> Vertex:
    for j in path:
        v = v.children[j]
    return v


def _put(v: Vertex, path: Sequence[int], new: Vertex) -> Vertex:
    if not path:
        return new
    j = path[0]
    kids = v.children
    return v._replace(children=kids[:j] + (_put(kids[j], path[1:], new),) + kids[j + 1:])


def _swap(v: Vertex, i: int) -> Vertex:
    if not v.children:
        return v
    label = i + 1 if v.label == i else i if v.label == i + 1 else v.label
    return Vertex(tuple(_swap(c, i) for c in v.children), label, v.color)


def _surgery(tree: Vertex, p2: Tuple[int, ...], beta: int, s: Tuple[int, ...], alpha: int) -> Vertex:
    """Five-way split and regluing inside one tree.

    ``p2`` is the path to v2, ``beta`` (0-based) its child u on the way to
    v1, ``s`` the path from u down to v1 and ``alpha`` (0-based) the child w
    of v1 named by its color.  Afterwards v1 stands where v2 stood, the
    subtree of u hangs at v1's slot ``alpha`` with v2 in place of v1, and w
    hangs at v2's slot ``beta``.
    """
    v2 = _get(tree, p2)
    u = v2.children[beta]
    v1 = _get(u, s)
    w = v1.children[alpha]
    new_v2 = Vertex(v2.children[:beta] + (w,) + v2.children[beta + 1:], v2.label, Edge(beta + 1))
    new_u = _put(u, s, new_v2)
    new_v1 = Vertex(v1.children[:alpha] + (new_u,) + v1.children[alpha + 1:], v1.label, v2.color)
    return _put(tree, p2, new_v1)


def psi(forest: ColoredLabelledForest, s1: Partition, s2: Partition,
        check: bool = True) -> Tuple[ColoredLabelledForest, PsiCase]:
    """Map ``forest`` from the set restricted by ``s1`` to the one restricted
    by ``s2``; also report which case applied."""
    i = swap_position(s1, s2)
    if i is None:
        raise ValueError(f"partitions {s1} and {s2} are not adjacent")
    if check:
        check_colored(forest, s1)
    trees = forest.trees
    where = _locate(trees, (i, i + 1))
    (t1, p1), (t2, p2) = where[i], where[i + 1]
    v1 = _get(trees[t1], p1)
    v2 = _get(trees[t2], p2)

    if t1 == t2 and p2[:len(p1)] == p1 and len(p2) > len(p1):
        # v2 below v1
        below = min_below(v1)
        case = PsiCase.BELOW_IMPROPER if below < i else PsiCase.BELOW_PROPER
    elif t1 == t2 and p1[:len(p2)] == p2 and len(p1) > len(p2):
        # v1 below v2
        if min_below(v2) < i:
            case = PsiCase.ABOVE_SMALLER_BELOW
        elif v2.color.kind != "s":
            case = PsiCase.ABOVE_EDGE_COLOR
        else:
            case = PsiCase.ABOVE_SPECIAL_COLOR
    else:
        case = PsiCase.DISJOINT

    if case is PsiCase.ABOVE_SPECIAL_COLOR:
        rest = p1[len(p2):]
        tree = _surgery(trees[t2], p2, rest[0], rest[1:], v1.color.index - 1)
        trees = trees[:t2] + (tree,) + trees[t2 + 1:]
    out = ColoredLabelledForest(tuple(_swap(t, i) for t in trees), forest.k)
    return out, case


def psi_transport(forest: ColoredLabelledForest, path: Sequence[Partition]) -> ColoredLabelledForest:
    """Compose ``psi`` along consecutive partitions of ``path``."""
    if not path:
        raise ValueError("empty partition path")
    check_colored(forest, path[0])
    for a, b in zip(path, path[1:]):
        if swap_position(a, b) is None:
            raise ValueError(f"broken path: {a} and {b} are not adjacent")
        forest, _ = psi(forest, a, b, check=False)
    return forest


# -- code sequences ---------------------------------------------------------

class CodeError(ValueError):
    pass


@dataclass(frozen=True)
class CodeSequence:
    """``g[i]`` for every label ``i`` and ``f[j]`` for ``1 <= j <= n-1``."""

    k: int
    g: Dict[int, int] = field(hash=False)
    f: Dict[int, int] = field(hash=False)

    def key(self) -> Tuple:
        return (self.k, tuple(sorted(self.g.items())), tuple(sorted(self.f.items())))

    def __hash__(self) -> int:
        return hash(self.key())

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "g": {str(i): self.g[i] for i in sorted(self.g)},
            "f": {str(j): self.f[j] for j in sorted(self.f)},
        }

    @classmethod
    def from_json(cls, obj) -> "CodeSequence":
        try:
            return cls(
                int(obj["k"]),
                {int(i): int(v) for i, v in obj["g"].items()},
                {int(j): int(v) for j, v in obj.get("f", {}).items()},
            )
        except (KeyError, TypeError, AttributeError, ValueError) as exc:
            raise CodeError(f"malformed code sequence: {exc}") from None


def type_from_partition(s: Partition, ell: int) -> DegreeSequence:
    """Type with the class sizes of ``s`` and ``ell`` trees."""
    sizes = s.class_sizes()
    top = max(sizes, default=0)
    r0 = ell + sum((d - 1) * c for d, c in sizes.items())
    return DegreeSequence([r0] + [sizes.get(d, 0) for d in range(1, top + 1)])


def _leaf_count(s: Partition, ell: int) -> int:
    return ell + sum(d - 1 for d in s.word)


def _color_offset(color: Color, d: int) -> int:
    return color.index if color.kind == "e" else d + color.index


def _offset_color(offset: int, d: int) -> Color:
    return Edge(offset) if offset <= d else Special(offset - d)


def _windows(remaining: Sequence[int], degree: Dict[int, int], ell: int, k: int) -> Iterator[Tuple[int, int, int]]:
    """``(label, first, last)`` value windows of the current f entry."""
    m = remaining[0]
    last = ell + degree[m] - 1
    yield m, 1, last
    for i in remaining[1:]:
        yield i, last + 1, last + degree[i] + k
        last += degree[i] + k


def window_widths(remaining: Sequence[int], degree: Dict[int, int], ell: int, k: int) -> int:
    return sum(hi - lo + 1 for _, lo, hi in _windows(remaining, degree, ell, k))


def decode(s: Partition, k: int, ell: int, codes: CodeSequence) -> ColoredLabelledForest:
    """Build the forest named by ``codes``; its label 1 lies in the first tree."""
    n = s.n
    if n < 1:
        raise CodeError("codes need at least one internal vertex")
    if ell < 1:
        raise CodeError("need at least one tree")
    degree = {i: s.degree_of(i) for i in range(1, n + 1)}
    r0 = _leaf_count(s, ell)
    if set(codes.g) != set(degree):
        raise CodeError(f"g must be indexed by labels 1..{n}, got {sorted(codes.g)}")
    if set(codes.f) != set(range(1, n)):
        raise CodeError(f"f must be indexed by 1..{n - 1}, got {sorted(codes.f)}")
    for i, gi in codes.g.items():
        if not 1 <= gi <= degree[i]:
            raise CodeError(f"g[{i}] = {gi} outside [1, {degree[i]}]")
    for j, fj in codes.f.items():
        if not 1 <= fj <= r0 + j * (1 + k):
            raise CodeError(f"f[{j}] = {fj} outside [1, {r0 + j * (1 + k)}]")

    def build(remaining: Tuple[int, ...], trees_now: int) -> Tuple[Vertex, ...]:
        m = remaining[0]
        if len(remaining) == 1:
            root = Vertex((Vertex(),) * degree[m], m, Edge(codes.g[m]))
            return (root,) + (Vertex(),) * (trees_now - 1)
        value = codes.f[len(remaining) - 1]
        for root_label, lo, hi in _windows(remaining, degree, trees_now, k):
            if lo <= value <= hi:
                break
        d = degree[root_label]
        rest = tuple(x for x in remaining if x != root_label)
        sub = build(rest, trees_now + d - 1)
        if root_label == m:
            # undo: the tree holding the next label was rotated to the front
            shift = value - 1
            sub = sub[len(sub) - shift:] + sub[:len(sub) - shift] if shift else sub
            root = Vertex(sub[:d], m, Edge(codes.g[m]))
        else:
            # undo: the first d trees were rotated to put child g_i first
            shift = codes.g[root_label] - 1
            kids = sub[:d]
            kids = kids[d - shift:] + kids[:d - shift] if shift else kids
            root = Vertex(kids, root_label, _offset_color(value - lo + 1, d))
        return (root,) + sub[d:]

    return ColoredLabelledForest(build(tuple(range(1, n + 1)), ell), k)


def encode(forest: ColoredLabelledForest, s: Partition, check: bool = True) -> CodeSequence:
    """Inverse of :func:`decode`."""
    if check:
        check_colored(forest, s)
    if s.n < 1:
        raise CodeError("forest has no internal vertex")
    degree = {i: s.degree_of(i) for i in range(1, s.n + 1)}
    k = forest.k
    g: Dict[int, int] = {}
    f: Dict[int, int] = {}
    trees = forest.trees
    remaining = tuple(range(1, s.n + 1))
    if 1 not in _subtree_set(trees[0]):
        raise CodeError("label 1 is not in the first tree")
    while True:
        m = remaining[0]
        root = trees[0]
        if len(remaining) == 1:
            g[m] = root.color.index
            break
        d = len(root.children)
        if root.label == m:
            g[m] = root.color.index
            trees = root.children + trees[1:]
            rest = remaining[1:]
            nxt = rest[0]
            pos = next(p for p, t in enumerate(trees) if nxt in _subtree_set(t))
            value = pos + 1
            trees = trees[pos:] + trees[:pos]
        else:
            i = root.label
            lo = next(lo for lab, lo, _ in _windows(remaining, degree, len(trees), k) if lab == i)
            value = lo + _color_offset(root.color, d) - 1
            pos = next(p for p, c in enumerate(root.children) if m in _subtree_set(c))
            g[i] = pos + 1
            kids = root.children
            trees = kids[pos:] + kids[:pos] + trees[1:]
            rest = tuple(x for x in remaining if x != i)
        f[len(remaining) - 1] = value
        remaining = rest
    return CodeSequence(k, g, f)


def _subtree_set(v: Vertex) -> set:
    out = set()
    stack = [v]
    while stack:
        x = stack.pop()
        if x.children:
            out.add(x.label)
            stack.extend(x.children)
    return out


def code_box(s: Partition, k: int, ell: int) -> Iterator[CodeSequence]:
    """Every code sequence in bounds, lexicographically by (g, f)."""
    n = s.n
    r0 = _leaf_count(s, ell)
    g_ranges = [range(1, s.degree_of(i) + 1) for i in range(1, n + 1)]
    f_ranges = [range(1, r0 + j * (1 + k) + 1) for j in range(1, n)]
    for gs in itertools.product(*g_ranges):
        g = dict(zip(range(1, n + 1), gs))
        for fs in itertools.product(*f_ranges):
            yield CodeSequence(k, g, dict(zip(range(1, n), fs)))


def code_box_size(s: Partition, k: int, ell: int) -> int:
    r0 = _leaf_count(s, ell)
    return math.prod(s.word) * math.prod(r0 + j * (1 + k) for j in range(1, s.n))
