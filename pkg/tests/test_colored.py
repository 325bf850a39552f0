import itertools
import math

import pytest
from hypothesis import given, strategies as st

from hookforest.colored import (
    LEAF,
    ColoredLabelledForest,
    Edge,
    Partition,
    Special,
    Vertex,
    adjacent,
    check_colored,
    count_colored,
    count_colorings,
    enumerate_colored,
    is_member,
    is_proper,
    label_forest,
    labels_of,
    labellings_with_proper_set,
    lemma_ccf_lhs,
    partition_path,
    partitions,
    prop_cf_count,
    shape_of,
    thm_cfs_count,
    walk,
)
from hookforest.forest import DegreeSequence, VertexRef, degree_sequences, enumerate_forests, flatten

from oracles import colored_forests_bruteforce, factorial_multinomial


def R(*counts):
    return DegreeSequence(counts)


def chain(top, bottom):
    """Root of degree 1 over a degree-1 child over a leaf."""
    return (Vertex((Vertex((LEAF,), bottom),), top),)


class TestProper:
    def test_increasing_chain(self):
        f = chain(1, 2)
        assert is_proper(f, VertexRef(1))
        assert is_proper(f, VertexRef(1, (1,)))

    def test_decreasing_chain(self):
        f = chain(2, 1)
        assert not is_proper(f, VertexRef(1))
        assert is_proper(f, VertexRef(1, (1,)))

    def test_label_one_is_always_proper(self):
        for shape in enumerate_forests(R(3, 1, 1)):
            n = flatten(shape).n
            for labels in itertools.permutations(range(1, n + 1)):
                f = label_forest(shape, labels)
                for ref, v in walk(f):
                    if v.label == 1:
                        assert is_proper(f, ref)

    def test_leaf_rejected(self):
        with pytest.raises(ValueError):
            is_proper(chain(1, 2), VertexRef(1, (1, 1)))


class TestCountColorings:
    def test_all_proper(self):
        assert count_colorings(chain(1, 2), 5) == 1

    def test_improper_root(self):
        assert count_colorings(chain(2, 1), 1) == 2

    def test_single_vertex(self):
        f = (Vertex((LEAF, LEAF), 1),)
        assert [count_colorings(f, k) for k in range(4)] == [2, 2, 2, 2]


class TestEnumerateColored:
    def test_cherry(self):
        assert len(enumerate_colored(R(2, 0, 1), 0)) == 2

    def test_chain_with_partition(self):
        s = Partition.from_classes({1: [1, 2]})
        got = enumerate_colored(R(1, 2), 1, s)
        assert len(got) == 3
        assert len(enumerate_colored(R(1, 2), 1, first_tree_min=True)) == 3

    @pytest.mark.parametrize("counts, k", [((1, 2), 1), ((2, 0, 1), 3), ((3, 1, 1), 0), ((3, 1, 1), 2), ((3, 2), 1), ((4, 0, 3), 1)])
    def test_against_bruteforce(self, counts, k):
        r = DegreeSequence(counts)
        got = enumerate_colored(r, k)
        oracle = colored_forests_bruteforce(counts, k)
        assert len(got) == len(oracle) == len(set(got))
        as_triples = set()
        for f in got:
            nodes = [v for _, v in walk(f.trees)]
            as_triples.add((shape_of(f), labels_of(f), tuple(tuple(v.color) for v in nodes)))
        assert as_triples == set(oracle)

    def test_every_element_is_valid(self):
        for r in degree_sequences(6, 3):
            for s in partitions(r):
                for f in enumerate_colored(r, 2, s):
                    check_colored(f, s, r)

    def test_canonical_order(self):
        got = enumerate_colored(R(3, 1, 1), 1)
        keys = []
        shapes = list(enumerate_forests(R(3, 1, 1)))
        for f in got:
            colors = tuple((c.kind != "e", c.index) for c in (v.color for _, v in walk(f.trees)))
            keys.append((shapes.index(shape_of(f)), labels_of(f), colors))
        assert keys == sorted(keys)

    def test_inconsistent_partition(self):
        with pytest.raises(ValueError):
            enumerate_colored(R(3, 1, 1), 0, Partition.from_classes({1: [1, 2]}))

    def test_first_tree_min_without_labels(self):
        assert enumerate_colored(R(3), 1) == [ColoredLabelledForest((LEAF,) * 3, 1)]
        assert enumerate_colored(R(3), 1, first_tree_min=True) == []


class TestCountingFormulas:
    def test_weighted_sum_examples(self):
        assert lemma_ccf_lhs(R(1, 2), 1) == 3
        assert lemma_ccf_lhs(R(2, 0, 1), 3) == 2

    def test_weighted_sum_at_k0_is_plain_degree_product(self):
        for r in degree_sequences(7, 4):
            expected = sum(math.factorial(r.n) * math.prod(flatten(f).degrees) for f in enumerate_forests(r))
            assert lemma_ccf_lhs(r, 0) == expected == prop_cf_count(r, 0)

    def test_prop_examples(self):
        assert prop_cf_count(R(1, 2), 1) == 3
        assert prop_cf_count(R(3, 1, 1), 0) == 32
        assert prop_cf_count(R(2, 0, 1), 5) == 2
        assert prop_cf_count(R(3, 0, 0, 1), 2) == 3

    def test_thm_examples(self):
        assert [thm_cfs_count(R(2, 0, 1), k) for k in range(4)] == [2, 2, 2, 2]
        assert thm_cfs_count(R(3, 1, 1), 0) == 16
        assert thm_cfs_count(R(1, 2), 1) == 3

    def test_without_internal_vertices(self):
        # one bare-leaf forest; the i = 1..n-1 product at n = 0 reads as 1/r0
        for r0 in (1, 2, 4):
            r = R(r0)
            assert count_colored(r, 1) == prop_cf_count(r, 1) == thm_cfs_count(r, 1) == 1

    @pytest.mark.parametrize("counts", [(3, 1, 1), (3, 2), (2, 1, 1), (4, 0, 3)])
    def test_against_bruteforce(self, counts):
        r = DegreeSequence(counts)
        for k in range(3):
            n = len(colored_forests_bruteforce(counts, k))
            assert lemma_ccf_lhs(r, k) == prop_cf_count(r, k) == n


class TestPartitions:
    def test_size(self):
        r = R(3, 1, 1)
        assert len(partitions(r)) == 2
        for counts in [(4, 2, 1), (5, 1, 1, 1), (3, 3, 1)]:
            r = DegreeSequence(counts)
            assert len(partitions(r)) == factorial_multinomial(r.n, r.counts[1:])

    def test_adjacent_swap(self):
        s1 = Partition.from_classes({1: [1], 2: [2]})
        s2 = Partition.from_classes({1: [2], 2: [1]})
        assert adjacent(s1, s2) and adjacent(s2, s1)
        assert not adjacent(s1, s1)

    def test_far_swap_not_adjacent(self):
        s1 = Partition.from_classes({1: [1, 2], 2: [3]})
        s2 = Partition.from_classes({1: [2, 3], 2: [1]})
        assert not adjacent(s1, s2)

    def test_different_types(self):
        with pytest.raises(ValueError):
            adjacent(Partition((1, 2)), Partition((1, 1)))
        with pytest.raises(ValueError):
            partition_path(Partition((1, 2)), Partition((1, 3)))

    def test_identity_path(self):
        s = Partition((2, 1, 1))
        assert partition_path(s, s) == [s]

    def test_paths_connect_everything(self):
        r = R(4, 2, 1)
        parts = partitions(r)
        for a in parts:
            for b in parts:
                path = partition_path(a, b)
                assert path[0] == a and path[-1] == b
                assert all(adjacent(x, y) for x, y in zip(path, path[1:]))

    def test_json(self):
        s = Partition.from_classes({1: [2], 2: [1, 3]})
        assert s.to_json() == {"1": [2], "2": [1, 3]}
        assert Partition.from_json(s.to_json()) == s

    def test_malformed(self):
        with pytest.raises(ValueError):
            Partition.from_classes({1: [1], 2: [1]})
        with pytest.raises(ValueError):
            Partition.from_classes({1: [1, 3]})


def test_labellings_times_hooks_small():
    for counts in [(3, 1, 1), (4, 0, 3), (2, 2, 1)]:
        for shape in enumerate_forests(DegreeSequence(counts)):
            flat = flatten(shape)
            for size in range(flat.n + 1):
                for J in itertools.combinations(range(flat.n), size):
                    got = labellings_with_proper_set(shape, J)
                    assert got * math.prod(flat.hooks[v] for v in J) == math.factorial(flat.n)


class TestMembership:
    def test_special_on_proper_vertex(self):
        f = ColoredLabelledForest(chain(1, 2), 1)
        bad = ColoredLabelledForest((Vertex((Vertex((LEAF,), 2, Edge(1)),), 1, Special(1)),), 1)
        assert not is_member(bad)
        assert not is_member(f)  # uncolored

    def test_special_beyond_k(self):
        f = ColoredLabelledForest((Vertex((Vertex((LEAF,), 1, Edge(1)),), 2, Special(2)),), 1)
        assert not is_member(f)
        assert is_member(f._replace(k=2))

    def test_class_violation(self):
        f = ColoredLabelledForest(((Vertex((LEAF,), 1, Edge(1))), Vertex((LEAF, LEAF), 2, Edge(2))), 0)
        assert is_member(f, Partition.from_classes({1: [1], 2: [2]}))
        assert not is_member(f, Partition.from_classes({1: [2], 2: [1]}))

    def test_json_roundtrip(self):
        for f in enumerate_colored(R(3, 1, 1), 1):
            assert ColoredLabelledForest.from_json(f.to_json(), 1) == f

    def test_json_shape(self):
        f = ColoredLabelledForest(((Vertex((LEAF,), 1, Edge(1))),), 0)
        assert f.to_json() == [{"c": [{"c": []}], "label": 1, "color": {"e": 1}}]

    def test_bad_json(self):
        with pytest.raises(ValueError):
            ColoredLabelledForest.from_json([{"c": [{"c": []}], "color": {"e": 1}}], 0)
        with pytest.raises(ValueError):
            ColoredLabelledForest.from_json([{"c": [], "label": 1}], 0)


@given(st.integers(1, 4), st.integers(0, 3), st.integers(0, 2))
def test_thm_times_classes_is_prop(r1, r2, k):
    r = DegreeSequence((1 + r2, r1, r2))
    assert prop_cf_count(r, k) == thm_cfs_count(r, k) * len(partitions(r))
