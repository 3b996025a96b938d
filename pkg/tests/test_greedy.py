from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from codetrees import (
    CodeTree,
    MaxDepthWeighting,
    SumWeighting,
    WeightedItem,
    build_optimal_tree,
    combine_size,
    combine_step,
    unit,
)

HUFFMAN = SumWeighting()
PIFO = MaxDepthWeighting()


def items(weights):
    return [WeightedItem(w, i) for i, w in enumerate(weights)]


class TestCombineSize:
    def test_binary_always_two(self):
        assert combine_size(5, 2) == 2

    def test_quaternary(self):
        assert combine_size(7, 4) == 4

    def test_ternary(self):
        assert combine_size(6, 3) == 2

    def test_rejects_small_inputs(self):
        with pytest.raises(ValueError):
            combine_size(1, 2)
        with pytest.raises(ValueError):
            combine_size(2, 1)

    @given(st.integers(2, 500), st.integers(2, 9))
    def test_defining_property(self, n, d):
        k = combine_size(n, d)
        assert 2 <= k <= d
        assert (n - k) % (d - 1) == 0


class TestCombineStep:
    def test_two_least(self):
        assert combine_step([1, 1, 2, 3], 2, 2) == CodeTree(2, {(0,): 1, (1,): 1})

    def test_three_of_three(self):
        assert combine_step([4, 5, 6], 3, 3) == CodeTree(3, {(0,): 4, (1,): 5, (2,): 6})

    def test_k_too_large(self):
        with pytest.raises(ValueError):
            combine_step([1, 2], 3, 3)


class TestBuildOptimalTree:
    def test_two_items_one_shape(self):
        result = build_optimal_tree(items([7, 3]), 2, HUFFMAN)
        assert result.tree == CodeTree(2, {(0,): 3, (1,): 7})
        assert result.leaf_of_tag == {0: (1,), 1: (0,)}

    def test_singleton_returns_unit(self):
        result = build_optimal_tree(items([4]), 2, PIFO)
        assert result.tree == unit(4, 2)
        assert result.cost == 4
        assert result.combine_sizes == ()

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            build_optimal_tree([], 2, HUFFMAN)

    def test_duplicate_tags_rejected(self):
        with pytest.raises(ValueError):
            build_optimal_tree([WeightedItem(1, "x"), WeightedItem(2, "x")], 2, HUFFMAN)

    def test_huffman_example(self):
        # brute force gives 13 for {1,1,2,3}: depths 3,3,2,1
        result = build_optimal_tree(items([1, 1, 2, 3]), 2, HUFFMAN)
        assert result.cost == 13
        depths = sorted(len(w) for w in result.tree.payload)
        assert depths == [1, 2, 3, 3]

    def test_pifo_example(self):
        result = build_optimal_tree(items([0, 0, 0, 0, 0]), 2, PIFO)
        assert result.cost == 3

    def test_whole_multiset_single_combine(self):
        result = build_optimal_tree(items([4, 5, 6]), 3, HUFFMAN)
        assert result.combine_sizes == (3,)
        assert result.tree == CodeTree(3, {(0,): 4, (1,): 5, (2,): 6})

    @given(st.lists(st.integers(0, 8), min_size=1, max_size=10), st.integers(2, 4))
    def test_payload_conservation(self, weights, d):
        result = build_optimal_tree(items(weights), d, HUFFMAN)
        assert Counter(result.tree.payload.values()) == Counter(weights)

    @given(st.lists(st.integers(0, 8), min_size=1, max_size=10), st.integers(2, 4))
    def test_leaf_of_tag_bijection(self, weights, d):
        result = build_optimal_tree(items(weights), d, PIFO)
        assert set(result.leaf_of_tag) == set(range(len(weights)))
        assert sorted(result.leaf_of_tag.values()) == sorted(result.tree.payload)
        for tag, word in result.leaf_of_tag.items():
            assert result.tree.payload[word] == weights[tag]

    @given(st.lists(st.integers(0, 8), min_size=2, max_size=12), st.integers(2, 4))
    def test_recursion_takes_arity_items_after_first(self, weights, d):
        result = build_optimal_tree(items(weights), d, HUFFMAN)
        assert result.combine_sizes[0] == combine_size(len(weights), d)
        assert all(k == d for k in result.combine_sizes[1:])

    def test_deterministic(self):
        a = build_optimal_tree(items([2, 1, 2, 1, 3]), 2, HUFFMAN)
        b = build_optimal_tree(items([2, 1, 2, 1, 3]), 2, HUFFMAN)
        assert a.tree == b.tree
        assert a.leaf_of_tag == b.leaf_of_tag
        assert a.combine_sizes == b.combine_sizes

    @given(st.permutations([1, 1, 2, 3]))
    def test_tie_breaks_never_change_cost(self, weights):
        # any tie-break lands in the same equivalence class
        assert build_optimal_tree(items(weights), 2, HUFFMAN).cost == 13

    def test_tags_may_be_arbitrary_hashables(self):
        result = build_optimal_tree(
            [WeightedItem(2, "b"), WeightedItem(1, ("a", 0))], 2, HUFFMAN
        )
        assert result.leaf_of_tag[("a", 0)] == (0,)
        assert result.leaf_of_tag["b"] == (1,)
