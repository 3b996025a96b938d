import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from codetrees import (
    CodeTree,
    MaxDepthWeighting,
    SumWeighting,
    TreeSampler,
    check_algebra_laws,
    check_axiom_exchange,
    check_axiom_monotone_lengthen,
    check_axiom_structure_monotone,
    same_payload_multiset,
    tree_equiv,
    tree_leq,
    unit,
)
from codetrees.weighting import _shuffled_relabel

from strategies import code_trees

HUFFMAN = SumWeighting()
PIFO = MaxDepthWeighting()
INSTANCES = [
    pytest.param(HUFFMAN, TreeSampler(weights=tuple(range(10))), id="huffman"),
    pytest.param(PIFO, TreeSampler(weights=tuple(range(6))), id="pifo"),
]

CHECKERS = [
    check_algebra_laws,
    check_axiom_monotone_lengthen,
    check_axiom_exchange,
    check_axiom_structure_monotone,
]


class TestOrderBasics:
    def test_reflexive(self):
        t = CodeTree(2, {(0,): 1, (1,): 2})
        assert tree_leq(t, t, HUFFMAN)

    def test_huffman_example(self):
        # alpha values: 1+1 = 2 versus 1+2+2 = 5
        flat = CodeTree(2, {(0,): 1, (1,): 1})
        deep = CodeTree(2, {(0,): 1, (1, 0): 1, (1, 1): 1})
        assert tree_leq(flat, deep, HUFFMAN)
        assert not tree_leq(deep, flat, HUFFMAN)

    @given(code_trees(), code_trees())
    def test_total(self, a, b):
        assert tree_leq(a, b, HUFFMAN) or tree_leq(b, a, HUFFMAN)
        assert tree_leq(a, b, PIFO) or tree_leq(b, a, PIFO)

    @given(code_trees(), code_trees())
    def test_equiv_iff_equal_cost(self, a, b):
        for wt in (HUFFMAN, PIFO):
            assert tree_equiv(a, b, wt) == (wt.cost(a) == wt.cost(b))


class TestSamePayloadMultiset:
    def test_equal_multisets(self):
        a = CodeTree(2, {(0,): 1, (1,): 2})
        b = CodeTree(2, {(0,): 2, (1, 0): 1})
        assert same_payload_multiset(a, b)

    def test_different_multisets(self):
        a = CodeTree(2, {(0,): 1, (1,): 2})
        b = CodeTree(2, {(0,): 1, (1,): 1})
        assert not same_payload_multiset(a, b)

    @given(code_trees())
    def test_reflexive(self, tree):
        assert same_payload_multiset(tree, tree)

    @given(code_trees(), st.randoms(use_true_random=False))
    def test_rearrangement_is_similar(self, tree, rng):
        values = list(tree.payload.values())
        rng.shuffle(values)
        other = CodeTree(tree.arity, dict(zip(tree.payload, values)))
        assert same_payload_multiset(tree, other)
        assert same_payload_multiset(other, tree)


class TestSpecialCases:
    def test_lengthening_only(self):
        # same payloads on longer words never compares below (special case iv)
        short = CodeTree(2, {(0,): 3, (1,): 5})
        longer = CodeTree(2, {(0, 0): 3, (1,): 5})
        for wt in (HUFFMAN, PIFO):
            assert tree_leq(short, longer, wt)

    @given(code_trees(), st.integers(0, 2**32))
    def test_relabeling_preserves_cost(self, tree, seed):
        # special case (v): cost depends only on word lengths
        relabel = _shuffled_relabel(random.Random(seed), list(tree.payload), tree.arity)
        relabeled = CodeTree(tree.arity, {relabel[w]: v for w, v in tree.payload.items()})
        for wt in (HUFFMAN, PIFO):
            assert wt.cost(relabeled) == wt.cost(tree)

    @given(code_trees())
    def test_pointwise_raise(self, tree):
        # special case (vi): larger leaf values never compare below
        raised = CodeTree(tree.arity, {w: v + 1 for w, v in tree.payload.items()})
        for wt in (HUFFMAN, PIFO):
            assert tree_leq(tree, raised, wt)


class TestExchangeExamples:
    def test_huffman_exchange(self):
        # larger value on the shorter word costs 1*5 + 2*1 + 2*1 = 9,
        # the other orientation 1*1 + 2*5 + 2*1 = 13
        larger_up = CodeTree(2, {(0,): 5, (1, 0): 1, (1, 1): 1})
        smaller_up = CodeTree(2, {(0,): 1, (1, 0): 5, (1, 1): 1})
        assert HUFFMAN.cost(larger_up) == 9
        assert HUFFMAN.cost(smaller_up) == 13
        assert tree_leq(larger_up, smaller_up, HUFFMAN)

    def test_pifo_exchange(self):
        # max(1+3, 2+1) = 4 versus max(1+1, 2+3) = 5
        larger_up = CodeTree(2, {(0,): 3, (1, 0): 1})
        smaller_up = CodeTree(2, {(0,): 1, (1, 0): 3})
        assert PIFO.cost(larger_up) == 4
        assert PIFO.cost(smaller_up) == 5
        assert tree_leq(larger_up, smaller_up, PIFO)

    def test_swap_of_equals_is_identity(self):
        t = CodeTree(2, {(0,): 2, (1,): 2})
        assert tree_equiv(t, t, HUFFMAN)


@pytest.mark.parametrize("wt,sampler", INSTANCES)
@pytest.mark.parametrize("checker", CHECKERS)
def test_checkers_pass(wt, sampler, checker):
    report = checker(wt, sampler, n_cases=300)
    assert report.passed, report.render()


class BrokenSumWeighting(SumWeighting):
    """Violates the unit law: weigh(unit(a)) = a + 1."""

    def weigh(self, tree):
        return super().weigh(tree) + 1


def test_broken_weighting_caught():
    sampler = TreeSampler(weights=tuple(range(10)))
    report = check_algebra_laws(BrokenSumWeighting(), sampler, n_cases=20)
    assert not report.passed
    assert "unit" in report.render()


def test_reports_are_seed_stable():
    sampler = TreeSampler(weights=tuple(range(10)))
    a = check_axiom_exchange(HUFFMAN, sampler, n_cases=50, seed=7)
    b = check_axiom_exchange(HUFFMAN, sampler, n_cases=50, seed=7)
    assert a.render() == b.render()


def test_unit_monotone_directly():
    for wt in (HUFFMAN, PIFO):
        assert tree_leq(unit(1, 2), unit(3, 2), wt)
