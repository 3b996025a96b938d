"""Greedy construction of cost-optimal code trees over any weighting.

The builder repeatedly merges the least-weight items into a depth-one
subtree and re-enters the merged subtree as a single item carrying its
folded weight.  The first merge takes ``combine_size(n, d)`` items; every
later one takes exactly ``d`` (the item count stays congruent to 1 modulo
``d - 1`` from then on), which guarantees the final tree wastes no digits
anywhere except possibly at the first-merged node.

For the sum weighting this is Huffman's algorithm; for the max-depth
weighting it computes minimal embedding heights.  The brute-force oracle
(:mod:`codetrees.oracle`) certifies optimality on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Any, Generic, Hashable, Mapping, Sequence, TypeVar

from .core import CodeTree, Word
from .weighting import Weighting

W = TypeVar("W")


@dataclass(frozen=True)
class WeightedItem(Generic[W]):
    """One input to the builder: a weight plus an opaque caller identity."""

    weight: W
    tag: Hashable


@dataclass(frozen=True)
class GreedyResult(Generic[W]):
    """A built tree, where each input tag landed, its cost, and merge sizes.

    ``leaf_of_tag`` is a bijection from input tags to codewords; the payload
    at ``leaf_of_tag[t]`` is the weight that was tagged ``t``.
    ``combine_sizes`` records how many items each merge took, in order
    (after the first entry every value equals the arity).
    """

    tree: CodeTree[W]
    leaf_of_tag: Mapping[Hashable, Word]
    cost: Any
    combine_sizes: tuple[int, ...]


def combine_size(n: int, arity: int) -> int:
    """How many least-weight items the next merge takes: the unique
    k in {2, ..., arity} with ``n == k (mod arity - 1)``."""
    if n < 2:
        raise ValueError(f"need at least 2 items, got {n}")
    if arity < 2:
        raise ValueError(f"arity must be >= 2, got {arity}")
    return (n - 2) % (arity - 1) + 2


def combine_step(weights: Sequence[W], k: int, arity: int) -> CodeTree[W]:
    """Depth-one tree over single-digit codewords ``0..k-1`` carrying the
    first ``k`` weights (callers pass weights sorted nondecreasing)."""
    if k > len(weights):
        raise ValueError(f"cannot combine {k} items out of {len(weights)}")
    return CodeTree(arity, {(i,): weights[i] for i in range(k)})


class _Node(Generic[W]):
    """A pending subtree during the build: folded weight, leaf payloads, tag map."""

    __slots__ = ("weight", "payload", "leaves")

    def __init__(self, weight: W, payload: dict[Word, W], leaves: dict[Hashable, Word]):
        self.weight = weight
        self.payload = payload
        self.leaves = leaves


def build_optimal_tree(
    items: Sequence[WeightedItem[W]], arity: int, wt: Weighting[W]
) -> GreedyResult[W]:
    """Build a tree carrying exactly the input weights at minimum cost.

    Ties between equal weights are broken by position: raw items keep input
    order and merged subtrees queue up after them in creation order, so the
    output is a deterministic function of the input sequence.  A single item
    is returned as the singleton tree on the empty codeword (the natural
    extension; embedders hit unary nodes routinely).
    """
    if not items:
        raise ValueError("cannot build a tree from an empty multiset")
    if arity < 2:
        raise ValueError(f"arity must be >= 2, got {arity}")
    tags = [item.tag for item in items]
    if len(set(tags)) != len(tags):
        raise ValueError("item tags must be unique")

    nodes = [_Node(item.weight, {(): item.weight}, {item.tag: ()}) for item in items]
    sizes: list[int] = []

    def cmp(i: int, j: int) -> int:
        a, b = nodes[i].weight, nodes[j].weight
        ab, ba = wt.leq_weights(a, b), wt.leq_weights(b, a)
        return (not ab) - (not ba)

    while len(nodes) > 1:
        k = combine_size(len(nodes), arity)
        order = sorted(range(len(nodes)), key=cmp_to_key(cmp))
        chosen = [nodes[i] for i in order[:k]]
        merged_weight = wt.weigh(combine_step([c.weight for c in chosen], k, arity))
        payload: dict[Word, W] = {}
        leaves: dict[Hashable, Word] = {}
        for digit, child in enumerate(chosen):
            for word, value in child.payload.items():
                payload[(digit,) + word] = value
            for tag, word in child.leaves.items():
                leaves[tag] = (digit,) + word
        taken = set(order[:k])
        nodes = [node for i, node in enumerate(nodes) if i not in taken]
        nodes.append(_Node(merged_weight, payload, leaves))
        sizes.append(k)

    root = nodes[0]
    tree: CodeTree[W] = CodeTree(arity, root.payload)
    return GreedyResult(tree, dict(root.leaves), wt.cost(tree), tuple(sizes))
