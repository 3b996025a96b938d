"""Embedding scheduler trees of arbitrary shape into bounded d-ary trees.

Weights are subtree heights; merging k subtrees under one node costs one
level over the tallest, so a tree of children heights weighs
``max(len(word) + height)``.  The greedy builder minimizes exactly that,
giving the minimal height of a d-ary tree each node's children fit into.
Applying it bottom-up over a source tree yields the minimal d-ary
embedding height of the whole tree, plus a placement codeword for every
node relative to its parent's region.

Only shape matters here: no queue semantics, ranks, or packet scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping

from .core import CodeTree, EPSILON, Word, render_word
from .greedy import WeightedItem, build_optimal_tree
from .weighting import Weighting


def embedded_height(tree: CodeTree[int]) -> int:
    """Height of the d-ary tree after splicing each leaf's subtree below its
    codeword: ``max(len(word) + payload)``, 0 for the empty tree."""
    return max((len(word) + value for word, value in tree.payload.items()), default=0)


class MaxDepthWeighting(Weighting[int]):
    """Weights are heights; both the fold and the cost are the embedded height."""

    def weigh(self, tree: CodeTree[int]) -> int:
        return embedded_height(tree)

    def cost(self, tree: CodeTree[int]) -> int:
        return embedded_height(tree)


def min_embed_height(heights: list[int], arity: int) -> tuple[int, CodeTree[int]]:
    """Minimal height of a d-ary tree with the given subtree heights at its
    leaves, plus a witness tree attaining it."""
    items = [WeightedItem(h, i) for i, h in enumerate(heights)]
    result = build_optimal_tree(items, arity, MaxDepthWeighting())
    return result.cost, result.tree


@dataclass
class PifoNode:
    """A node of the source scheduler tree: an id and ordered children."""

    id: str
    children: list["PifoNode"] = field(default_factory=list)

    def walk(self) -> Iterator["PifoNode"]:
        yield self
        for child in self.children:
            yield from child.walk()


def tree_from_json(obj: Any) -> PifoNode:
    """Parse ``{"id": ..., "children": [...]}`` (children optional on leaves)."""
    if not isinstance(obj, dict):
        raise ValueError(f"expected a JSON object for a tree node, got {type(obj).__name__}")
    node_id = obj.get("id")
    if not isinstance(node_id, str):
        raise ValueError("node is missing a string 'id'")
    children = obj.get("children", [])
    if not isinstance(children, list):
        raise ValueError(f"'children' of {node_id!r} must be a list")
    return PifoNode(node_id, [tree_from_json(child) for child in children])


def tree_to_json(node: PifoNode) -> dict:
    out: dict[str, Any] = {"id": node.id}
    if node.children:
        out["children"] = [tree_to_json(child) for child in node.children]
    return out


@dataclass(frozen=True)
class Embedding:
    """Where every source node lands in the target d-ary tree.

    ``placement`` maps each node id to its codeword relative to its parent's
    region; ``absolute`` to the concatenation of those codewords down from
    the root (the flattened view).  The root carries the empty codeword in
    both.  ``feasible`` is the verdict against the height bound the
    embedding was computed with (always true without one).
    """

    arity: int
    height: int
    feasible: bool
    placement: Mapping[str, Word]
    absolute: Mapping[str, Word]

    def to_json_dict(self) -> dict:
        return {
            "d": self.arity,
            "height": self.height,
            "feasible": self.feasible,
            "placement": {
                node_id: {
                    "local": render_word(self.placement[node_id]),
                    "absolute": render_word(self.absolute[node_id]),
                }
                for node_id in sorted(self.placement)
            },
        }


def embed(source: PifoNode, arity: int, bound: int | None = None) -> Embedding:
    """Minimal-height embedding of ``source`` into a d-ary tree.

    Bottom-up: leaves have height 0; each internal node packs its children's
    heights with :func:`min_embed_height` and records each child's codeword.
    A node with a single child keeps it at the empty codeword (unary chains
    add no d-ary depth).
    """
    ids = [node.id for node in source.walk()]
    if len(set(ids)) != len(ids):
        duplicate = next(i for i in ids if ids.count(i) > 1)
        raise ValueError(f"duplicate node id {duplicate!r}")

    placement: dict[str, Word] = {source.id: EPSILON}
    absolute: dict[str, Word] = {source.id: EPSILON}

    def height_of(node: PifoNode) -> int:
        if not node.children:
            return 0
        heights = [height_of(child) for child in node.children]
        result = build_optimal_tree(
            [WeightedItem(h, i) for i, h in enumerate(heights)], arity, MaxDepthWeighting()
        )
        for index, child in enumerate(node.children):
            placement[child.id] = result.leaf_of_tag[index]
        return result.cost

    height = height_of(source)

    def fill_absolute(node: PifoNode) -> None:
        for child in node.children:
            absolute[child.id] = absolute[node.id] + placement[child.id]
            fill_absolute(child)

    fill_absolute(source)
    feasible = bound is None or height <= bound
    return Embedding(arity, height, feasible, placement, absolute)


def check_bound(source: PifoNode, arity: int, bound: int) -> bool:
    """True iff ``source`` embeds into a d-ary tree of height at most ``bound``."""
    return embed(source, arity, bound).feasible
