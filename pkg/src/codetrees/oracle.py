"""Brute-force ground truth for small instances.

Enumerates every candidate tree for a multiset of weights: one prefix code
per distinct tree shape (children canonically ordered, since cost depends
only on word lengths), crossed with every distinct assignment of the
weights to leaves.  Slow by design and capped at 8 leaves; exists solely to
certify the greedy builder and to pin expected values in the tests.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Any, Iterator, Sequence, TypeVar

from .core import CodeTree, PrefixCode, Word
from .greedy import WeightedItem, build_optimal_tree
from .weighting import CheckReport, Weighting

W = TypeVar("W")

MAX_LEAVES = 8

# A shape is (leaf_count, children); a leaf is (1, ()).  Nested tuples
# compare lexicographically, which doubles as the canonical child order.
_Shape = tuple[int, tuple]
_LEAF: _Shape = (1, ())


@lru_cache(maxsize=None)
def _shapes(n: int, arity: int, min_children: int, max_len: int) -> tuple[_Shape, ...]:
    if max_len < 0:
        return ()
    if n == 1:
        # a bare leaf, or (if unary nodes are allowed) chains above a subtree
        found = [_LEAF]
        if min_children == 1:
            found.extend(
                (1, (child,)) for child in _shapes(1, arity, min_children, max_len - 1)
            )
        return tuple(found)
    found = []
    for m in range(max(2, min_children), min(arity, n) + 1):
        for children in _child_multisets(n, m, arity, min_children, max_len - 1, _LEAF):
            found.append((n, children))
    if min_children == 1:
        found.extend((n, (child,)) for child in _shapes(n, arity, 1, max_len - 1))
    return tuple(sorted(found))


def _child_multisets(
    leaves: int, m: int, arity: int, min_children: int, max_len: int, lower: _Shape
) -> Iterator[tuple]:
    """Nondecreasing m-tuples of shapes totalling ``leaves``, each >= ``lower``."""
    if m == 0:
        if leaves == 0:
            yield ()
        return
    for first_leaves in range(1, leaves - (m - 1) + 1):
        for shape in _shapes(first_leaves, arity, min_children, max_len):
            if shape < lower:
                continue
            for rest in _child_multisets(
                leaves - first_leaves, m - 1, arity, min_children, max_len, shape
            ):
                yield (shape,) + rest


def _shape_words(shape: _Shape) -> tuple[Word, ...]:
    n, children = shape
    if not children:
        return ((),)
    return tuple(
        (digit,) + word for digit, child in enumerate(children) for word in _shape_words(child)
    )


def enumerate_codes(
    n: int, arity: int, allow_unary: bool = False, max_word_len: int | None = None
) -> Iterator[PrefixCode]:
    """One prefix code per distinct n-leaf tree shape.

    Internal nodes have 2..arity children, each child subtree taking digits
    ``0..m-1`` in canonical order, so relabelings are never enumerated twice.
    With ``allow_unary`` set, one-child nodes are included too (the family is
    then infinite, so word length is capped at ``max_word_len``, default n);
    this mode exists only to confirm that unary chains never win.
    """
    if not 1 <= n <= MAX_LEAVES:
        raise ValueError(f"leaf count {n} outside supported range 1..{MAX_LEAVES}")
    if arity < 2:
        raise ValueError(f"arity must be >= 2, got {arity}")
    if max_word_len is None:
        max_word_len = n
    min_children = 1 if allow_unary else 2
    for shape in _shapes(n, arity, min_children, max_word_len):
        yield PrefixCode(arity, frozenset(_shape_words(shape)))


def distinct_permutations(values: Sequence[W]) -> Iterator[tuple[W, ...]]:
    """All orderings of a multiset, each exactly once, in sorted order."""
    pool = sorted(values)

    def rec(remaining: list[W]) -> Iterator[tuple[W, ...]]:
        if not remaining:
            yield ()
            return
        seen_first = None
        for i, v in enumerate(remaining):
            if seen_first is not None and v == seen_first:
                continue
            seen_first = v
            for rest in rec(remaining[:i] + remaining[i + 1 :]):
                yield (v,) + rest

    return rec(pool)


def brute_force_optimal(
    weights: Sequence[W], arity: int, wt: Weighting[W]
) -> tuple[Any, CodeTree[W]]:
    """Minimum cost over all shapes and leaf assignments, with a witness tree."""
    n = len(weights)
    if not 1 <= n <= MAX_LEAVES:
        raise ValueError(f"multiset size {n} outside supported range 1..{MAX_LEAVES}")
    best_cost = None
    best_tree = None
    for code in enumerate_codes(n, arity):
        words = code.sorted_words()
        for assignment in distinct_permutations(weights):
            tree = CodeTree(arity, dict(zip(words, assignment)))
            cost = wt.cost(tree)
            if best_cost is None or (
                wt.leq_costs(cost, best_cost) and not wt.leq_costs(best_cost, cost)
            ):
                best_cost = cost
                best_tree = tree
    assert best_tree is not None
    return best_cost, best_tree


def verify_algorithm(
    wt: Weighting[W],
    arity: int,
    max_n: int = 6,
    weight_pool: Sequence[W] = (0, 1, 2, 3, 4),
    name: str = "greedy equals brute force",
) -> CheckReport:
    """Exhaustively compare greedy cost against the brute-force minimum for
    every multiset of size 1..max_n over ``weight_pool`` (up to symmetry)."""
    if max_n > MAX_LEAVES:
        raise ValueError(f"max_n {max_n} exceeds oracle cap {MAX_LEAVES}")
    report = CheckReport(f"{name} (d={arity}, n<={max_n})", 0)
    pool = sorted(weight_pool)
    for n in range(1, max_n + 1):
        for multiset in combinations_with_replacement(pool, n):
            report.cases += 1
            items = [WeightedItem(w, i) for i, w in enumerate(multiset)]
            greedy_cost = build_optimal_tree(items, arity, wt).cost
            oracle_cost, _ = brute_force_optimal(multiset, arity, wt)
            if not wt.costs_equiv(greedy_cost, oracle_cost):
                report.failures.append(
                    f"multiset {multiset!r}: greedy cost {greedy_cost!r}, "
                    f"optimum {oracle_cost!r}"
                )
    return report
