"""Pluggable weight algebras over code trees, and randomized law checkers.

A :class:`Weighting` bundles a structure map ``weigh`` (fold a tree of
weights into one weight), a total preorder on weights, and a cost function
with a total order on cost values.  The greedy builder is generic over
this interface; the shipped instances live in :mod:`codetrees.huffman`
and :mod:`codetrees.pifo`.

The ``check_*`` functions are seeded randomized testers for the laws a
correct weighting must satisfy: the two algebra laws, monotonicity under
lengthening/raising (with its special cases), the exchange property, and
structural monotonicity of unit and flatten.  They return a
:class:`CheckReport` with rendered counterexamples rather than raising, so
the CLI can surface failures verbatim.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Generic, Sequence, TypeVar

from .core import CodeTree, Word, flatten, map_payloads, render_tree, render_word, unit

W = TypeVar("W")

#: Seed used by the CLI and acceptance suite unless overridden.
DEFAULT_SEED = 0xC0DE


class Weighting(ABC, Generic[W]):
    """A weight algebra ``(W, weigh, <=)`` with an associated tree cost.

    ``weigh`` must satisfy the algebra laws: ``weigh(unit(a)) == a`` and
    ``weigh(flatten(T)) == weigh(map_payloads(T, weigh))`` for nested ``T``.
    ``cost`` is the objective minimized by the greedy builder; it need not
    coincide with ``weigh`` (it does not for the Huffman instance).

    Implementations must be stateless; both orders default to ``<=`` on the
    underlying values, which suits numeric weights.
    """

    @abstractmethod
    def weigh(self, tree: CodeTree[W]) -> W:
        """Fold a tree of weights into a single weight (the structure map)."""

    @abstractmethod
    def cost(self, tree: CodeTree[W]) -> Any:
        """The totally ordered objective value of a tree."""

    def leq_weights(self, a: W, b: W) -> bool:
        return a <= b  # type: ignore[operator]

    def leq_costs(self, a: Any, b: Any) -> bool:
        return a <= b

    def weights_equiv(self, a: W, b: W) -> bool:
        return self.leq_weights(a, b) and self.leq_weights(b, a)

    def costs_equiv(self, a: Any, b: Any) -> bool:
        return self.leq_costs(a, b) and self.leq_costs(b, a)


def tree_leq(a: CodeTree[W], b: CodeTree[W], wt: Weighting[W]) -> bool:
    """Compare two trees by cost alone.

    This extends the preorder to all tree pairs; callers needing the
    restriction to equal weight multisets must also check
    :func:`same_payload_multiset`.
    """
    return wt.leq_costs(wt.cost(a), wt.cost(b))


def tree_equiv(a: CodeTree[W], b: CodeTree[W], wt: Weighting[W]) -> bool:
    return tree_leq(a, b, wt) and tree_leq(b, a, wt)


def same_payload_multiset(a: CodeTree[W], b: CodeTree[W]) -> bool:
    """True iff the two trees carry the same multiset of payload values."""
    return Counter(a.payload.values()) == Counter(b.payload.values())


@dataclass
class CheckReport:
    """Outcome of a randomized check: pass/fail plus rendered counterexamples."""

    name: str
    cases: int
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.passed:
            return f"PASS {self.name}: {self.cases} cases"
        return f"FAIL {self.name}: {len(self.failures)} counterexamples in {self.cases} cases"

    def render(self, max_failures: int = 3) -> str:
        lines = [self.summary()]
        for failure in self.failures[:max_failures]:
            lines.append(failure)
        if len(self.failures) > max_failures:
            lines.append(f"... {len(self.failures) - max_failures} more")
        return "\n".join(lines)


@dataclass(frozen=True)
class TreeSampler:
    """Draws random weights, prefix codes, and (nested) code trees.

    Defaults keep instances tiny (at most ``max_words`` leaves, words no
    longer than ``max_word_len``): when a law fails at all, it fails small.
    """

    weights: tuple
    arities: tuple[int, ...] = (2, 3)
    max_words: int = 6
    max_word_len: int = 4

    def weight(self, rng: random.Random):
        return rng.choice(self.weights)

    def raise_weight(self, rng: random.Random, value):
        """A value >= ``value``; used to sample pointwise-larger leaf maps."""
        return value + rng.choice((0, 0, 1, 1, 2))

    def arity(self, rng: random.Random) -> int:
        return rng.choice(self.arities)

    def code_words(self, rng: random.Random, arity: int, n_words: int | None = None) -> list[Word]:
        """A random prefix code, grown by expanding leaves into children.

        With ``n_words`` given, the code has exactly that many words
        (expansions are sized to land on the target).  Unary expansions are
        mixed in occasionally so non-exhaustive one-child shapes get covered.
        """
        if n_words is None:
            n_words = rng.randint(1, self.max_words)
        words: list[Word] = [()]
        while len(words) < n_words:
            growable = [i for i, w in enumerate(words) if len(w) < self.max_word_len]
            if not growable:  # depth budget exhausted; expand a shortest word anyway
                growable = [min(range(len(words)), key=lambda i: len(words[i]))]
            i = rng.choice(growable)
            room = n_words - len(words)
            fanout = rng.randint(2, min(arity, room + 1))
            if fanout == 2 and room >= 1 and rng.random() < 0.15:
                fanout = 1  # unary expansion keeps the word count, lengthens one word
            base = words.pop(i)
            start = rng.randrange(arity)  # rotate digits so low digits are not overrepresented
            words.extend(base + (((start + j) % arity),) for j in range(fanout))
        return words

    def tree(self, rng: random.Random, arity: int | None = None) -> CodeTree:
        if arity is None:
            arity = self.arity(rng)
        return CodeTree(arity, {w: self.weight(rng) for w in self.code_words(rng, arity)})

    def nested(self, rng: random.Random, arity: int | None = None) -> CodeTree:
        """A tree whose payloads are themselves trees of the same arity."""
        if arity is None:
            arity = self.arity(rng)
        outer = self.code_words(rng, arity, rng.randint(1, max(2, self.max_words // 2)))
        return CodeTree(arity, {w: self.tree(rng, arity) for w in outer})


def _shuffled_relabel(rng: random.Random, words: Sequence[Word], arity: int) -> dict[Word, Word]:
    """A length-preserving bijection: permute child digits independently per node."""
    perms: dict[Word, list[int]] = {}

    def digit(prefix: Word, d: int) -> int:
        perm = perms.get(prefix)
        if perm is None:
            perm = list(range(arity))
            rng.shuffle(perm)
            perms[prefix] = perm
        return perm[d]

    mapping = {}
    for word in words:
        mapping[word] = tuple(digit(word[:i], word[i]) for i in range(len(word)))
    return mapping


def check_algebra_laws(
    wt: Weighting[W], sampler: TreeSampler, n_cases: int = 1000, seed: int = DEFAULT_SEED
) -> CheckReport:
    """Randomized test of the two algebra laws for ``weigh``."""
    rng = random.Random(seed)
    report = CheckReport("algebra laws (unit, multiplication)", n_cases)
    for case in range(n_cases):
        a = sampler.weight(rng)
        d = sampler.arity(rng)
        folded = wt.weigh(unit(a, d))
        if not wt.weights_equiv(folded, a):
            report.failures.append(f"case {case}: weigh(unit({a!r})) = {folded!r} != {a!r}")
            continue
        nested = sampler.nested(rng)
        via_flatten = wt.weigh(flatten(nested))
        via_inner = wt.weigh(map_payloads(nested, wt.weigh))
        if not wt.weights_equiv(via_flatten, via_inner):
            report.failures.append(
                f"case {case}: weigh(flatten) = {via_flatten!r}, "
                f"weigh of inner-weighed = {via_inner!r}, on:\n{render_tree(nested)}"
            )
    return report


def check_axiom_monotone_lengthen(
    wt: Weighting[W], sampler: TreeSampler, n_cases: int = 1000, seed: int = DEFAULT_SEED
) -> CheckReport:
    """Longer codewords or larger leaf values never decrease the order.

    Each case draws (C, r), builds a length-nondecreasing bijection by
    extending words with random suffixes then relabeling digits, and raises
    leaf values pointwise; the original tree must compare <= the new one.
    """
    rng = random.Random(seed)
    report = CheckReport("axiom: monotone under lengthening/raising", n_cases)
    for case in range(n_cases):
        tree = sampler.tree(rng)
        extended = {}
        for word in tree.payload:
            suffix = tuple(rng.randrange(tree.arity) for _ in range(rng.randint(0, 2)))
            extended[word] = word + suffix
        relabel = _shuffled_relabel(rng, list(extended.values()), tree.arity)
        larger = CodeTree(
            tree.arity,
            {relabel[extended[w]]: sampler.raise_weight(rng, v) for w, v in tree.payload.items()},
        )
        if not tree_leq(tree, larger, wt):
            report.failures.append(
                f"case {case}: lengthened/raised tree compares below the original\n"
                f"original:\n{render_tree(tree)}\nlarger:\n{render_tree(larger)}"
            )
    return report


def check_axiom_exchange(
    wt: Weighting[W], sampler: TreeSampler, n_cases: int = 1000, seed: int = DEFAULT_SEED
) -> CheckReport:
    """Swapping a smaller weight at a shorter word with a larger one deeper never hurts."""
    rng = random.Random(seed)
    report = CheckReport("axiom: exchange property", n_cases)
    for case in range(n_cases):
        tree = sampler.tree(rng)
        while len(tree) < 2:
            tree = sampler.tree(rng)
        x, y = rng.sample(sorted(tree.payload), 2)
        if len(x) > len(y):
            x, y = y, x
        swapped_payload = dict(tree.payload)
        swapped_payload[x], swapped_payload[y] = tree.payload[y], tree.payload[x]
        other = CodeTree(tree.arity, swapped_payload)
        # orient: `high` carries the smaller value on the shorter word x,
        # `low` is the same tree after the swap; the swap must not cost more
        if wt.leq_weights(tree.payload[x], tree.payload[y]):
            low, high = other, tree
        else:
            low, high = tree, other
        if not tree_leq(low, high, wt):
            report.failures.append(
                f"case {case}: swapping {render_word(x, human=True)} with deeper "
                f"{render_word(y, human=True)} increased the cost\n"
                f"premise tree:\n{render_tree(high)}\nswapped:\n{render_tree(low)}"
            )
    return report


def check_axiom_structure_monotone(
    wt: Weighting[W], sampler: TreeSampler, n_cases: int = 1000, seed: int = DEFAULT_SEED
) -> CheckReport:
    """Unit and flatten are monotone for the order induced through ``weigh``.

    For flatten, the two nested trees must carry the same multiset of inner
    trees (that is how the greedy recursion ever uses monotonicity); the
    check rearranges one nest's inner trees onto a fresh outer code, orients
    the pair by the induced order, and compares the flattened results.
    """
    rng = random.Random(seed)
    report = CheckReport("axiom: unit/flatten monotone", n_cases)
    for case in range(n_cases):
        a = sampler.weight(rng)
        b = sampler.raise_weight(rng, a)
        d = sampler.arity(rng)
        if not tree_leq(unit(a, d), unit(b, d), wt):
            report.failures.append(f"case {case}: unit not monotone on {a!r} <= {b!r}")
            continue
        left = sampler.nested(rng)
        inner_trees = list(left.payload.values())
        target_words = sampler.code_words(rng, left.arity, len(inner_trees))
        rng.shuffle(inner_trees)
        right = CodeTree(left.arity, dict(zip(target_words, inner_trees)))
        induced_left = map_payloads(left, wt.weigh)
        induced_right = map_payloads(right, wt.weigh)
        if not tree_leq(induced_left, induced_right, wt):
            left, right = right, left
        if not tree_leq(flatten(left), flatten(right), wt):
            report.failures.append(
                f"case {case}: flatten not monotone\n"
                f"smaller nest:\n{render_tree(left)}\nlarger nest:\n{render_tree(right)}"
            )
    return report
