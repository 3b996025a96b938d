"""Core objects: d-ary codewords, prefix codes, and payload-carrying code trees.

A codeword is a tuple of digits over ``{0, ..., d-1}``.  A prefix code is a
finite set of codewords none of which is a prefix of another.  A code tree
pairs a prefix code with a payload value on each codeword; payloads may
themselves be code trees, and :func:`flatten` splices such a nested tree
into a single one by concatenating codewords.  Together with :func:`unit`
(the singleton tree on the empty codeword) and :func:`map_payloads`, these
satisfy the usual unit/associativity laws, which the test suite checks on
randomized data.

All values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Generic, Iterable, Mapping, TypeVar

P = TypeVar("P")
Q = TypeVar("Q")

#: A codeword: digits over ``{0, ..., d-1}``, most significant first.
Word = tuple[int, ...]

#: The empty codeword.
EPSILON: Word = ()

_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"
_DIGIT_VALUES = {c: i for i, c in enumerate(_DIGIT_CHARS)}


class ArityMismatchError(ValueError):
    """Nested code trees disagree on the digit alphabet size."""


def render_word(word: Word, human: bool = False) -> str:
    """Render a codeword as concatenated digits, e.g. ``(1,1,0,1,1)`` -> "11011".

    The empty codeword renders as ``""`` (machine form) or ``"(eps)"`` when
    ``human`` is set.  Digits 10..35 use ``a``..``z``; larger digits have no
    single-character form and raise ``ValueError``.
    """
    if not word:
        return "(eps)" if human else ""
    try:
        return "".join(_DIGIT_CHARS[digit] for digit in word)
    except IndexError:
        raise ValueError(f"cannot render digit >= {len(_DIGIT_CHARS)} in {word!r}") from None


def parse_word(text: str, arity: int) -> Word:
    """Inverse of :func:`render_word` for machine-form strings."""
    digits = []
    for ch in text:
        value = _DIGIT_VALUES.get(ch.lower())
        if value is None or value >= arity:
            raise ValueError(f"invalid digit {ch!r} for arity {arity}")
        digits.append(value)
    return tuple(digits)


def is_prefix(shorter: Word, longer: Word) -> bool:
    """True if ``shorter`` is a (not necessarily proper) prefix of ``longer``."""
    return longer[: len(shorter)] == shorter


def is_prefix_free(words: Iterable[Word]) -> bool:
    """True iff no word is a prefix of another (duplicates count as violations).

    In sorted order a prefix immediately precedes its extensions, so checking
    adjacent pairs suffices.
    """
    ordered = sorted(words)
    return not any(b[: len(a)] == a for a, b in zip(ordered, ordered[1:]))


def _check_digits(word: Word, arity: int) -> None:
    for digit in word:
        if not isinstance(digit, int) or not 0 <= digit < arity:
            raise ValueError(f"digit {digit!r} out of range for arity {arity} in {word!r}")


@dataclass(frozen=True)
class PrefixCode:
    """A finite set of pairwise prefix-incomparable codewords over a d-ary alphabet.

    The arity is part of the code's identity; operations never mix codes of
    different arity.  The empty code is representable (Kraft sum 0) but the
    algorithm entry points reject it.
    """

    arity: int
    words: frozenset[Word]

    def __post_init__(self) -> None:
        if self.arity < 2:
            raise ValueError(f"arity must be >= 2, got {self.arity}")
        normalized = frozenset(tuple(w) for w in self.words)
        object.__setattr__(self, "words", normalized)
        for word in normalized:
            _check_digits(word, self.arity)
        if not is_prefix_free(normalized):
            raise ValueError(f"words are not prefix-free: {sorted(normalized)!r}")

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[Word]:
        """Words in (length, lexicographic) order; stable across runs."""
        return sorted(self.words, key=lambda w: (len(w), w))

    def kraft_sum(self) -> Fraction:
        """Exact ``sum(d ** -len(w))`` over the code; <= 1 for any prefix code."""
        return sum((Fraction(1, self.arity ** len(w)) for w in self.words), Fraction(0))

    def is_exhaustive(self) -> bool:
        """True iff the code covers every infinite d-ary string.

        Decided by the Kraft sum reaching 1, the standard finite
        characterization for prefix codes.
        """
        return self.kraft_sum() == 1


@dataclass(frozen=True)
class CodeTree(Generic[P]):
    """A prefix code with a payload attached to every codeword."""

    arity: int
    payload: Mapping[Word, P]
    code: PrefixCode = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        normalized = {tuple(w): v for w, v in self.payload.items()}
        object.__setattr__(self, "payload", normalized)
        object.__setattr__(self, "code", PrefixCode(self.arity, frozenset(normalized)))

    def __len__(self) -> int:
        return len(self.payload)

    def sorted_items(self) -> list[tuple[Word, P]]:
        return [(w, self.payload[w]) for w in self.code.sorted_words()]


def unit(value: P, arity: int) -> CodeTree[P]:
    """The singleton tree carrying ``value`` on the empty codeword."""
    return CodeTree(arity, {EPSILON: value})


def map_payloads(tree: CodeTree[P], fn: Callable[[P], Q]) -> CodeTree[Q]:
    """Apply ``fn`` to every payload, keeping the code unchanged."""
    return CodeTree(tree.arity, {w: fn(v) for w, v in tree.payload.items()})


def flatten(tree: CodeTree["CodeTree[P]"]) -> CodeTree[P]:
    """Splice a tree of trees into one tree by concatenating codewords.

    Every payload of ``tree`` must be a :class:`CodeTree` of the same arity.
    The result's words are all concatenations ``outer + inner``; because both
    levels are prefix codes, every such word splits back uniquely, so no
    payloads collide.
    """
    merged: dict[Word, P] = {}
    total = 0
    for outer_word, inner in tree.payload.items():
        if not isinstance(inner, CodeTree):
            raise TypeError(f"payload at {outer_word!r} is not a CodeTree: {inner!r}")
        if inner.arity != tree.arity:
            raise ArityMismatchError(
                f"inner tree at {outer_word!r} has arity {inner.arity}, outer has {tree.arity}"
            )
        total += len(inner.payload)
        for inner_word, value in inner.payload.items():
            merged[outer_word + inner_word] = value
    if len(merged) != total:  # unreachable for valid prefix codes
        raise ValueError("codeword concatenation collided; inputs were not prefix-free")
    return CodeTree(tree.arity, merged)


def render_tree(tree: CodeTree[P]) -> str:
    """One ``word: payload`` line per leaf, in (length, word) order."""
    lines = []
    for word, value in tree.sorted_items():
        if isinstance(value, CodeTree):
            inner = render_tree(value).replace("\n", "; ")
            lines.append(f"{render_word(word, human=True)}: [{inner}]")
        else:
            lines.append(f"{render_word(word, human=True)}: {value}")
    return "\n".join(lines)
