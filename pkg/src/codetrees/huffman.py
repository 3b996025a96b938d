"""Huffman coding: the sum weighting, optimal code tables, canonical form.

Weights are symbol frequencies; a tree's cost is its total weighted
codeword length ``sum(len(word) * freq)``, which the greedy builder
minimizes.  The shipped table form is canonical: only the per-symbol code
lengths survive from the built tree (cost depends on lengths alone), and
codewords are reassigned in (length, symbol) order.  That keeps headers
compact and makes decode tables reconstructible from lengths.

All arithmetic is exact: integer or `fractions.Fraction` weights, never
floats.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .core import CodeTree, Word, render_word
from .greedy import WeightedItem, build_optimal_tree
from .weighting import Weighting

#: Frequencies and costs: exact nonnegative numbers.
Weight = Union[int, Fraction]


def weighted_length(tree: CodeTree[Weight]) -> Weight:
    """Total codeword length weighted by leaf values: ``sum(len(w) * payload)``.

    This is the number of output bits (for d=2) when each leaf's payload is
    the occurrence count of its symbol; dividing by the total count gives
    the expected codeword length.
    """
    return sum((len(word) * value for word, value in tree.payload.items()), 0)


def entropy_base_d(tree: CodeTree[Weight]) -> Union[Fraction, float]:
    """Shannon entropy of the leaf distribution, in base-d digits.

    Exact (a Fraction) when every payload is a power of ``1/d``, since then
    ``-log_d(p)`` is the integer exponent; otherwise computed in floats.
    For payloads ``p = d ** -len(word)`` this equals the tree's weighted
    length exactly.
    """
    d = tree.arity
    total: Union[Fraction, float] = Fraction(0)
    for value in tree.payload.values():
        p = Fraction(value)
        if p == 0:
            continue
        exponent = _power_of_base(p, d)
        if exponent is not None:
            total += p * exponent
        else:
            total += float(p) * (-math.log(p) / math.log(d))
    return total


def _power_of_base(p: Fraction, d: int) -> int | None:
    """The integer e with ``p == d ** -e``, if one exists."""
    if p.numerator != 1:
        return None
    e = 0
    q = p.denominator
    while q > 1:
        if q % d:
            return None
        q //= d
        e += 1
    return e


class SumWeighting(Weighting[Weight]):
    """Weights add under merging; cost is the total weighted codeword length.

    Assumes nonnegative weights (frequencies); with negatives the greedy
    optimality argument does not apply.
    """

    def weigh(self, tree: CodeTree[Weight]) -> Weight:
        return sum(tree.payload.values())

    def cost(self, tree: CodeTree[Weight]) -> Weight:
        return weighted_length(tree)


@dataclass(frozen=True)
class FrequencyTable:
    """Occurrence counts per byte-valued symbol; zero counts are dropped."""

    counts: Mapping[int, int]

    def __post_init__(self) -> None:
        cleaned = {}
        for symbol, count in self.counts.items():
            if not 0 <= symbol <= 255:
                raise ValueError(f"symbol {symbol!r} is not a byte value")
            if count < 0:
                raise ValueError(f"negative count for symbol {symbol}")
            if count:
                cleaned[int(symbol)] = int(count)
        object.__setattr__(self, "counts", cleaned)

    @classmethod
    def from_bytes(cls, data: bytes) -> "FrequencyTable":
        return cls(Counter(data))

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class CodeTable:
    """Symbol-to-codeword map in canonical form.

    Construction rejects non-canonical tables: the codewords must be exactly
    the ones :meth:`from_lengths` assigns for the table's length profile.
    """

    arity: int
    codes: Mapping[int, Word]

    def __post_init__(self) -> None:
        codes = {int(s): tuple(w) for s, w in self.codes.items()}
        object.__setattr__(self, "codes", codes)
        if not codes:
            raise ValueError("empty code table")
        for symbol in codes:
            if not 0 <= symbol <= 255:
                raise ValueError(f"symbol {symbol!r} is not a byte value")
        expected = _canonical_codes({s: len(w) for s, w in codes.items()}, self.arity)
        if codes != expected:
            raise ValueError("codewords are not in canonical (length, symbol) order")

    @classmethod
    def from_lengths(cls, lengths: Mapping[int, int], arity: int = 2) -> "CodeTable":
        """Assign canonical codewords for the given per-symbol lengths."""
        return cls(arity, _canonical_codes(dict(lengths), arity))

    @property
    def lengths(self) -> dict[int, int]:
        return {symbol: len(word) for symbol, word in self.codes.items()}

    def sorted_symbols(self) -> list[int]:
        """Symbols in canonical (length, symbol) order."""
        return sorted(self.codes, key=lambda s: (len(self.codes[s]), s))

    def render(self) -> str:
        """Text form: one ``<symbol-hex><TAB><digits>`` line per symbol."""
        return "\n".join(
            f"{symbol:02x}\t{render_word(self.codes[symbol])}" for symbol in self.sorted_symbols()
        )


def _canonical_codes(lengths: dict[int, int], arity: int) -> dict[int, Word]:
    if arity < 2:
        raise ValueError(f"arity must be >= 2, got {arity}")
    for symbol, length in lengths.items():
        if length < 1:
            raise ValueError(f"symbol {symbol} has non-positive code length {length}")
    codes: dict[int, Word] = {}
    value = 0
    prev_len = None
    for symbol in sorted(lengths, key=lambda s: (lengths[s], s)):
        length = lengths[symbol]
        if prev_len is not None:
            value = (value + 1) * arity ** (length - prev_len)
        if value >= arity**length:
            raise ValueError("code lengths violate the Kraft inequality")
        codes[symbol] = _digits(value, length, arity)
        prev_len = length
    return codes


def _digits(value: int, length: int, base: int) -> Word:
    out = []
    for _ in range(length):
        value, digit = divmod(value, base)
        out.append(digit)
    return tuple(reversed(out))


def build_code(freqs: FrequencyTable, arity: int = 2) -> tuple[CodeTable, Weight]:
    """Optimal canonical code for a frequency table, plus its total bit cost.

    The reported cost is ``sum(len(code[s]) * count[s])``, the exact payload
    size in base-d digits.  A lone symbol gets the length-1 codeword "0"
    (the empty codeword would make the stream unrecoverable), the one place
    this exceeds the bare tree cost.
    """
    if not freqs.counts:
        raise ValueError("frequency table has no nonzero counts")
    symbols = sorted(freqs.counts)
    if len(symbols) == 1:
        lengths = {symbols[0]: 1}
    else:
        items = [WeightedItem(freqs.counts[s], s) for s in symbols]
        result = build_optimal_tree(items, arity, SumWeighting())
        lengths = {s: len(result.leaf_of_tag[s]) for s in symbols}
    table = CodeTable.from_lengths(lengths, arity)
    achieved = sum(lengths[s] * freqs.counts[s] for s in symbols)
    return table, achieved
