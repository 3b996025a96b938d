"""Byte-stream codec: bit packing, backend selection, AHUF container.

The hot loops live in a compiled kernel (``codetrees._bitpack``, Cython)
with a pure-Python twin (``_bitpack_py``); whichever is importable is
selected here at import time.  Set ``CODETREES_BITPACK=py`` to force the
pure kernel, e.g. for benchmarking.  Codewords longer than the compiled
kernel's cap (never reached by realistic inputs) fall back per call.

Container layout (bit-exact):

    "AHUF" | version 0x01 | count byte S-1 | S x (symbol, length) bytes
    | original length, 8-byte big-endian | codeword bitstream, MSB-first,
    zero-padded to a byte boundary

Since the count byte stores S-1, an empty input is written with one dummy
record (symbol 0, length 1) and an empty bitstream.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .huffman import CodeTable, FrequencyTable, Weight, build_code

from . import _bitpack_py

if os.environ.get("CODETREES_BITPACK") == "py":
    _kernel = _bitpack_py
else:
    try:
        from . import _bitpack as _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _bitpack_py

MAGIC = b"AHUF"
VERSION = 1


class DecodeError(ValueError):
    """The input is not a decodable bitstream or container."""


def backend_name() -> str:
    """"cython" when the compiled kernel is active, else "python"."""
    return "python" if _kernel is _bitpack_py else "cython"


@dataclass(frozen=True)
class Bits:
    """A packed MSB-first bit sequence: buffer plus exact bit count."""

    data: bytes
    bit_length: int


def _pick_kernel(max_len: int):
    cap = _kernel.MAX_CODE_LEN
    if cap is not None and max_len > cap:
        return _bitpack_py
    return _kernel


def _binary_table(table: CodeTable) -> tuple[list[int], list[int], int]:
    if table.arity != 2:
        raise ValueError("the bitstream codec requires a binary code table")
    lens = [0] * 256
    vals = [0] * 256
    max_len = 0
    for symbol, word in table.codes.items():
        lens[symbol] = len(word)
        value = 0
        for digit in word:
            value = (value << 1) | digit
        vals[symbol] = value
        max_len = max(max_len, len(word))
    return lens, vals, max_len


def encode(data: bytes, table: CodeTable) -> Bits:
    """Concatenate the codewords of ``data``; every symbol must be in ``table``."""
    lens, vals, max_len = _binary_table(table)
    try:
        packed, n_bits = _pick_kernel(max_len).encode_bits(data, lens, vals)
    except ValueError as exc:
        raise KeyError(str(exc)) from None
    return Bits(packed, n_bits)


def decode(bits: Bits, table: CodeTable, n_symbols: int) -> bytes:
    """Recover ``n_symbols`` bytes from a codeword concatenation.

    Raises :class:`DecodeError` when the stream is truncated or does not
    parse as codewords of ``table``.
    """
    lens, _, max_len = _binary_table(table)
    ordered = table.sorted_symbols()
    symbols = bytes(ordered)
    first = [0] * (max_len + 1)
    count = [0] * (max_len + 1)
    offset = [0] * (max_len + 1)
    for index, symbol in enumerate(ordered):
        length = lens[symbol]
        if count[length] == 0:
            offset[length] = index
            value = 0
            for digit in table.codes[symbol]:
                value = (value << 1) | digit
            first[length] = value
        count[length] += 1
    try:
        return _pick_kernel(max_len).decode_bits(
            bits.data, bits.bit_length, n_symbols, max_len, first, count, offset, symbols
        )
    except ValueError as exc:
        raise DecodeError(str(exc)) from None


def compress(data: bytes) -> tuple[bytes, Weight]:
    """Encode ``data`` into an AHUF container; returns it plus the payload bit cost."""
    if data:
        table, achieved = build_code(FrequencyTable.from_bytes(data), 2)
    else:
        table, achieved = CodeTable.from_lengths({0: 1}), 0
    bits = encode(data, table)
    lengths = table.lengths
    records = sorted(lengths, key=lambda s: (lengths[s], s))
    header = bytearray(MAGIC)
    header.append(VERSION)
    header.append(len(records) - 1)
    for symbol in records:
        header.append(symbol)
        header.append(lengths[symbol])
    header += len(data).to_bytes(8, "big")
    return bytes(header) + bits.data, achieved


def decompress(blob: bytes) -> bytes:
    """Decode an AHUF container back to the original bytes."""
    if blob[:4] != MAGIC:
        raise DecodeError("not an AHUF container (bad magic)")
    if len(blob) < 6:
        raise DecodeError("container truncated in header")
    if blob[4] != VERSION:
        raise DecodeError(f"unsupported version {blob[4]}")
    n_records = blob[5] + 1
    table_end = 6 + 2 * n_records
    if len(blob) < table_end + 8:
        raise DecodeError("container truncated in symbol table")
    lengths: dict[int, int] = {}
    for i in range(n_records):
        symbol, length = blob[6 + 2 * i], blob[7 + 2 * i]
        if symbol in lengths:
            raise DecodeError(f"duplicate symbol {symbol} in table")
        if length == 0:
            raise DecodeError(f"zero code length for symbol {symbol}")
        lengths[symbol] = length
    try:
        table = CodeTable.from_lengths(lengths, 2)
    except ValueError as exc:
        raise DecodeError(str(exc)) from None
    n_original = int.from_bytes(blob[table_end : table_end + 8], "big")
    payload = blob[table_end + 8 :]
    return decode(Bits(payload, len(payload) * 8), table, n_original)
