"""Pure-Python bit-packing kernels (fallback for the compiled extension).

Same interface as ``_bitpack``: canonical-code encode/decode over packed
MSB-first byte buffers.  No code-length cap (Python ints are unbounded);
roughly two orders of magnitude slower than the compiled kernel, see
``benchmarks/bench_codec.py``.
"""

from __future__ import annotations

from typing import Sequence

#: Longest supported codeword, in digits; None means unbounded.
MAX_CODE_LEN = None


def encode_bits(data: bytes, lens: Sequence[int], vals: Sequence[int]) -> tuple[bytes, int]:
    """Concatenate each byte's codeword, MSB-first, zero-padded to a byte.

    ``lens[b] == 0`` marks a symbol with no codeword; hitting one raises.
    Returns the packed buffer and the exact bit count before padding.
    """
    if not data:
        return b"", 0
    bit_strings: list[str | None] = [
        format(vals[b], f"0{lens[b]}b") if lens[b] else None for b in range(256)
    ]
    try:
        bits = "".join(bit_strings[b] for b in data)  # type: ignore[misc]
    except TypeError:
        missing = next(b for b in data if lens[b] == 0)
        raise ValueError(f"symbol {missing} has no codeword") from None
    n_bits = len(bits)
    padded = bits + "0" * (-n_bits % 8)
    return int(padded, 2).to_bytes(len(padded) // 8, "big"), n_bits


def decode_bits(
    payload: bytes,
    n_bits: int,
    n_symbols: int,
    max_len: int,
    first: Sequence[int],
    count: Sequence[int],
    offset: Sequence[int],
    symbols: bytes,
) -> bytes:
    """Decode ``n_symbols`` canonical codewords from an MSB-first buffer.

    ``first``/``count``/``offset`` are indexed by code length; ``offset``
    points into ``symbols``, the symbol values in canonical order.  Raises
    ``ValueError`` on truncation or when no codeword matches.
    """
    if n_symbols == 0:
        return b""
    if n_bits > len(payload) * 8:
        raise ValueError("bit length exceeds payload size")
    out = bytearray()
    code = 0
    length = 0
    consumed = 0
    for byte in payload:
        for shift in (7, 6, 5, 4, 3, 2, 1, 0):
            if consumed == n_bits:
                break
            consumed += 1
            code = (code << 1) | ((byte >> shift) & 1)
            length += 1
            if length > max_len:
                raise ValueError("invalid bitstream: no codeword matches")
            index = code - first[length]
            if count[length] and 0 <= index < count[length]:
                out.append(symbols[offset[length] + index])
                if len(out) == n_symbols:
                    return bytes(out)
                code = 0
                length = 0
    raise ValueError(f"truncated bitstream: decoded {len(out)} of {n_symbols} symbols")
