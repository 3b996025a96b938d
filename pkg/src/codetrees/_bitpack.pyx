# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bit-packing kernels: canonical-code encode/decode hot loops.

Interface-identical to ``_bitpack_py``; selected at import by
``codetrees.codec``.  Codewords are capped at MAX_CODE_LEN digits so the
encoder's 64-bit accumulator never overflows (7 pending bits + 56-bit code);
the codec falls back to the pure kernel beyond that.
"""

from libc.stdint cimport uint64_t

MAX_CODE_LEN = 56


def encode_bits(const unsigned char[:] data, lens, vals):
    """Concatenate each byte's codeword, MSB-first, zero-padded to a byte."""
    cdef int table_len[256]
    cdef uint64_t table_val[256]
    cdef int b, length
    for b in range(256):
        length = lens[b]
        if length > MAX_CODE_LEN:
            raise ValueError(f"codeword longer than {MAX_CODE_LEN} bits")
        table_len[b] = length
        table_val[b] = vals[b] if length else 0

    cdef Py_ssize_t n = data.shape[0]
    if n == 0:
        return b"", 0

    cdef Py_ssize_t i
    cdef long long total_bits = 0
    for i in range(n):
        length = table_len[data[i]]
        if length == 0:
            raise ValueError(f"symbol {data[i]} has no codeword")
        total_bits += length

    out = bytearray((total_bits + 7) // 8)
    cdef unsigned char[:] buf = out
    cdef Py_ssize_t pos = 0
    cdef uint64_t acc = 0
    cdef int pending = 0
    for i in range(n):
        b = data[i]
        acc = (acc << table_len[b]) | table_val[b]
        pending += table_len[b]
        while pending >= 8:
            pending -= 8
            buf[pos] = <unsigned char> ((acc >> pending) & 0xFF)
            pos += 1
    if pending:
        buf[pos] = <unsigned char> ((acc << (8 - pending)) & 0xFF)
    return bytes(out), total_bits


def decode_bits(
    const unsigned char[:] payload,
    long long n_bits,
    Py_ssize_t n_symbols,
    int max_len,
    first,
    count,
    offset,
    const unsigned char[:] symbols,
):
    """Decode ``n_symbols`` canonical codewords from an MSB-first buffer."""
    if n_symbols == 0:
        return b""
    if max_len > MAX_CODE_LEN:
        raise ValueError(f"codeword longer than {MAX_CODE_LEN} bits")
    if n_bits > payload.shape[0] * 8:
        raise ValueError("bit length exceeds payload size")

    cdef long long table_first[57]
    cdef Py_ssize_t table_count[57]
    cdef Py_ssize_t table_offset[57]
    cdef int l
    for l in range(1, max_len + 1):
        table_first[l] = first[l]
        table_count[l] = count[l]
        table_offset[l] = offset[l]

    out = bytearray(n_symbols)
    cdef unsigned char[:] buf = out
    cdef Py_ssize_t n_out = 0
    cdef long long code = 0, index, consumed = 0
    cdef int length = 0, shift
    cdef unsigned char byte
    cdef Py_ssize_t i
    for i in range(payload.shape[0]):
        byte = payload[i]
        for shift in range(7, -1, -1):
            if consumed == n_bits:
                break
            consumed += 1
            code = (code << 1) | ((byte >> shift) & 1)
            length += 1
            if length > max_len:
                raise ValueError("invalid bitstream: no codeword matches")
            index = code - table_first[length]
            if table_count[length] and 0 <= index < table_count[length]:
                buf[n_out] = symbols[table_offset[length] + index]
                n_out += 1
                if n_out == n_symbols:
                    return bytes(out)
                code = 0
                length = 0
    raise ValueError(f"truncated bitstream: decoded {n_out} of {n_symbols} symbols")
