"""Pure-python LZ4 frame codec.

Implements the LZ4 frame format (magic 0x184D2204, frame descriptor with
header checksum, independent data blocks, end mark, content checksum) on top
of the LZ4 block format, plus the xxHash32 checksum the frame format
requires.  Compression is a greedy single-pass matcher; decompression accepts
any conformant frame with independent blocks.
"""

from __future__ import annotations

import struct

MAGIC = 0x184D2204
_MIN_MATCH = 4
# A match may not start within the last 12 bytes of a block, and the final
# 5 bytes are always literals (block format constraints).
_MFLIMIT = 12
_LAST_LITERALS = 5
_MAX_DISTANCE = 0xFFFF
_BLOCK_SIZE = 64 * 1024  # BD byte 0x40


class LZ4Error(Exception):
    """Corrupt or unsupported LZ4 container."""


_P1 = 2654435761
_P2 = 2246822519
_P3 = 3266489917
_P4 = 668265263
_P5 = 374761393
_M32 = 0xFFFFFFFF


def _rotl(x: int, r: int) -> int:
    return ((x << r) | (x >> (32 - r))) & _M32


def xxh32(data: bytes, seed: int = 0) -> int:
    n = len(data)
    i = 0
    if n >= 16:
        a1 = (seed + _P1 + _P2) & _M32
        a2 = (seed + _P2) & _M32
        a3 = seed & _M32
        a4 = (seed - _P1) & _M32
        limit = n - 16
        while i <= limit:
            l1, l2, l3, l4 = struct.unpack_from("<IIII", data, i)
            a1 = (_rotl((a1 + l1 * _P2) & _M32, 13) * _P1) & _M32
            a2 = (_rotl((a2 + l2 * _P2) & _M32, 13) * _P1) & _M32
            a3 = (_rotl((a3 + l3 * _P2) & _M32, 13) * _P1) & _M32
            a4 = (_rotl((a4 + l4 * _P2) & _M32, 13) * _P1) & _M32
            i += 16
        acc = (_rotl(a1, 1) + _rotl(a2, 7) + _rotl(a3, 12) + _rotl(a4, 18)) & _M32
    else:
        acc = (seed + _P5) & _M32
    acc = (acc + n) & _M32
    while i + 4 <= n:
        (lane,) = struct.unpack_from("<I", data, i)
        acc = (_rotl((acc + lane * _P3) & _M32, 17) * _P4) & _M32
        i += 4
    while i < n:
        acc = (_rotl((acc + data[i] * _P5) & _M32, 11) * _P1) & _M32
        i += 1
    acc ^= acc >> 15
    acc = (acc * _P2) & _M32
    acc ^= acc >> 13
    acc = (acc * _P3) & _M32
    acc ^= acc >> 16
    return acc


def _write_varlen(out: bytearray, value: int) -> None:
    while value >= 255:
        out.append(255)
        value -= 255
    out.append(value)


def compress_block(src: bytes) -> bytes:
    """LZ4 block compression (greedy, 4-byte hash table)."""
    n = len(src)
    out = bytearray()
    anchor = 0
    if n >= _MFLIMIT:
        table: dict[bytes, int] = {}
        match_start_limit = n - _MFLIMIT
        match_end_limit = n - _LAST_LITERALS
        i = 0
        while i <= match_start_limit:
            key = src[i : i + 4]
            cand = table.get(key)
            table[key] = i
            if cand is None or i - cand > _MAX_DISTANCE:
                i += 1
                continue
            # extend the match forward, leaving the final literals intact
            m = i + 4
            c = cand + 4
            while m < match_end_limit and src[m] == src[c]:
                m += 1
                c += 1
            lit = src[anchor:i]
            match_len = m - i - _MIN_MATCH
            token = (min(len(lit), 15) << 4) | min(match_len, 15)
            out.append(token)
            if len(lit) >= 15:
                _write_varlen(out, len(lit) - 15)
            out += lit
            out += struct.pack("<H", i - cand)
            if match_len >= 15:
                _write_varlen(out, match_len - 15)
            anchor = i = m
    lit = src[anchor:]
    out.append(min(len(lit), 15) << 4)
    if len(lit) >= 15:
        _write_varlen(out, len(lit) - 15)
    out += lit
    return bytes(out)


def decompress_block(src: bytes, max_size: int) -> bytes:
    out = bytearray()
    i = 0
    n = len(src)
    while i < n:
        token = src[i]
        i += 1
        lit_len = token >> 4
        if lit_len == 15:
            while True:
                if i >= n:
                    raise LZ4Error("truncated literal length")
                b = src[i]
                i += 1
                lit_len += b
                if b != 255:
                    break
        if i + lit_len > n:
            raise LZ4Error("literal run exceeds block")
        out += src[i : i + lit_len]
        i += lit_len
        if i == n:
            break  # last sequence carries no match
        if i + 2 > n:
            raise LZ4Error("truncated match offset")
        (offset,) = struct.unpack_from("<H", src, i)
        i += 2
        if offset == 0 or offset > len(out):
            raise LZ4Error("invalid match offset")
        match_len = (token & 0x0F) + _MIN_MATCH
        if token & 0x0F == 15:
            while True:
                if i >= n:
                    raise LZ4Error("truncated match length")
                b = src[i]
                i += 1
                match_len += b
                if b != 255:
                    break
        pos = len(out) - offset
        for _ in range(match_len):  # byte-wise: overlapping copies are the point
            out.append(out[pos])
            pos += 1
        if len(out) > max_size:
            raise LZ4Error("block output exceeds declared size")
    return bytes(out)


def compress(data: bytes) -> bytes:
    """Wrap ``data`` in an LZ4 frame with content size and content checksum."""
    out = bytearray(struct.pack("<I", MAGIC))
    # FLG: version 01, block independence, content size, content checksum
    descriptor = bytes([0x6C, 0x40]) + struct.pack("<Q", len(data))
    out += descriptor
    out.append((xxh32(descriptor) >> 8) & 0xFF)
    for start in range(0, len(data), _BLOCK_SIZE):
        chunk = data[start : start + _BLOCK_SIZE]
        packed = compress_block(chunk)
        if len(packed) < len(chunk):
            out += struct.pack("<I", len(packed))
            out += packed
        else:
            out += struct.pack("<I", len(chunk) | 0x80000000)
            out += chunk
    out += struct.pack("<I", 0)  # end mark
    out += struct.pack("<I", xxh32(data))
    return bytes(out)


def decompress(data: bytes) -> bytes:
    if len(data) < 7:
        raise LZ4Error("input shorter than any LZ4 frame")
    (magic,) = struct.unpack_from("<I", data, 0)
    if magic != MAGIC:
        raise LZ4Error("bad magic number")
    flg = data[4]
    if (flg >> 6) != 0b01:
        raise LZ4Error(f"unsupported frame version {flg >> 6}")
    if not (flg >> 5) & 1:
        raise LZ4Error("dependent blocks are not supported")
    block_checksums = bool((flg >> 4) & 1)
    has_size = bool((flg >> 3) & 1)
    has_content_checksum = bool((flg >> 2) & 1)
    if flg & 1:
        raise LZ4Error("dictionaries are not supported")
    bd = data[5]
    if bd & 0x8F or (bd >> 4) < 4:
        raise LZ4Error("bad BD byte")
    max_block = 1 << (8 + 2 * (bd >> 4))
    i = 6
    content_size = None
    if has_size:
        (content_size,) = struct.unpack_from("<Q", data, i)
        i += 8
    expected_hc = (xxh32(data[4:i]) >> 8) & 0xFF
    if i >= len(data) or data[i] != expected_hc:
        raise LZ4Error("header checksum mismatch")
    i += 1
    out = bytearray()
    while True:
        if i + 4 > len(data):
            raise LZ4Error("missing end mark")
        (word,) = struct.unpack_from("<I", data, i)
        i += 4
        if word == 0:
            break
        size = word & 0x7FFFFFFF
        uncompressed = bool(word & 0x80000000)
        if i + size > len(data):
            raise LZ4Error("truncated block")
        block = data[i : i + size]
        i += size
        if block_checksums:
            if i + 4 > len(data):
                raise LZ4Error("missing block checksum")
            (bchk,) = struct.unpack_from("<I", data, i)
            i += 4
            if bchk != xxh32(block):
                raise LZ4Error("block checksum mismatch")
        if uncompressed:
            out += block
        else:
            out += decompress_block(block, max_block)
    if has_content_checksum:
        if i + 4 > len(data):
            raise LZ4Error("missing content checksum")
        (chk,) = struct.unpack_from("<I", data, i)
        i += 4
        if chk != xxh32(bytes(out)):
            raise LZ4Error("content checksum mismatch")
    if content_size is not None and content_size != len(out):
        raise LZ4Error("content size mismatch")
    return bytes(out)
