import struct

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weft import lz4f


# Published xxh32 reference values (seed 0).
XXH32_VECTORS = [
    (b"", 0x02CC5D05),
    (b"abc", 0x32D153FF),
    (b"Nobody inspects the spammish repetition", 0xE2293B2F),
]


@pytest.mark.parametrize("data,expected", XXH32_VECTORS)
def test_xxh32_reference_vectors(data, expected):
    assert lz4f.xxh32(data) == expected


def test_xxh32_seeded():
    # seed participates in the accumulators; just pin self-consistency
    assert lz4f.xxh32(b"abc", seed=1) != lz4f.xxh32(b"abc")


def test_block_roundtrip_simple():
    data = b"abcabcabcabcabcabcabcabcabcabcabc end of stream"
    packed = lz4f.compress_block(data)
    assert lz4f.decompress_block(packed, 1 << 20) == data
    assert len(packed) < len(data)


def test_block_all_literals_when_short():
    data = b"short"
    packed = lz4f.compress_block(data)
    # token with 5 literals, no match
    assert packed == bytes([5 << 4]) + data
    assert lz4f.decompress_block(packed, 1 << 20) == data


def test_decompress_handwritten_block():
    # One sequence: 5 literals "aaaab", match offset 1 length 8, then the
    # closing literal run "cdefg" (assembled by hand from the block spec).
    block = bytes([0x54]) + b"aaaab" + struct.pack("<H", 1) + bytes([0x50]) + b"cdefg"
    assert lz4f.decompress_block(block, 1 << 20) == b"aaaab" + b"b" * 8 + b"cdefg"


def test_frame_roundtrip():
    data = (b"the quick brown fox jumps over the lazy dog " * 100) + b"tail"
    frame = lz4f.compress(data)
    assert frame[:4] == struct.pack("<I", lz4f.MAGIC)
    assert lz4f.decompress(frame) == data


def test_frame_roundtrip_empty():
    assert lz4f.decompress(lz4f.compress(b"")) == b""


def test_frame_roundtrip_incompressible():
    data = bytes(range(256)) * 3
    assert lz4f.decompress(lz4f.compress(data)) == data


def test_frame_multi_block():
    data = b"z" * (200 * 1024)
    assert lz4f.decompress(lz4f.compress(data)) == data


def test_frame_deterministic():
    data = b"determinism" * 1000
    assert lz4f.compress(data) == lz4f.compress(data)


def test_bad_magic_rejected():
    with pytest.raises(lz4f.LZ4Error):
        lz4f.decompress(b"\x00\x00\x00\x00rest")


def test_corrupt_payload_rejected():
    frame = bytearray(lz4f.compress(b"hello hello hello hello hello"))
    frame[-6] ^= 0xFF  # flip a byte inside the last block
    with pytest.raises(lz4f.LZ4Error):
        lz4f.decompress(bytes(frame))


def test_corrupt_header_rejected():
    frame = bytearray(lz4f.compress(b"payload"))
    frame[4] ^= 0x04  # toggle a descriptor flag without fixing the checksum
    with pytest.raises(lz4f.LZ4Error):
        lz4f.decompress(bytes(frame))


def test_truncated_frame_rejected():
    frame = lz4f.compress(b"hello world, hello world, hello world")
    with pytest.raises(lz4f.LZ4Error):
        lz4f.decompress(frame[:-5])


@settings(max_examples=200, deadline=None)
@given(st.binary(max_size=4096))
def test_block_roundtrip_property(data):
    assert lz4f.decompress_block(lz4f.compress_block(data), 1 << 22) == data


@settings(max_examples=100, deadline=None)
@given(st.binary(max_size=4096))
def test_frame_roundtrip_property(data):
    assert lz4f.decompress(lz4f.compress(data)) == data


@settings(max_examples=50, deadline=None)
@given(st.text())
def test_frame_roundtrip_text(s):
    data = s.encode("utf-8")
    assert lz4f.decompress(lz4f.compress(data)) == data
