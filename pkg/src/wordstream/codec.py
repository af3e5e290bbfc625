"""Canonical byte encoding for element data.

Group elements in this package are plain immutable data (ints, strings,
fractions, nested tuples).  encode() maps such data to bytes so that two
values encode equally iff they are equal, independent of process or run.
decode() inverts encode().  The encoding is used for stable hashing and for
memory-lean breadth-first searches over group balls.
"""

from __future__ import annotations

from fractions import Fraction

_INT, _STR, _BYTES, _TUPLE, _FRACTION, _NONE = b"i", b"s", b"b", b"t", b"f", b"n"


def _enc_uint(value: int, out: bytearray) -> None:
    # LEB128.
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.append(byte | 0x80)
        else:
            out.append(byte)
            return


def _enc_int(value: int, out: bytearray) -> None:
    # zigzag then LEB128; works for arbitrary precision
    _enc_uint((value << 1) ^ (-1 if value < 0 else 0), out)


def _encode(value, out: bytearray) -> None:
    if value is None:
        out += _NONE
    elif isinstance(value, bool):
        raise TypeError("bool is not canonical element data")
    elif isinstance(value, int):
        out += _INT
        _enc_int(value, out)
    elif isinstance(value, str):
        raw = value.encode("utf-8")
        out += _STR
        _enc_uint(len(raw), out)
        out += raw
    elif isinstance(value, bytes):
        out += _BYTES
        _enc_uint(len(value), out)
        out += value
    elif isinstance(value, tuple):
        out += _TUPLE
        _enc_uint(len(value), out)
        for item in value:
            _encode(item, out)
    elif isinstance(value, Fraction):
        out += _FRACTION
        _enc_int(value.numerator, out)
        _enc_int(value.denominator, out)
    else:
        raise TypeError("cannot encode %r" % type(value))


def encode(value) -> bytes:
    out = bytearray()
    _encode(value, out)
    return bytes(out)


def _dec_uint(data: bytes, pos: int) -> tuple[int, int]:
    value = shift = 0
    while True:
        byte = data[pos]
        pos += 1
        value |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return value, pos
        shift += 7


def _dec_int(data: bytes, pos: int) -> tuple[int, int]:
    raw, pos = _dec_uint(data, pos)
    return (raw >> 1) ^ -(raw & 1), pos


def _decode(data: bytes, pos: int):
    tag = data[pos:pos + 1]
    pos += 1
    if tag == _NONE:
        return None, pos
    if tag == _INT:
        return _dec_int(data, pos)
    if tag == _STR:
        length, pos = _dec_uint(data, pos)
        return data[pos:pos + length].decode("utf-8"), pos + length
    if tag == _BYTES:
        length, pos = _dec_uint(data, pos)
        return data[pos:pos + length], pos + length
    if tag == _TUPLE:
        length, pos = _dec_uint(data, pos)
        items = []
        for _ in range(length):
            item, pos = _decode(data, pos)
            items.append(item)
        return tuple(items), pos
    if tag == _FRACTION:
        num, pos = _dec_int(data, pos)
        den, pos = _dec_int(data, pos)
        return Fraction(num, den), pos
    raise ValueError("bad tag %r at offset %d" % (tag, pos - 1))


def decode(data: bytes):
    value, pos = _decode(data, 0)
    if pos != len(data):
        raise ValueError("trailing bytes after encoded value")
    return value
