"""Bit strings and cursors.

Bits are packed MSB-first; the final byte is zero padded and the explicit
bit length is always authoritative.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedFrameError, TruncatedStreamError

_BIT_CHARS = frozenset("01")


@dataclass(frozen=True)
class BitString:
    """Immutable sequence of bits, stored as a string of '0'/'1' characters."""

    bits: str = ""

    def __post_init__(self):
        if not _BIT_CHARS.issuperset(self.bits):
            raise ValueError(f"not a bit string: {self.bits!r}")

    @property
    def bit_len(self) -> int:
        return len(self.bits)

    def __len__(self):
        return len(self.bits)

    def __add__(self, other: BitString) -> BitString:
        if not isinstance(other, BitString):
            return NotImplemented
        return BitString(self.bits + other.bits)

    def __str__(self):
        return self.bits

    @classmethod
    def from_uint(cls, value: int, width: int) -> BitString:
        if value < 0 or value >= 1 << width:
            raise ValueError(f"{value} does not fit in {width} bits")
        return cls(format(value, f"0{width}b") if width else "")

    @classmethod
    def concat(cls, parts) -> BitString:
        return cls("".join(p.bits if isinstance(p, BitString) else p for p in parts))

    def to_uint(self) -> int:
        return int(self.bits, 2) if self.bits else 0

    def to_bytes(self) -> tuple[bytes, int]:
        n = len(self.bits)
        if n == 0:
            return b"", 0
        pad = -n % 8
        value = int(self.bits + "0" * pad, 2)
        return value.to_bytes((n + pad) // 8, "big"), n

    @classmethod
    def from_bytes(cls, data: bytes, bit_len: int) -> BitString:
        if bit_len < 0 or bit_len > 8 * len(data):
            raise MalformedFrameError(
                f"bit length {bit_len} does not fit in {len(data)} bytes")
        if bit_len == 0:
            return cls("")
        nbytes = (bit_len + 7) // 8
        value = int.from_bytes(data[:nbytes], "big") >> (8 * nbytes - bit_len)
        return cls(format(value, f"0{bit_len}b"))


def append_bits(buffer: BitString, code: BitString) -> BitString:
    return buffer + code


class BitCursor:
    """Sequential reader over a BitString."""

    __slots__ = ("source", "position")

    def __init__(self, source: BitString, position: int = 0):
        if not 0 <= position <= len(source):
            raise ValueError("cursor position out of range")
        self.source = source
        self.position = position

    @property
    def remaining(self) -> int:
        return len(self.source) - self.position

    def at_end(self) -> bool:
        return self.position == len(self.source)

    def read_bits(self, n: int) -> BitString:
        if n < 0:
            raise ValueError("negative read")
        if self.position + n > len(self.source):
            raise TruncatedStreamError(
                f"need {n} bits at position {self.position}, only {self.remaining} left")
        start = self.position
        self.position += n
        return BitString(self.source.bits[start:self.position])

    def read_bit(self) -> str:
        if self.position >= len(self.source):
            raise TruncatedStreamError(f"stream ended at bit {self.position}")
        bit = self.source.bits[self.position]
        self.position += 1
        return bit

    def read_uint(self, n: int) -> int:
        return self.read_bits(n).to_uint()


def read_bits(cursor: BitCursor, n: int) -> BitString:
    return cursor.read_bits(n)
