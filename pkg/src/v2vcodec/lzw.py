"""LZW over the 27-symbol alphabet with a fixed per-message code width.

The frame starts with a 4-bit header holding the code width (5..12); every
code that follows uses exactly that many bits. The encoder buffers its codes
so the width can be chosen from the final dictionary size.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bitio import BitCursor, BitString
from .corpus import ALPHABET
from .errors import AlphabetError, MalformedFrameError, TruncatedStreamError

HEADER_BITS = 4
MIN_WIDTH = 5
MAX_WIDTH = 12
MAX_INDEX = (1 << MAX_WIDTH) - 1


@dataclass(frozen=True)
class LzwFrame:
    width: int
    codes: tuple[int, ...]

    def to_bits(self) -> BitString:
        if not MIN_WIDTH <= self.width <= MAX_WIDTH:
            raise MalformedFrameError(f"width {self.width} outside {MIN_WIDTH}..{MAX_WIDTH}")
        parts = [format(self.width, "04b")]
        parts.extend(format(c, f"0{self.width}b") for c in self.codes)
        return BitString("".join(parts))

    @classmethod
    def from_bits(cls, bits: BitString) -> LzwFrame:
        cur = BitCursor(bits)
        width = cur.read_uint(HEADER_BITS)
        if not MIN_WIDTH <= width <= MAX_WIDTH:
            raise MalformedFrameError(f"header width {width} outside {MIN_WIDTH}..{MAX_WIDTH}")
        count, extra = divmod(cur.remaining, width)
        if extra:
            raise TruncatedStreamError(f"{extra} bits left over after {count} codes of width {width}")
        return cls(width, tuple(cur.read_uint(width) for _ in range(count)))

    @property
    def bit_len(self) -> int:
        return HEADER_BITS + self.width * len(self.codes)


def width_for(size: int) -> int:
    """Bits needed to address ``size`` dictionary entries, at least MIN_WIDTH."""
    return max(MIN_WIDTH, (size - 1).bit_length())


def lzw_encode(text: str, trace=None) -> LzwFrame:
    if not text:
        raise ValueError("LZW cannot encode an empty message")
    for pos, ch in enumerate(text):
        if ch not in ALPHABET:
            raise AlphabetError(ch, pos)
    dictionary = {ch: i for i, ch in enumerate(ALPHABET)}
    codes = []
    current = text[0]
    for ch in text[1:]:
        candidate = current + ch
        if candidate in dictionary:
            current = candidate
            continue
        codes.append(dictionary[current])
        if len(dictionary) <= MAX_INDEX:
            dictionary[candidate] = len(dictionary)
        if trace is not None:
            trace.append(dict(dictionary))
        current = ch
    codes.append(dictionary[current])
    return LzwFrame(width_for(len(dictionary)), tuple(codes))


def lzw_decode(frame: LzwFrame, trace=None) -> str:
    if not MIN_WIDTH <= frame.width <= MAX_WIDTH:
        raise MalformedFrameError(f"width {frame.width} outside {MIN_WIDTH}..{MAX_WIDTH}")
    if not frame.codes:
        raise TruncatedStreamError("LZW frame carries no codes")
    entries = list(ALPHABET)
    limit = 1 << frame.width

    def check(code):
        if code >= limit:
            raise MalformedFrameError(f"code {code} does not fit in {frame.width} bits")

    first = frame.codes[0]
    check(first)
    if first >= len(entries):
        raise MalformedFrameError(f"first code {first} is not a single character")
    previous = entries[first]
    out = [previous]
    for code in frame.codes[1:]:
        check(code)
        if code < len(entries):
            current = entries[code]
        elif code == len(entries) and len(entries) <= MAX_INDEX:
            current = previous + previous[0]
        else:
            raise MalformedFrameError(f"code {code} beyond next dictionary index {len(entries)}")
        if len(entries) <= MAX_INDEX:
            entries.append(previous + current[0])
        if trace is not None:
            trace.append({s: i for i, s in enumerate(entries)})
        out.append(current)
        previous = current
    return "".join(out)
