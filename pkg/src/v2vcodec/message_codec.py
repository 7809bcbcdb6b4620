"""Whole-message codecs: three-letter abbreviations and priority-weighted codewords."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bitio import BitCursor, BitString
from .corpus import MessageTable, default_message_table
from .errors import (
    MalformedFrameError,
    TruncatedStreamError,
    UnknownAbbreviationError,
    UnknownCodewordError,
    UnknownMessageError,
)
from .huffman import HuffmanCodebook, build_huffman_code

ABBREV_BITS = 24


def _entry(message, table):
    entry = table.by_message(message)
    if entry is None:
        raise UnknownMessageError(f"{message!r} is not in the message table")
    return entry


def abbrev_encode(message: str, table: MessageTable | None = None) -> BitString:
    """Three ASCII uppercase letters, 8 bits each."""
    entry = _entry(message, table or default_message_table())
    return BitString("".join(format(b, "08b") for b in entry.abbreviation.encode("ascii")))


def abbrev_decode(frame: BitString, table: MessageTable | None = None) -> str:
    table = table or default_message_table()
    if len(frame) != ABBREV_BITS:
        raise MalformedFrameError(f"abbreviation frame must be {ABBREV_BITS} bits, got {len(frame)}")
    raw, _ = frame.to_bytes()
    if not all(0x41 <= b <= 0x5A for b in raw):
        raise MalformedFrameError(f"frame bytes {raw!r} are not uppercase ASCII letters")
    abbrev = raw.decode("ascii")
    entry = table.by_abbreviation(abbrev)
    if entry is None:
        raise UnknownAbbreviationError(f"abbreviation {abbrev!r} is not in the message table")
    return entry.message


def prob_encode(message: str, table: MessageTable | None = None) -> BitString:
    return _entry(message, table or default_message_table()).codeword


def prob_read(cursor: BitCursor, table: MessageTable | None = None) -> str:
    """Consume one codeword from ``cursor`` and return its message."""
    table = table or default_message_table()
    max_len = max(len(e.codeword) for e in table)
    start = cursor.position
    bits = cursor.source.bits
    for end in range(start + 1, min(start + max_len, len(bits)) + 1):
        entry = table.by_codeword(bits[start:end])
        if entry is not None:
            cursor.position = end
            return entry.message
    tail = bits[start:start + max_len]
    if len(tail) < max_len and any(e.codeword.bits.startswith(tail) for e in table):
        raise TruncatedStreamError(f"stream ends inside codeword prefix {tail!r}")
    raise UnknownCodewordError(f"no codeword matches bits {tail!r} at position {start}")


def prob_decode(bits: BitString, table: MessageTable | None = None) -> str:
    table = table or default_message_table()
    cursor = BitCursor(bits)
    message = prob_read(cursor, table)
    if not cursor.at_end():
        raise UnknownCodewordError(f"{cursor.remaining} bits follow the codeword for {message!r}")
    return message


@dataclass(frozen=True)
class PriorityWeights:
    messages: tuple[str, ...]
    numerators: tuple[int, ...]
    denominator: int

    def __post_init__(self):
        if len(self.messages) != len(self.numerators):
            raise ValueError("one numerator per message required")
        if any(n <= 0 for n in self.numerators):
            raise ValueError("weights must be positive")
        if sum(self.numerators) != self.denominator:
            raise ValueError(f"numerators sum to {sum(self.numerators)}, not {self.denominator}")

    @classmethod
    def from_table(cls, table: MessageTable) -> PriorityWeights:
        dens = {e.weight_den for e in table}
        if len(dens) != 1:
            raise ValueError("table weights do not share a denominator")
        return cls(tuple(table.messages), tuple(e.weight_num for e in table), dens.pop())

    def as_fractions(self) -> dict[str, Fraction]:
        return {m: Fraction(n, self.denominator) for m, n in zip(self.messages, self.numerators)}


def rebuild_message_code(weights: PriorityWeights | None = None) -> HuffmanCodebook:
    """Huffman code over whole messages; lengths should match the shipped table."""
    if weights is None:
        weights = PriorityWeights.from_table(default_message_table())
    return build_huffman_code(weights.as_fractions())


def weighted_length(book: HuffmanCodebook, weights: PriorityWeights) -> Fraction:
    fr = weights.as_fractions()
    return sum((fr[m] * book.lengths[m] for m in weights.messages), Fraction(0))
