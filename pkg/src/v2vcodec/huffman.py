"""Static Huffman codes and the character-level codec built on them."""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache

from .bitio import BitString
from .corpus import default_char_distribution, kraft_sum
from .errors import AlphabetError, TruncatedStreamError


@dataclass(frozen=True)
class HuffmanCodebook:
    alphabet: tuple
    codes: dict
    lengths: dict

    def __post_init__(self):
        object.__setattr__(self, "_decode", {c.bits: s for s, c in self.codes.items()})

    def __getitem__(self, symbol) -> BitString:
        return self.codes[symbol]

    def kraft(self):
        return kraft_sum(self.lengths.values())

    def average_length(self, probs) -> float:
        return sum(p * self.lengths[s] for s, p in zip(self.alphabet, probs))

    def listing(self) -> str:
        return "".join(f"{s!r}\t{self.lengths[s]}\t{self.codes[s]}\n" for s in self.alphabet)


def huffman_lengths(weights) -> list[int]:
    """Optimal code lengths for a sequence of positive weights.

    Ties on weight pop the most recently merged node first, then leaves in
    index order.
    """
    n = len(weights)
    if n < 2:
        raise ValueError("need at least two symbols")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    # key (weight, rank): leaves rank by index >= 0, merged nodes get
    # decreasing negative ranks so the newest merge sorts first
    heap = [(w, i, [i]) for i, w in enumerate(weights)]
    heapq.heapify(heap)
    lengths = [0] * n
    rank = itertools.count(-1, -1)
    while len(heap) > 1:
        wa, _, a = heapq.heappop(heap)
        wb, _, b = heapq.heappop(heap)
        for s in itertools.chain(a, b):
            lengths[s] += 1
        heapq.heappush(heap, (wa + wb, next(rank), a + b))
    return lengths


def canonical_codes(lengths) -> list[str]:
    """Assign canonical codewords: ordered by (length, index), counting upward."""
    order = sorted(range(len(lengths)), key=lambda i: (lengths[i], i))
    codes = [""] * len(lengths)
    code = 0
    prev = lengths[order[0]]
    for k, i in enumerate(order):
        if k:
            code = (code + 1) << (lengths[i] - prev)
        prev = lengths[i]
        codes[i] = format(code, f"0{lengths[i]}b")
    return codes


def build_huffman_code(weights) -> HuffmanCodebook:
    """Build a canonical Huffman codebook from ``{symbol: weight}``.

    Symbol order in the mapping is the alphabet order used for tie-breaking
    and canonical assignment.
    """
    alphabet = tuple(weights)
    lengths = huffman_lengths([weights[s] for s in alphabet])
    codes = canonical_codes(lengths)
    return HuffmanCodebook(
        alphabet,
        {s: BitString(c) for s, c in zip(alphabet, codes)},
        dict(zip(alphabet, lengths)),
    )


@lru_cache(maxsize=1)
def default_char_codebook() -> HuffmanCodebook:
    """Fixed character codebook built once from the English letter statistics."""
    return build_huffman_code(default_char_distribution().as_dict())


def encode_chars(text: str, book: HuffmanCodebook | None = None) -> BitString:
    book = book or default_char_codebook()
    codes = book.codes
    parts = []
    for pos, ch in enumerate(text):
        code = codes.get(ch)
        if code is None:
            raise AlphabetError(ch, pos)
        parts.append(code.bits)
    return BitString("".join(parts))


def decode_chars(bits: BitString, book: HuffmanCodebook | None = None) -> str:
    book = book or default_char_codebook()
    table = book._decode
    out = []
    start = 0
    s = bits.bits
    for end in range(1, len(s) + 1):
        sym = table.get(s[start:end])
        if sym is not None:
            out.append(sym)
            start = end
    if start != len(s):
        raise TruncatedStreamError(f"{len(s) - start} trailing bits do not form a codeword")
    return "".join(out)
