"""Integer arithmetic coder over a static character model.

Classic low/high coder with E1/E2 (top-bit match) and E3 (middle straddle)
renormalisation. The message length travels in a 16-bit header so no
end-of-message symbol is needed. Termination emits a single '1' bit: after
renormalisation low < HALF <= high, so the point HALF lies inside the
final interval and the decoder reads zeros past the end of the payload.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import accumulate

from .bitio import BitCursor, BitString
from .corpus import CharDistribution, default_char_distribution
from .errors import AlphabetError, MalformedFrameError, TruncatedStreamError

PRECISION = 32
DEFAULT_SCALE = 65536
COUNT_BITS = 16

_FULL = (1 << PRECISION) - 1
_HALF = 1 << (PRECISION - 1)
_QUARTER = 1 << (PRECISION - 2)
_THREE_QUARTERS = 3 * _QUARTER
MAX_TOTAL = 1 << (PRECISION - 2)


@dataclass(frozen=True)
class FrequencyModel:
    alphabet: tuple[str, ...]
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.alphabet) != len(self.counts) or not self.alphabet:
            raise ValueError("alphabet and counts must be non-empty and equally long")
        if any(c < 1 for c in self.counts):
            raise ValueError("every count must be at least 1")
        if self.total > MAX_TOTAL:
            raise ValueError(f"total {self.total} exceeds 2^{PRECISION - 2}")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.alphabet)})

    @property
    def cumulative(self) -> tuple[int, ...]:
        """Prefix sums, starting at 0 and ending at ``total``."""
        return (0, *accumulate(self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def index(self, symbol) -> int | None:
        return self._index.get(symbol)


def quantize_distribution(dist: CharDistribution, scale: int = DEFAULT_SCALE) -> FrequencyModel:
    if scale < len(dist):
        raise ValueError("scale must be at least the alphabet size")
    counts = tuple(max(1, round(p * scale)) for p in dist.probs)
    if sum(counts) > MAX_TOTAL:
        raise ValueError(f"scale {scale} too large for {PRECISION}-bit registers")
    return FrequencyModel(tuple(dist.symbols), counts)


_DEFAULT_MODEL = None


def default_model() -> FrequencyModel:
    global _DEFAULT_MODEL
    if _DEFAULT_MODEL is None:
        _DEFAULT_MODEL = quantize_distribution(default_char_distribution())
    return _DEFAULT_MODEL


@dataclass(frozen=True)
class ArithmeticFrame:
    char_count: int
    payload: BitString

    def to_bits(self) -> BitString:
        return BitString.from_uint(self.char_count, COUNT_BITS) + self.payload

    @classmethod
    def from_bits(cls, bits: BitString) -> ArithmeticFrame:
        cur = BitCursor(bits)
        try:
            count = cur.read_uint(COUNT_BITS)
        except TruncatedStreamError:
            raise MalformedFrameError("arithmetic frame shorter than its 16-bit header") from None
        return cls(count, BitString(bits.bits[COUNT_BITS:]))


def ac_encode(text: str, model: FrequencyModel | None = None) -> ArithmeticFrame:
    model = model or default_model()
    if len(text) >= 1 << COUNT_BITS:
        raise ValueError(f"message longer than {(1 << COUNT_BITS) - 1} symbols")
    if not text:
        return ArithmeticFrame(0, BitString())
    cum = model.cumulative
    total = model.total
    symbols = []
    for pos, ch in enumerate(text):
        i = model.index(ch)
        if i is None:
            raise AlphabetError(ch, pos)
        symbols.append(i)

    out = []
    low, high, pending = 0, _FULL, 0
    for i in symbols:
        span = high - low + 1
        high = low + span * cum[i + 1] // total - 1
        low = low + span * cum[i] // total
        while True:
            if high < _HALF:
                out.append("0" + "1" * pending)
                pending = 0
            elif low >= _HALF:
                out.append("1" + "0" * pending)
                pending = 0
                low -= _HALF
                high -= _HALF
            elif low >= _QUARTER and high < _THREE_QUARTERS:
                pending += 1
                low -= _QUARTER
                high -= _QUARTER
            else:
                break
            low <<= 1
            high = (high << 1) | 1
    # the pending bits would all be '0' after this '1'; zero padding supplies them
    out.append("1")
    return ArithmeticFrame(len(text), BitString("".join(out)))


def ac_decode(frame: ArithmeticFrame, model: FrequencyModel | None = None) -> str:
    model = model or default_model()
    n = frame.char_count
    bits = frame.payload.bits
    if n == 0:
        if bits:
            raise MalformedFrameError("payload present for an empty message")
        return ""
    if not bits:
        raise TruncatedStreamError(f"empty payload for {n} symbols")
    cum = model.cumulative
    total = model.total
    alphabet = model.alphabet
    nbits = len(bits)

    # zero padding past the payload end
    window = bits[:PRECISION].ljust(PRECISION, "0")
    code = int(window, 2)
    pos = PRECISION

    def next_bit():
        nonlocal pos
        b = 1 if pos < nbits and bits[pos] == "1" else 0
        pos += 1
        return b

    # mirror the encoder's output count to know the exact payload length
    emitted, pending = 0, 0
    low, high = 0, _FULL
    out = []
    for _ in range(n):
        span = high - low + 1
        value = ((code - low + 1) * total - 1) // span
        i = bisect_right(cum, value) - 1
        out.append(alphabet[i])
        high = low + span * cum[i + 1] // total - 1
        low = low + span * cum[i] // total
        while True:
            if high < _HALF:
                emitted += 1 + pending
                pending = 0
            elif low >= _HALF:
                emitted += 1 + pending
                pending = 0
                low -= _HALF
                high -= _HALF
                code -= _HALF
            elif low >= _QUARTER and high < _THREE_QUARTERS:
                pending += 1
                low -= _QUARTER
                high -= _QUARTER
                code -= _QUARTER
            else:
                break
            low <<= 1
            high = (high << 1) | 1
            code = (code << 1) | next_bit()

    expected = emitted + 1
    if nbits < expected:
        raise TruncatedStreamError(f"payload has {nbits} bits, {expected} required")
    if nbits > expected:
        raise MalformedFrameError(f"payload has {nbits - expected} trailing bits")
    return "".join(out)
