"""Lossless source coding for short vehicle-to-vehicle safety messages."""

from .bitio import BitCursor, BitString, append_bits, read_bits
from .corpus import (
    ALPHABET,
    CharDistribution,
    MessageEntry,
    MessageTable,
    default_char_distribution,
    default_message_table,
    load_message_table,
    validate_message_table,
)
from .huffman import HuffmanCodebook, build_huffman_code, decode_chars, encode_chars
from .arithmetic import ArithmeticFrame, FrequencyModel, ac_decode, ac_encode, quantize_distribution
from .lzw import LzwFrame, lzw_decode, lzw_encode
from .message_codec import (
    PriorityWeights,
    abbrev_decode,
    abbrev_encode,
    prob_decode,
    prob_encode,
    rebuild_message_code,
)
from .bench import SizeRecord, TimingRecord, char_entropy, compression_ratio, measure_codec, run_benchmark
from .registry import CODECS, get_codec

__version__ = "0.1.0"
from .errors import (
    AlphabetError,
    CodecError,
    MalformedFrameError,
    TableError,
    TruncatedStreamError,
    UnknownAbbreviationError,
    UnknownCodewordError,
    UnknownMessageError,
)
