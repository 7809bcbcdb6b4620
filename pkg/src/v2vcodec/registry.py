"""The five codecs behind one encode/decode-to-bits interface."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import arithmetic, huffman, lzw, message_codec
from .bitio import BitString
from .corpus import MessageTable, default_message_table
from .errors import UnknownCodecError


@dataclass(frozen=True)
class Codec:
    name: str
    codec_id: int
    encode: Callable[[str, MessageTable], BitString]
    decode: Callable[[BitString, MessageTable], str]
    message_level: bool

    def bind(self, table: MessageTable | None = None):
        """Return (encode, decode) closures with the table fixed."""
        table = table or default_message_table()
        enc, dec = self.encode, self.decode
        return (lambda text: enc(text, table)), (lambda bits: dec(bits, table))


CODECS = (
    Codec("huffman", 1,
          lambda text, _t: huffman.encode_chars(text),
          lambda bits, _t: huffman.decode_chars(bits),
          False),
    Codec("arithmetic", 2,
          lambda text, _t: arithmetic.ac_encode(text).to_bits(),
          lambda bits, _t: arithmetic.ac_decode(arithmetic.ArithmeticFrame.from_bits(bits)),
          False),
    Codec("lzw", 3,
          lambda text, _t: lzw.lzw_encode(text).to_bits(),
          lambda bits, _t: lzw.lzw_decode(lzw.LzwFrame.from_bits(bits)),
          False),
    Codec("abbrev", 4, message_codec.abbrev_encode, message_codec.abbrev_decode, True),
    Codec("probability", 5, message_codec.prob_encode, message_codec.prob_decode, True),
)

CODEC_NAMES = tuple(c.name for c in CODECS)
_BY_NAME = {c.name: c for c in CODECS}
_BY_ID = {c.codec_id: c for c in CODECS}
_ALIASES = {"huffman-char": "huffman", "abbreviation": "abbrev", "prob": "probability"}


def get_codec(key) -> Codec:
    if isinstance(key, int):
        codec = _BY_ID.get(key)
    else:
        codec = _BY_NAME.get(_ALIASES.get(key, key))
    if codec is None:
        raise UnknownCodecError(f"unknown codec {key!r}")
    return codec


def parse_codec_list(spec: str) -> list[Codec]:
    if spec.strip() == "all":
        return list(CODECS)
    return [get_codec(name.strip()) for name in spec.split(",") if name.strip()]
