"""Command-line front end.

Frames on stdin/stdout are: 1-byte codec id, 32-bit big-endian payload bit
length, then the payload bits packed MSB-first and zero padded.
"""
from __future__ import annotations

import argparse
import struct
import sys
from dataclasses import dataclass

from .bench import run_benchmark
from .bitio import BitString
from .corpus import load_message_table, validate_message_table
from .errors import CodecError, MalformedFrameError, TableError
from .registry import CODEC_NAMES, get_codec, parse_codec_list

_HEADER = struct.Struct(">BI")


@dataclass(frozen=True)
class WireFrame:
    codec_id: int
    payload: BitString

    def pack(self) -> bytes:
        data, nbits = self.payload.to_bytes()
        return _HEADER.pack(self.codec_id, nbits) + data

    @classmethod
    def unpack(cls, raw: bytes) -> WireFrame:
        if len(raw) < _HEADER.size:
            raise MalformedFrameError(f"frame of {len(raw)} bytes is shorter than its header")
        codec_id, nbits = _HEADER.unpack_from(raw)
        body = raw[_HEADER.size:]
        if len(body) != (nbits + 7) // 8:
            raise MalformedFrameError(
                f"payload is {len(body)} bytes but bit length {nbits} needs {(nbits + 7) // 8}")
        return cls(codec_id, BitString.from_bytes(body, nbits))


def encode_frame(codec_name: str, message: str, table=None) -> bytes:
    codec = get_codec(codec_name)
    encode, _ = codec.bind(table)
    return WireFrame(codec.codec_id, encode(message)).pack()


def decode_frame(raw: bytes, table=None) -> str:
    frame = WireFrame.unpack(raw)
    _, decode = get_codec(frame.codec_id).bind(table)
    return decode(frame.payload)


def _load_table(path):
    return load_message_table(path) if path else None


def cmd_encode(args) -> int:
    message = args.message if args.message is not None else args.text
    if message is None:
        print("error: no message given", file=sys.stderr)
        return 2
    sys.stdout.buffer.write(encode_frame(args.codec, message, _load_table(args.table)))
    sys.stdout.buffer.flush()
    return 0


def cmd_decode(args) -> int:
    raw = sys.stdin.buffer.read()
    print(decode_frame(raw, _load_table(args.table)))
    return 0


def cmd_bench(args) -> int:
    report = run_benchmark(parse_codec_list(args.codecs), _load_table(args.table),
                           args.reps, messages=args.message or None)
    text = report.to_csv()
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    print(f"# {len(report.rows)} rows; {report.environment}", file=sys.stderr)
    return 0 if report.ok else 2


def cmd_validate(args) -> int:
    try:
        table = load_message_table(args.path)
    except OSError as exc:
        print(f"error: cannot read table {args.path}: {exc.strerror or exc}", file=sys.stderr)
        return 2
    except TableError as exc:
        print(f"error: {args.path or 'default table'}: {exc}", file=sys.stderr)
        return 2
    report = validate_message_table(table)
    sys.stdout.write(report.render())
    return 0 if report.ok else 1


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="v2vcodec", description="Source coding for vehicle-to-vehicle safety messages.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode one message to a binary frame on stdout")
    p.add_argument("text", nargs="?", help="message text")
    p.add_argument("--message", help="message text (alternative to the positional argument)")
    p.add_argument("--codec", required=True, help=f"one of: {', '.join(CODEC_NAMES)}")
    p.add_argument("--table", help="message table file (default: built-in table)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a binary frame from stdin")
    p.add_argument("--table", help="message table file (default: built-in table)")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("bench", help="compare codecs; writes a CSV report")
    p.add_argument("--codecs", default="all", help="comma-separated codec names or 'all'")
    p.add_argument("--reps", type=_positive_int, default=1000)
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.add_argument("--message", action="append", help="restrict to this message (repeatable)")
    p.add_argument("--table", help="message table file (default: built-in table)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("validate", help="check a message table")
    p.add_argument("path", nargs="?", help="table file (default: built-in table)")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CodecError, TableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
