"""Compression-ratio and timing comparison across codecs and messages."""
from __future__ import annotations

import csv
import io
import math
import platform
import time
from dataclasses import dataclass
from fractions import Fraction

from .corpus import CharDistribution, MessageTable, default_message_table
from .errors import CodecError, CodecFaultError, UndefinedRatioError
from .registry import CODECS, Codec

CSV_HEADER = ("codec", "message", "priority", "uncompressed_bits", "compressed_bits",
              "ratio", "encode_us", "decode_us", "ratio_per_ms")


@dataclass(frozen=True)
class SizeRecord:
    uncompressed_bits: int
    compressed_bits: int

    @classmethod
    def for_message(cls, message: str, compressed_bits: int) -> SizeRecord:
        return cls(8 * len(message), compressed_bits)


def compression_ratio(sizes: SizeRecord) -> Fraction:
    if sizes.compressed_bits <= 0:
        raise UndefinedRatioError("compression ratio undefined for an empty compressed size")
    return Fraction(sizes.uncompressed_bits, sizes.compressed_bits)


@dataclass(frozen=True)
class TimingRecord:
    encode_time: float
    decode_time: float
    repetitions: int

    @property
    def encode_mean(self) -> float:
        return self.encode_time / self.repetitions

    @property
    def decode_mean(self) -> float:
        return self.decode_time / self.repetitions


def measure_codec(codec: Codec, message: str, repetitions: int,
                  table: MessageTable | None = None) -> TimingRecord:
    """Time ``repetitions`` encode and decode calls, checking every roundtrip.

    One untimed warm-up pass runs first.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    encode, decode = codec.bind(table)
    clock = time.perf_counter
    bits = encode(message)
    if decode(bits) != message:
        raise CodecFaultError(f"{codec.name} failed to roundtrip {message!r}")
    enc_total = dec_total = 0.0
    for _ in range(repetitions):
        t0 = clock()
        bits = encode(message)
        t1 = clock()
        decoded = decode(bits)
        t2 = clock()
        enc_total += t1 - t0
        dec_total += t2 - t1
        if decoded != message:
            raise CodecFaultError(f"{codec.name} failed to roundtrip {message!r}")
    return TimingRecord(enc_total, dec_total, repetitions)


@dataclass
class BenchRow:
    codec: str
    message: str
    priority: str
    sizes: SizeRecord | None = None
    ratio: Fraction | None = None
    timing: TimingRecord | None = None
    error: str | None = None

    @property
    def ratio_per_ms(self) -> float | None:
        if self.ratio is None or self.timing is None:
            return None
        ms = (self.timing.encode_mean + self.timing.decode_mean) * 1e3
        return float(self.ratio) / ms if ms > 0 else math.inf

    def csv_fields(self) -> list[str]:
        if self.error is not None:
            return [self.codec, self.message, self.priority, "", "", f"ERROR: {self.error}", "", "", ""]
        t = self.timing
        return [
            self.codec, self.message, self.priority,
            str(self.sizes.uncompressed_bits), str(self.sizes.compressed_bits),
            f"{float(self.ratio):.6g}",
            f"{t.encode_mean * 1e6:.4f}", f"{t.decode_mean * 1e6:.4f}",
            f"{self.ratio_per_ms:.6g}",
        ]


@dataclass
class BenchReport:
    rows: list[BenchRow]
    environment: str

    @property
    def ok(self) -> bool:
        return all(r.error is None for r in self.rows)

    def row(self, codec: str, message: str) -> BenchRow:
        for r in self.rows:
            if r.codec == codec and r.message == message:
                return r
        raise KeyError((codec, message))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow(r.csv_fields())
        return buf.getvalue()


def environment_descriptor() -> str:
    return (f"{platform.python_implementation()} {platform.python_version()} on "
            f"{platform.system()} {platform.machine()} ({platform.processor() or 'unknown cpu'})")


def run_benchmark(codecs=None, table: MessageTable | None = None, repetitions: int = 1000,
                  messages=None) -> BenchReport:
    codecs = list(codecs) if codecs is not None else list(CODECS)
    table = table or default_message_table()
    if messages is None:
        entries = list(table)
    else:
        entries = []
        for m in messages:
            e = table.by_message(m)
            entries.append(e if e is not None else m)
    if not codecs or not entries:
        raise ValueError("need at least one codec and one message")
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")

    rows = []
    for codec in codecs:
        encode, _ = codec.bind(table)
        for e in entries:
            message, priority = (e, "") if isinstance(e, str) else (e.message, e.priority)
            row = BenchRow(codec.name, message, priority)
            try:
                row.sizes = SizeRecord.for_message(message, len(encode(message)))
                row.ratio = compression_ratio(row.sizes)
                row.timing = measure_codec(codec, message, repetitions, table)
            except (CodecError, ValueError) as exc:
                row.error = f"{type(exc).__name__}: {exc}"
            rows.append(row)
    return BenchReport(rows, environment_descriptor())


def char_entropy(dist: CharDistribution) -> float:
    return -sum(p * math.log2(p) for p in dist.normalized())
