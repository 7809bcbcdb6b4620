"""English character statistics and the safety-message table."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .bitio import BitString
from .errors import (
    DuplicateAbbreviationError,
    DuplicateCodewordError,
    DuplicateMessageError,
    PrefixConflictError,
    PriorityTokenError,
    SchemaError,
)

ALPHABET = "abcdefghijklmnopqrstuvwxyz "

_ENGLISH_PROBS = (
    0.065174, 0.012425, 0.021734, 0.034984, 0.104144, 0.019788, 0.015861,
    0.049289, 0.055809, 0.000903, 0.005053, 0.033149, 0.020212, 0.056451,
    0.059630, 0.013765, 0.000861, 0.049756, 0.051576, 0.072936, 0.022513,
    0.008290, 0.017129, 0.001369, 0.014598, 0.000784, 0.191818,
)

PRIORITIES = ("P1", "P2", "P3")


@dataclass(frozen=True)
class CharDistribution:
    symbols: tuple[str, ...]
    probs: tuple[float, ...]

    def __post_init__(self):
        if len(self.symbols) != len(self.probs):
            raise ValueError("symbols and probs differ in length")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate symbols")
        if any(p <= 0 for p in self.probs):
            raise ValueError("probabilities must be strictly positive")

    def __getitem__(self, symbol: str) -> float:
        return self.probs[self.symbols.index(symbol)]

    def __len__(self):
        return len(self.symbols)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.symbols, self.probs))

    def normalized(self) -> tuple[float, ...]:
        total = sum(self.probs)
        return tuple(p / total for p in self.probs)


def default_char_distribution() -> CharDistribution:
    return CharDistribution(tuple(ALPHABET), _ENGLISH_PROBS)


@dataclass(frozen=True)
class MessageEntry:
    message: str
    abbreviation: str
    priority: str
    weight_num: int
    weight_den: int
    codeword: BitString

    @property
    def weight(self) -> Fraction:
        return Fraction(self.weight_num, self.weight_den)


@dataclass(frozen=True)
class MessageTable:
    entries: tuple[MessageEntry, ...]
    _by_message: dict = field(init=False, repr=False, compare=False)
    _by_abbrev: dict = field(init=False, repr=False, compare=False)
    _by_code: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "_by_message", {e.message: e for e in self.entries})
        object.__setattr__(self, "_by_abbrev", {e.abbreviation: e for e in self.entries})
        object.__setattr__(self, "_by_code", {e.codeword.bits: e for e in self.entries})

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def by_message(self, message: str) -> MessageEntry | None:
        return self._by_message.get(message)

    def by_abbreviation(self, abbreviation: str) -> MessageEntry | None:
        return self._by_abbrev.get(abbreviation)

    def by_codeword(self, bits: str) -> MessageEntry | None:
        return self._by_code.get(bits)

    @property
    def messages(self) -> list[str]:
        return [e.message for e in self.entries]


_ABBREV_RE = re.compile(r"[A-Z]{3}")
_WEIGHT_RE = re.compile(r"(\d+)/(\d+)")
_CODE_RE = re.compile(r"[01]+")


def _parse_row(line: str, lineno: int) -> MessageEntry:
    fields = line.split("\t")
    if len(fields) != 5:
        raise SchemaError(f"expected 5 tab-separated fields, got {len(fields)}", lineno)
    message, abbrev, priority, weight, code = fields
    if not message or any(c not in ALPHABET for c in message):
        raise SchemaError(f"message {message!r} is not over the lowercase/space alphabet", lineno)
    if not _ABBREV_RE.fullmatch(abbrev):
        raise SchemaError(f"abbreviation {abbrev!r} is not three uppercase letters", lineno)
    if priority not in PRIORITIES:
        raise PriorityTokenError(f"bad priority token {priority!r}", lineno)
    m = _WEIGHT_RE.fullmatch(weight)
    if not m or int(m.group(1)) == 0 or int(m.group(2)) == 0:
        raise SchemaError(f"weight {weight!r} is not a positive fraction n/d", lineno)
    if not _CODE_RE.fullmatch(code):
        raise SchemaError(f"codeword {code!r} is not a non-empty 0/1 string", lineno)
    return MessageEntry(message, abbrev, priority, int(m.group(1)), int(m.group(2)),
                        BitString(code))


def parse_message_table(text: str) -> MessageTable:
    entries = []
    linenos = []
    seen_msg, seen_abbrev, seen_code = {}, {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        e = _parse_row(line, lineno)
        if e.message in seen_msg:
            raise DuplicateMessageError(
                f"message {e.message!r} already defined on line {seen_msg[e.message]}", lineno)
        if e.abbreviation in seen_abbrev:
            raise DuplicateAbbreviationError(
                f"abbreviation {e.abbreviation!r} already defined on line "
                f"{seen_abbrev[e.abbreviation]}", lineno)
        if e.codeword.bits in seen_code:
            raise DuplicateCodewordError(
                f"codeword {e.codeword} already defined on line {seen_code[e.codeword.bits]}",
                lineno)
        seen_msg[e.message] = seen_abbrev[e.abbreviation] = seen_code[e.codeword.bits] = lineno
        entries.append(e)
        linenos.append(lineno)
    if not entries:
        raise SchemaError("table has no entries")
    conflict = find_prefix_conflict([e.codeword.bits for e in entries])
    if conflict:
        i, j = conflict
        raise PrefixConflictError(
            f"codeword {entries[i].codeword} is a prefix of {entries[j].codeword} "
            f"(line {linenos[j]})", linenos[i])
    return MessageTable(tuple(entries))


def load_message_table(source=None) -> MessageTable:
    """Load a message table from a path, or the embedded default when ``source`` is None."""
    if source is None:
        text = resources.files("v2vcodec").joinpath("data/messages.tsv").read_text("ascii")
    else:
        text = Path(source).read_text("ascii")
    return parse_message_table(text)


_DEFAULT_TABLE = None


def default_message_table() -> MessageTable:
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = load_message_table()
    return _DEFAULT_TABLE


def dump_message_table(table: MessageTable) -> str:
    lines = ["# message\tabbreviation\tpriority\tweight\tcodeword"]
    for e in table:
        lines.append(f"{e.message}\t{e.abbreviation}\t{e.priority}\t"
                     f"{e.weight_num}/{e.weight_den}\t{e.codeword}")
    return "\n".join(lines) + "\n"


def find_prefix_conflict(codes) -> tuple[int, int] | None:
    """Return indices (i, j) where codes[i] is a prefix of codes[j], if any."""
    order = sorted(range(len(codes)), key=lambda k: codes[k])
    # after lexicographic sort a prefix sorts immediately before some extension
    for a, b in zip(order, order[1:]):
        if codes[b].startswith(codes[a]):
            return a, b
    return None


def kraft_sum(lengths) -> Fraction:
    return sum((Fraction(1, 2 ** n) for n in lengths), Fraction(0))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list[CheckResult]
    kraft: Fraction

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def render(self) -> str:
        return "\n".join(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}"
                         for c in self.checks) + "\n"


def validate_message_table(table: MessageTable) -> ValidationReport:
    entries = list(table)
    codes = [e.codeword.bits for e in entries]
    checks = []

    conflict = find_prefix_conflict(codes)
    if conflict:
        i, j = conflict
        detail = f"{codes[i]} ({entries[i].message}) is a prefix of {codes[j]} ({entries[j].message})"
    else:
        detail = f"{len(codes)} codewords"
    checks.append(CheckResult("prefix-free", conflict is None, detail))

    kraft = kraft_sum(len(c) for c in codes)
    checks.append(CheckResult("kraft", kraft == 1, f"sum 2^-len = {kraft}"))

    def unique(name, values):
        dupes = sorted({v for v in values if values.count(v) > 1})
        checks.append(CheckResult(name, not dupes,
                                  f"duplicates: {', '.join(dupes)}" if dupes else "all distinct"))

    unique("abbreviation-unique", [e.abbreviation for e in entries])
    unique("message-unique", [e.message for e in entries])

    bad = [e.message for e in entries if not e.message or any(c not in ALPHABET for c in e.message)]
    checks.append(CheckResult("alphabet", not bad,
                              f"outside alphabet: {bad}" if bad else "lowercase letters and space only"))

    checks.append(_weight_check(entries))
    return ValidationReport(checks, kraft)


def _weight_check(entries) -> CheckResult:
    dens = {e.weight_den for e in entries}
    if len(dens) != 1:
        return CheckResult("weights", False, f"mixed denominators {sorted(dens)}")
    den = dens.pop()
    total = sum(e.weight_num for e in entries)
    if any(e.weight_num <= 0 for e in entries):
        return CheckResult("weights", False, "non-positive weight")
    if total != den:
        return CheckResult("weights", False, f"numerators sum to {total}, denominator is {den}")
    per_priority = {}
    for e in entries:
        per_priority.setdefault(e.priority, set()).add(e.weight_num)
    if any(len(v) > 1 for v in per_priority.values()):
        return CheckResult("weights", False, "weights differ within a priority class")
    levels = [per_priority[p].copy().pop() for p in PRIORITIES if p in per_priority]
    if levels != sorted(levels, reverse=True):
        return CheckResult("weights", False, "a lower priority class outweighs a higher one")
    return CheckResult("weights", True, f"numerators sum to {den}")
