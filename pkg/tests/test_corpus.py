import math
from fractions import Fraction

import pytest

from conftest import TABLE_I, TABLE_II
from v2vcodec.bitio import BitString
from v2vcodec.corpus import (
    ALPHABET,
    MessageEntry,
    MessageTable,
    default_char_distribution,
    default_message_table,
    dump_message_table,
    load_message_table,
    parse_message_table,
    validate_message_table,
)
from v2vcodec.errors import (
    DuplicateAbbreviationError,
    DuplicateCodewordError,
    DuplicateMessageError,
    PrefixConflictError,
    PriorityTokenError,
    SchemaError,
)


def make_table(codes):
    entries = [MessageEntry(f"m {ALPHABET[i]}", f"A{chr(65 + i)}A", "P1", 1, len(codes), BitString(c))
               for i, c in enumerate(codes)]
    return MessageTable(tuple(entries))


class TestCharDistribution:
    def test_lookups(self):
        d = default_char_distribution()
        assert d["e"] == 0.104144
        assert d[" "] == 0.191818

    def test_matches_table_i(self):
        d = default_char_distribution()
        assert d.symbols == tuple("abcdefghijklmnopqrstuvwxyz ")
        assert d.probs == tuple(TABLE_I)

    def test_sum_close_to_one(self):
        assert math.isclose(math.fsum(default_char_distribution().probs), 1.0, abs_tol=1e-5)

    def test_invariants(self):
        d = default_char_distribution()
        assert len(d) == 27 and len(set(d.symbols)) == 27
        assert all(p > 0 for p in d.probs)


class TestDefaultTable:
    def test_rows_match_paper(self):
        table = default_message_table()
        got = [(e.message, e.abbreviation, e.priority, e.weight_num, e.codeword.bits)
               for e in table]
        assert got == TABLE_II
        assert all(e.weight_den == 1075 for e in table)

    def test_left_turn_ahead(self):
        e = default_message_table().by_message("left turn ahead")
        assert (e.abbreviation, e.priority, e.weight, e.codeword) == (
            "LTA", "P2", Fraction(50, 1075), BitString("00111"))

    def test_ambulance_codeword(self):
        assert default_message_table().by_message("leave way for the ambulance").codeword == BitString("011")

    def test_length_multiset(self):
        lengths = sorted(len(e.codeword) for e in default_message_table())
        assert lengths == [3] * 5 + [5] * 9 + [6] * 6

    def test_priority_partition(self):
        counts = {}
        for e in default_message_table():
            counts[e.priority] = counts.get(e.priority, 0) + 1
        assert counts == {"P1": 5, "P2": 8, "P3": 7}

    def test_weight_numerators(self):
        table = default_message_table()
        assert sum(e.weight_num for e in table) == 1075
        assert all(e.weight_num == {"P1": 100, "P2": 50, "P3": 25}[e.priority] for e in table)

    def test_validation_passes(self):
        report = validate_message_table(default_message_table())
        assert report.ok
        assert report.kraft == 5 * Fraction(1, 8) + 9 * Fraction(1, 32) + 6 * Fraction(1, 64) == 1

    def test_dump_roundtrip(self):
        table = default_message_table()
        assert parse_message_table(dump_message_table(table)) == table


class TestValidation:
    def test_prefix_failure(self):
        report = validate_message_table(make_table(["0", "01"]))
        assert not report["prefix-free"].passed

    def test_complete_code(self):
        report = validate_message_table(make_table(["0", "10", "11"]))
        assert report["prefix-free"].passed
        assert report["kraft"].passed and report.kraft == 1

    def test_incomplete_code_fails_kraft(self):
        report = validate_message_table(make_table(["0", "10"]))
        assert not report["kraft"].passed
        assert report.kraft == Fraction(3, 4)

    def test_bad_weights(self):
        entries = [MessageEntry("a", "AAA", "P1", 1, 3, BitString("0")),
                   MessageEntry("b", "BBB", "P2", 1, 3, BitString("1"))]
        assert not validate_message_table(MessageTable(tuple(entries)))["weights"].passed

    def test_bad_alphabet(self):
        entries = [MessageEntry("Stop!", "AAA", "P1", 1, 2, BitString("0")),
                   MessageEntry("b", "BBB", "P1", 1, 2, BitString("1"))]
        assert not validate_message_table(MessageTable(tuple(entries)))["alphabet"].passed


class TestLoader:
    def test_default_equals_file(self, write_table):
        assert load_message_table(write_table(TABLE_II)) == default_message_table()

    def test_comments_and_blank_lines(self, write_table):
        text = "# header\n\nhello there\tHLT\tP1\t1/2\t0\n# mid\nbye\tBYE\tP1\t1/2\t1\n"
        assert len(load_message_table(write_table(text))) == 2

    def test_duplicate_abbreviation(self, write_table):
        rows = list(TABLE_II)
        rows[1] = ("right turn ahead", "LTA", "P2", 50, "00110")
        with pytest.raises(DuplicateAbbreviationError) as exc:
            load_message_table(write_table(rows))
        assert exc.value.row == 2

    def test_duplicate_message(self, write_table):
        rows = list(TABLE_II) + [("left turn ahead", "XYZ", "P3", 25, "1111111")]
        with pytest.raises(DuplicateMessageError):
            load_message_table(write_table(rows))

    def test_duplicate_codeword(self, write_table):
        rows = list(TABLE_II)
        rows[1] = ("right turn ahead", "RTA", "P2", 50, "00111")
        with pytest.raises(DuplicateCodewordError):
            load_message_table(write_table(rows))

    def test_prefix_conflict(self, write_table):
        rows = list(TABLE_II)
        rows[0] = ("left turn ahead", "LTA", "P2", 50, "10")
        with pytest.raises(PrefixConflictError) as exc:
            load_message_table(write_table(rows))
        assert exc.value.row == 1

    def test_bad_priority(self, write_table):
        rows = list(TABLE_II)
        rows[4] = ("brakes applied", "BKA", "P4", 100, "111")
        with pytest.raises(PriorityTokenError) as exc:
            load_message_table(write_table(rows))
        assert exc.value.row == 5

    @pytest.mark.parametrize("line", [
        "too\tfew\tfields\n",
        "Upper Case\tUPC\tP1\t1/1\t0\n",
        "ok\tLONG\tP1\t1/1\t0\n",
        "ok\tOKK\tP1\tone half\t0\n",
        "ok\tOKK\tP1\t1/1\t012\n",
        "ok\tOKK\tP1\t0/1\t0\n",
    ])
    def test_schema_errors(self, write_table, line):
        with pytest.raises(SchemaError) as exc:
            load_message_table(write_table(line))
        assert exc.value.row == 1

    def test_empty_document(self, write_table):
        with pytest.raises(SchemaError):
            load_message_table(write_table("# nothing\n"))
