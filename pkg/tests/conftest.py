import pytest

# Table II transcribed independently of the package data file:
# (message, abbreviation, priority, weight numerator over 1075, codeword)
TABLE_II = [
    ("left turn ahead", "LTA", "P2", 50, "00111"),
    ("right turn ahead", "RTA", "P2", 50, "00110"),
    ("emergency ahead", "EGA", "P1", 100, "101"),
    ("emergency braking", "EGB", "P1", 100, "100"),
    ("brakes applied", "BKA", "P1", 100, "111"),
    ("lane change alert", "LCA", "P2", 50, "00001"),
    ("queue warning", "QEW", "P3", 25, "001001"),
    ("hump warning", "HMW", "P3", 25, "001000"),
    ("pedestrian crossing ahead", "PCA", "P1", 100, "110"),
    ("work in progress ahead", "WPA", "P3", 25, "001011"),
    ("leave way for the ambulance", "LWA", "P1", 100, "011"),
    ("intersection ahead", "ISA", "P2", 50, "00000"),
    ("taking left turn", "TLT", "P2", 50, "00011"),
    ("taking right turn", "TRT", "P2", 50, "00010"),
    ("road condition not good", "RNG", "P3", 25, "001010"),
    ("allow overtake", "AWO", "P3", 25, "010101"),
    ("allowed overtake", "AEO", "P3", 25, "010100"),
    ("searching for parking", "SFP", "P3", 25, "01011"),
    ("taking u turn", "TUT", "P2", 50, "01001"),
    ("vehicle turning in front", "VTF", "P2", 50, "01000"),
]

# Table I, letters a..z then space
TABLE_I = [
    0.065174, 0.012425, 0.021734, 0.034984, 0.104144, 0.019788, 0.015861,
    0.049289, 0.055809, 0.000903, 0.005053, 0.033149, 0.020212, 0.056451,
    0.059630, 0.013765, 0.000861, 0.049756, 0.051576, 0.072936, 0.022513,
    0.008290, 0.017129, 0.001369, 0.014598, 0.000784, 0.191818,
]

MESSAGES = [row[0] for row in TABLE_II]
FIGURE_MESSAGES = ["leave way for the ambulance", "left turn ahead", "road condition not good"]


def table_text(rows):
    return "".join(f"{m}\t{a}\t{p}\t{w}/1075\t{c}\n" for m, a, p, w, c in rows)


@pytest.fixture
def write_table(tmp_path):
    def _write(rows_or_text, name="table.tsv"):
        text = rows_or_text if isinstance(rows_or_text, str) else table_text(rows_or_text)
        path = tmp_path / name
        path.write_text(text)
        return path
    return _write


ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    criterion = item.get_closest_marker("criterion")
    if criterion and rep.when == "call":
        num, title = criterion.args
        status = "PASS" if rep.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {num}: {title}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
