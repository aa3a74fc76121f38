import re
from pathlib import Path
from types import SimpleNamespace

import pytest

from framelex import (
    DisplayOptions,
    FrameLexicon,
    Store,
    render_fulltext_sentence,
    render_lexicographic_sentence,
)

DATA_DIR = Path(__file__).resolve().parent / "data" / "fixture17"
GOLDEN_DIR = Path(__file__).resolve().parent / "data" / "golden"

MARKER_ROW = re.compile(r"^[-*^ ]+$")
SUPPORT_LAYERS = ("Verb", "Noun", "Adj", "Adv", "Prep", "Scon", "Art")


def wrap_oracle(text, width):
    """Independent re-derivation of the wrap: (offset, chunk) pairs."""
    segments = []
    cur = ""
    for run in re.findall(r"\S+|\s+", text):
        while len(run) > width:
            if cur:
                segments.append(cur)
                cur = ""
            segments.append(run[:width])
            run = run[width:]
        if cur and len(cur) + len(run) > width:
            segments.append(cur)
            cur = run
        else:
            cur += run
    if cur or not segments:
        segments.append(cur)
    out, offset = [], 0
    for chunk in segments:
        out.append((offset, chunk))
        offset += len(chunk)
    return out


def marker_columns(rendered, text, width):
    """Absolute column sets per marker char, read back from the output."""
    lines = rendered.split("\n")
    starts = [i for i, line in enumerate(lines) if line.startswith("[text] ")]
    assert len(starts) == 1
    body = lines[starts[0] + 2 :]
    blocks, block = [], []
    for line in body:
        if line == "":
            if block:
                blocks.append(block)
            block = []
        else:
            block.append(line)
    if block:
        blocks.append(block)
    segments = wrap_oracle(text, width)
    assert len(blocks) == len(segments)
    columns = {"-": set(), "*": set(), "^": set()}
    for (offset, chunk), block in zip(segments, blocks):
        assert block[0] == chunk.rstrip()
        for line in block[1:]:
            if not MARKER_ROW.match(line):
                continue
            assert len(line) <= len(chunk)
            for col, char in enumerate(line):
                if char != " ":
                    columns[char].add(offset + col)
    return columns


def span_columns(spans):
    cols = set()
    for span in spans:
        start, end = span[0], span[1]
        cols.update(range(start, end + 1))
    return cols


def check_exemplar_alignment(sent, width):
    rendered = render_lexicographic_sentence(sent, DisplayOptions(wrap_width=width))
    got = marker_columns(rendered, sent.text, width)
    support = []
    for layer in SUPPORT_LAYERS:
        support.extend(sent.get(layer) or [])
    assert got["*"] == span_columns(sent.Target)
    assert got["-"] == span_columns(sent.FE[0])
    assert got["^"] == span_columns(support)


def check_fulltext_alignment(sent, width):
    rendered = render_fulltext_sentence(sent, DisplayOptions(wrap_width=width))
    got = marker_columns(rendered, sent.text, width)
    targets = []
    for aset in sent.annotationSet[1:]:
        targets.extend(aset.get("Target") or [])
    assert got["*"] == span_columns(targets)
    assert got["-"] == set()
    assert got["^"] == set()


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def store():
    return Store(DATA_DIR)


@pytest.fixture
def lexicon():
    # Function scope: propagation tests mutate FE records in place.
    return FrameLexicon.open(DATA_DIR)


@pytest.fixture
def golden():
    def load(name):
        return (GOLDEN_DIR / name).read_text()

    return load


@pytest.fixture
def alignment():
    return SimpleNamespace(
        exemplar=check_exemplar_alignment,
        fulltext=check_fulltext_alignment,
    )


_ACCEPTANCE_RX = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One verdict line per acceptance criterion, independent of -s."""
    results = {}
    for outcome in ("passed", "failed", "error", "skipped"):
        for report in terminalreporter.stats.get(outcome, []):
            m = _ACCEPTANCE_RX.search(getattr(report, "nodeid", ""))
            if m is None:
                continue
            if outcome == "passed" and getattr(report, "when", "call") != "call":
                continue
            verdict = {"passed": "PASS", "skipped": "SKIP"}.get(outcome, "FAIL")
            results.setdefault(int(m.group(1)), verdict)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(f"ACCEPTANCE {number:02d} {results[number]}")
