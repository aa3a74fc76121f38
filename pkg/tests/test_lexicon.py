import random
import re
import xml.etree.ElementTree as ET

import pytest

from framelex import open_lexicon
from framelex.errors import LookupFailure, PatternError


def index_pairs(data_dir, filename, tag):
    """(ID, name) rows read directly off an index file, bypassing the library."""
    root = ET.parse(data_dir / filename).getroot()
    pairs = []
    for elt in root.iter():
        if elt.tag.split("}")[-1] == tag:
            pairs.append((int(elt.get("ID")), elt.get("name")))
    return pairs


def test_frame_by_name_id_and_string_id(lexicon):
    by_name = lexicon.frame("Revenge")
    assert by_name.ID == 347
    assert lexicon.frame(347) is by_name


def test_frame_unknown_name(lexicon):
    with pytest.raises(LookupFailure):
        lexicon.frame("NoSuchFrame")


def test_frames_all_sorted_by_id(lexicon, data_dir):
    frames = lexicon.frames()
    ids = [f.ID for f in frames]
    assert ids == sorted(ids)
    assert len(frames) == len(index_pairs(data_dir, "frameIndex.xml", "frame"))


def test_frames_pattern_against_raw_index(lexicon, data_dir):
    pairs = index_pairs(data_dir, "frameIndex.xml", "frame")
    for pattern in ["(?i)creat", "^R", "e$", "_", "Revenge", "nomatch^"]:
        got = {f.ID for f in lexicon.frames(pattern)}
        rx = re.compile(pattern)
        want = {fid for fid, name in pairs if rx.search(name)}
        assert got == want, pattern


def test_frames_bad_pattern(lexicon):
    with pytest.raises(PatternError):
        lexicon.frames("(unclosed")


def test_frame_ids_and_names_reads_no_frame_files(lexicon):
    mapping = lexicon.frame_ids_and_names()
    assert mapping[347] == "Revenge"
    assert len(mapping) == 10
    assert lexicon.store.fileAccessLog == ["frameIndex.xml"]


def test_frame_ids_and_names_pattern(lexicon):
    assert lexicon.frame_ids_and_names("(?i)creat") == {
        268: "Cooking_creation",
        1658: "Create_physical_artwork",
    }


def test_lu_by_id(lexicon):
    lu = lexicon.lu(6067)
    assert lu.name == "revenge.n"
    assert lu.frame.name == "Revenge"


def test_lu_unknown_id(lexicon):
    with pytest.raises(LookupFailure):
        lexicon.lu(1)


def test_lus_pattern_against_raw_index(lexicon, data_dir):
    pairs = index_pairs(data_dir, "luIndex.xml", "lu")
    for pattern in [r".+en\.v", r"\.n$", "revenge", "^get", "(?i)RE"]:
        got = [lu.ID for lu in lexicon.lus(pattern)]
        rx = re.compile(pattern)
        want = sorted(fid for fid, name in pairs if rx.search(name))
        assert got == want, pattern


def test_lus_loads_only_owning_frames(lexicon):
    lexicon.lus(r"^awaken\.v$")
    frame_reads = [p for p in lexicon.store.fileAccessLog if p.startswith("frame/")]
    assert frame_reads == ["frame/Waking_up.xml"]


def test_lus_frame_restriction(lexicon):
    ids = {lu.ID for lu in lexicon.lus(r"\.v$", frame="Revenge")}
    assert ids == {6056, 6065, 6066, 6075, 10003}
    assert {lu.ID for lu in lexicon.lus(frame=347)} == {
        lu.ID for lu in lexicon.lus(frame="^Revenge$")
    }


def test_frames_by_lemma(lexicon):
    names = [f.name for f in lexicon.frames_by_lemma(r"(?i)^bake")]
    assert names == ["Cooking_creation"]
    assert lexicon.frames_by_lemma(r"^perambulate$") == []


def test_fes_global_and_restricted(lexicon):
    all_time = lexicon.fes("^Time$")
    assert len(all_time) == 7
    assert {fe.name for fe in all_time} == {"Time"}
    only = lexicon.fes("^Time$", frame="Revenge")
    assert [fe.ID for fe in only] == [3021]
    assert only[0].frame.name == "Revenge"


def test_fes_without_pattern_lists_everything(lexicon):
    assert len(lexicon.fes()) == 45


def test_help_summary_mentions_each_operation(lexicon):
    text = lexicon.help_summary()
    for op in ("frame", "frames", "lu", "lus", "fes", "annotations", "semtypes"):
        assert re.search(rf"\b{op}\b", text), op


def test_random_patterns_match_brute_force(lexicon, data_dir):
    frame_pairs = index_pairs(data_dir, "frameIndex.xml", "frame")
    lu_pairs = index_pairs(data_dir, "luIndex.xml", "lu")
    rng = random.Random(991)
    alphabet = "aeinorstv_."
    for _ in range(60):
        core = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 3)))
        pattern = rng.choice(["", "(?i)"]) + rng.choice(["", "^"]) + re.escape(core)
        rx = re.compile(pattern)
        assert {f.ID for f in lexicon.frames(pattern)} == {
            i for i, n in frame_pairs if rx.search(n)
        }, pattern
        assert {lu.ID for lu in lexicon.lus(pattern)} == {
            i for i, n in lu_pairs if rx.search(n)
        }, pattern


def test_open_lexicon_env(monkeypatch, data_dir):
    monkeypatch.setenv("FRAMELEX_DATA", str(data_dir))
    lex = open_lexicon()
    assert lex.frame("Event").ID == 5
