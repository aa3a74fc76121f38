import shutil
import threading

import pytest

from framelex import Store, open_store
from framelex.errors import CorpusError, IntegrityError, LookupFailure


def test_open_reads_only_the_frame_index(store):
    assert store.fileAccessLog == ["frameIndex.xml"]


def test_open_store_without_location(monkeypatch):
    monkeypatch.delenv("FRAMELEX_DATA", raising=False)
    with pytest.raises(CorpusError):
        open_store()


def test_open_store_env_var(monkeypatch, data_dir):
    monkeypatch.setenv("FRAMELEX_DATA", str(data_dir))
    st = open_store()
    assert st.fileAccessLog == ["frameIndex.xml"]


def test_missing_directory():
    with pytest.raises(CorpusError):
        Store("/no/such/place")


def test_log_paths_are_relative_posix(store):
    store.get_frame("Revenge")
    store.get_document(23802)
    for path in store.fileAccessLog:
        assert not path.startswith("/")
        assert "\\" not in path


def test_frame_load_is_cached_by_identity(store):
    a = store.get_frame("Revenge")
    b = store.get_frame(347)
    assert a is b
    assert store.fileAccessLog.count("frame/Revenge.xml") == 1


def test_frame_lookup_failures(store):
    with pytest.raises(LookupFailure):
        store.get_frame("NoSuchFrame")
    with pytest.raises(LookupFailure):
        store.get_frame(424242)


def test_lu_routes_through_owning_frame(store):
    lu = store.get_lu(6067)
    assert lu.name == "revenge.n"
    assert lu.frame.name == "Revenge"
    assert "frame/Revenge.xml" in store.fileAccessLog
    # the exemplar file is not touched until the sentences are
    assert "lu/lu6067.xml" not in store.fileAccessLog
    lu.exemplars
    assert "lu/lu6067.xml" in store.fileAccessLog


def test_lu_is_same_object_via_frame_and_store(store):
    frame = store.get_frame("Revenge")
    assert store.get_lu(6067) is frame.lexUnit["revenge.n"]


def test_exemplar_sentences_link_back(store):
    lu = store.get_lu(6067)
    sent = lu.exemplars[20]
    assert sent.ID == 929548
    assert sent.LU is lu
    assert sent.frame is lu.frame
    aset = sent.annotationSet[1]
    assert aset.LU is lu
    assert aset.sent is sent


def test_zero_count_lu_needs_no_file(store):
    frame = store.get_frame("Revenge")
    lu = frame.lexUnit["avenge.v"]
    before = list(store.fileAccessLog)
    assert lu.exemplars == []
    assert store.fileAccessLog == before


def test_problem_lu_stub(store):
    stub = store.resolve_annotation_lu(18997, "look.v", 2001, "Seeking")
    assert stub.status == "Problem"
    assert stub.name == "look.v"
    assert stub.POS == "V"
    assert store.resolve_annotation_lu(18997, "look.v", 2001, "Seeking") is stub
    assert stub.frame.name == "Seeking"


def test_document_primary_path(store):
    doc = store.get_document(23802)
    assert doc.name == "Tiger_Of_San_Pedro"
    assert "fulltext/Tiger_Of_San_Pedro.xml" in store.fileAccessLog


def test_document_corpus_prefixed_fallback_path(store):
    doc = store.get_document(23803)
    assert doc.name == "Wisteria_Report"
    assert "fulltext/Sherlock__Wisteria_Report.xml" in store.fileAccessLog
    assert "fulltext/Wisteria_Report.xml" not in store.fileAccessLog


def test_document_lookup_failure(store):
    with pytest.raises(LookupFailure):
        store.get_document(99999)


def test_semtypes_sorted_by_id(store):
    ids = [st.ID for st in store.semtypes()]
    assert ids == sorted(ids)
    assert store.fileAccessLog.count("semTypes.xml") == 1


def test_semtype_lookup_forms(store):
    st = store.get_semtype(5)
    assert st.name == "Sentient"
    assert store.get_semtype("Sentient") is st
    assert store.get_semtype("sent") is st
    with pytest.raises(LookupFailure):
        store.get_semtype("NoSuchType")


def test_log_replays_deterministically(data_dir):
    def run():
        st = Store(data_dir)
        frame = st.get_frame("Revenge")
        frame.lexUnit["revenge.n"].exemplars
        st.get_document(23802)
        st.semtypes()
        st.frame_relations_involving(347)
        return list(st.fileAccessLog)

    assert run() == run()


def test_concurrent_loads_parse_once(data_dir):
    st = Store(data_dir)
    results = []
    barrier = threading.Barrier(8)

    def work():
        barrier.wait()
        results.append(st.get_frame("Revenge"))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(map(id, results))) == 1
    assert st.fileAccessLog.count("frame/Revenge.xml") == 1


def _corrupt_copy(data_dir, tmp_path, relpath, old, new):
    clone = tmp_path / "corpus"
    shutil.copytree(data_dir, clone)
    target = clone / relpath
    body = target.read_text()
    assert old in body
    target.write_text(body.replace(old, new))
    return clone


def test_index_header_id_mismatch(data_dir, tmp_path):
    clone = _corrupt_copy(
        data_dir, tmp_path, "frame/Revenge.xml", 'name="Revenge" ID="347"', 'name="Revenge" ID="348"'
    )
    st = Store(clone)
    with pytest.raises(IntegrityError):
        st.get_frame("Revenge")


def test_missing_file_is_a_corpus_error(data_dir, tmp_path):
    clone = tmp_path / "corpus"
    shutil.copytree(data_dir, clone)
    (clone / "frame" / "Revenge.xml").unlink()
    st = Store(clone)
    with pytest.raises(CorpusError):
        st.get_frame("Revenge")
