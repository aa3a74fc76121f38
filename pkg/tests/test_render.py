"""Display checks: frozen golden outputs plus a geometric oracle.

The alignment oracle re-derives the wrap break positions on its own,
collects every marker column from the rendered block, and compares the
column sets per marker class with the spans stored on the record.  A
renderer that drifts by one column anywhere cannot satisfy it.
"""

import pytest

from framelex import (
    DisplayOptions,
    render_annotation_set,
    render_document,
    render_frame,
    render_frame_element,
    render_fulltext_sentence,
    render_lexicographic_sentence,
    render_lu,
    render_semtype,
)

# ------------------------------------------------------------ goldens


def test_frame_display_golden(lexicon, golden):
    out = render_frame(lexicon.frame("Revenge"), DisplayOptions())
    assert out == golden("frame_revenge.txt")


def test_lu_display_golden(lexicon, golden):
    out = render_lu(lexicon.lu(6067), DisplayOptions())
    assert out == golden("lu_6067.txt")


def test_exemplar_sentence_golden(lexicon, golden):
    sent = lexicon.lu(6067).exemplars[20]
    out = render_lexicographic_sentence(sent, DisplayOptions())
    assert out == golden("sent_929548.txt")


def test_wrapped_exemplar_golden(lexicon, golden):
    sent = lexicon.lu(6067).exemplars[3]
    out = render_lexicographic_sentence(sent, DisplayOptions())
    assert out == golden("sent_929504.txt")


def test_fulltext_sentence_goldens(lexicon, golden):
    doc = lexicon.doc(23802)
    opts = DisplayOptions()
    assert render_fulltext_sentence(doc.sentences[1], opts) == golden("sent_4148527.txt")
    assert render_fulltext_sentence(doc.sentences[2], opts) == golden("sent_4148528.txt")


def test_document_golden(lexicon, golden):
    assert render_document(lexicon.doc(23802), DisplayOptions()) == golden("doc_tiger.txt")


# ------------------------------------------------------------ shape checks


def test_all_renders_end_in_single_newline(lexicon):
    opts = DisplayOptions()
    outputs = [
        render_frame(lexicon.frame("Revenge"), opts),
        render_lu(lexicon.lu(6067), opts),
        render_document(lexicon.doc(23802), opts),
        render_semtype(lexicon.semtype("Sentient"), opts),
        render_frame_element(lexicon.frame("Revenge").FE["Avenger"], opts),
    ]
    for out in outputs:
        assert out.endswith("\n")
        assert not out.endswith("\n\n")
        for line in out.split("\n"):
            assert line == line.rstrip()


def test_render_is_deterministic(lexicon):
    opts = DisplayOptions()
    sent = lexicon.lu(6067).exemplars[20]
    assert render_lexicographic_sentence(sent, opts) == render_lexicographic_sentence(sent, opts)
    frame = lexicon.frame("Revenge")
    assert render_frame(frame, opts) == render_frame(frame, opts)


def test_width_floor():
    with pytest.raises(ValueError):
        DisplayOptions(wrap_width=19)
    DisplayOptions(wrap_width=20)


def test_narrow_width_still_aligns(lexicon, alignment):
    sent = lexicon.lu(6067).exemplars[20]
    for width in (20, 31, 45, 132):
        alignment.exemplar(sent, width)


def test_alignment_every_exemplar(lexicon, alignment):
    for sent in lexicon.exemplars():
        for width in (26, 70):
            alignment.exemplar(sent, width)


def test_alignment_every_fulltext_sentence(lexicon, alignment):
    for sent in lexicon.ft_sents():
        for width in (26, 70):
            alignment.fulltext(sent, width)


def test_annotation_set_render_mentions_status_and_frame(lexicon):
    sent = lexicon.lu(6067).exemplars[20]
    out = render_annotation_set(sent.annotationSet[1], DisplayOptions())
    assert "[status] MANUAL" in out
    assert "Revenge" in out


def test_ni_footer_lists_null_instantiations(lexicon):
    sent = lexicon.lu(6067).exemplars[20]
    out = render_lexicographic_sentence(sent, DisplayOptions())
    assert "[Injury:DNI]" in out


def test_fulltext_flags(lexicon, golden):
    out_unann = golden("sent_4148527.txt")
    assert "[2] !" in out_unann
    out_problem = golden("sent_4148528.txt")
    assert "[3] ?" in out_problem


def test_semtype_display(lexicon):
    out = render_semtype(lexicon.semtype("Sentient"), DisplayOptions())
    assert out.startswith("semantic type (5): Sentient")
    assert "Animate_being" in out
