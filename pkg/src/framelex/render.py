"""Aligned terminal displays for lexicon entities.

The sentence displays draw marker rows under the sentence text: ``-`` under
frame element spans, ``*`` under target spans, ``^`` under support and copula
spans, and nothing else.  Labels sit under their markers, truncated to the
span's width; every truncation is recorded and expanded in a trailing
``(short=Full, ...)`` footer, with numeric suffixes disambiguating collisions.
Null instantiations, which have no span to mark, become ``[FE:itype]`` footer
lines.

Long sentences wrap at a fixed width.  The text row picks the break
positions and every marker and label row is sliced at the same positions, so
a marker column always sits under the text column it annotates, including
spans that straddle a break.  Anything that would overlap on one row is
packed onto additional rows, first fit.

All lines are right-stripped; every renderer returns a string ending in a
single newline and is deterministic for a given entity and options.
"""

import re
import textwrap
from dataclasses import dataclass

from .xmlio import POS_SPECIFIC_LAYERS

CORE_TYPE_ORDER = ("Core", "Core-Unexpressed", "Peripheral", "Extra-Thematic")
INDENT = "  "
MIN_WRAP_WIDTH = 20


@dataclass(frozen=True)
class DisplayOptions:
    """Rendering knobs.  wrap_width counts whole lines, indent included."""

    wrap_width: int = 70

    def __post_init__(self):
        if self.wrap_width < MIN_WRAP_WIDTH:
            raise ValueError(f"wrap_width must be at least {MIN_WRAP_WIDTH}")


DEFAULT_OPTIONS = DisplayOptions()

_CHUNKS = re.compile(r"\S+|\s+")


def wrap_segments(text, width):
    """Split text into display segments of at most ``width`` characters.

    Breaks fall between whitespace and word runs (a run longer than the width
    is hard-split).  Segments concatenate back to the original text; returns
    (offset, chunk) pairs.
    """
    pieces = []
    cur = ""
    for chunk in _CHUNKS.findall(text):
        while len(chunk) > width:
            if cur:
                pieces.append(cur)
                cur = ""
            pieces.append(chunk[:width])
            chunk = chunk[width:]
        if cur and len(cur) + len(chunk) > width:
            pieces.append(cur)
            cur = chunk
        else:
            cur += chunk
    if cur or not pieces:
        pieces.append(cur)
    out = []
    offset = 0
    for piece in pieces:
        out.append((offset, piece))
        offset += len(piece)
    return out


# ------------------------------------------------------------ row packing


def _collides(row_spans, start, end):
    return any(not (end < s or start > e) for s, e in row_spans)


def _pack_groups(groups, spans_of):
    """First-fit packing: each group lands on the first row it fits whole."""
    rows = []
    occupied = []
    for group in groups:
        spans = spans_of(group)
        for i, row in enumerate(rows):
            if not any(_collides(occupied[i], s, e) for s, e in spans):
                row.append(group)
                occupied[i].extend(spans)
                break
        else:
            rows.append([group])
            occupied.append(list(spans))
    return rows


def _abbreviate(label, width, abbrevs):
    """Truncate a label to ``width``, recording the abbreviation used."""
    if len(label) <= width:
        return label
    short = label[:width]
    suffix = 2
    while short in abbrevs and abbrevs[short] != label:
        short = label[: max(width - len(str(suffix)), 1)] + str(suffix)
        suffix += 1
    abbrevs[short] = label
    return short


def _paint(line, start, text_chars):
    for i, ch in enumerate(text_chars):
        if 0 <= start + i < len(line):
            line[start + i] = ch


# ------------------------------------------------------- span visualization


def _aligned_block(text, groups, abbrevs, options):
    """Marker/label rows under wrapped text; groups are [(start, end, char, label)]."""
    length = len(text)
    rows = _pack_groups(groups, lambda g: [(s, e) for s, e, _, _ in g])
    pairs = []
    for row in rows:
        spans = sorted((t for group in row for t in group), key=lambda t: (t[0], t[1]))
        marker = [" "] * length
        label_line = [" "] * length
        for start, end, char, _ in spans:
            _paint(marker, start, char * (end - start + 1))
        for start, end, _, label in spans:
            if label is not None:
                _paint(label_line, start, _abbreviate(label, end - start + 1, abbrevs))
        pairs.append(("".join(marker), "".join(label_line)))

    lines = []
    for i, (offset, chunk) in enumerate(wrap_segments(text, options.wrap_width)):
        if i:
            lines.append("")
        lines.append(chunk.rstrip())
        for marker, label_line in pairs:
            m = marker[offset : offset + len(chunk)].rstrip()
            lbl = label_line[offset : offset + len(chunk)].rstrip()
            if m:
                lines.append(m)
                if lbl:
                    lines.append(lbl)
    return lines


def _expansion_footer(abbrevs):
    items = [(k, v) for k, v in abbrevs.items() if k != v]
    if not items:
        return []
    return ["(" + ", ".join(f"{k}={v}" for k, v in items) + ")"]


def _sentence_groups(owner):
    """Marker groups for one annotated span source (sentence or set)."""
    groups = [[(s, e, "*", None)] for s, e in owner.get("Target", [])]
    overt, _, _ = owner.get("FE", ([], {}, {}))
    groups.extend([(s, e, "-", name)] for s, e, name in overt)
    for layer in POS_SPECIFIC_LAYERS:
        for s, e, label in owner.get(layer, []) or []:
            groups.append([(s, e, "^", label.lower())])
    return groups


def _ni_footer(owner):
    _, ni, _ = owner.get("FE", ([], {}, {}))
    return [f"[{name}:{ni[name]}]" for name in sorted(ni)]


# ------------------------------------------------------------ renderers


def _finish(lines):
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _fill_block(text, width):
    if not text:
        return []
    return textwrap.fill(
        text,
        width=width,
        initial_indent=INDENT,
        subsequent_indent=INDENT,
        break_long_words=False,
        break_on_hyphens=False,
    ).splitlines()


def render_frame(frame, options=DEFAULT_OPTIONS):
    """The frame overview display: definition, relations, LUs, FEs, core sets."""
    w = options.wrap_width
    out = [f"frame ({frame.ID}): {frame.name}", ""]
    out += [f"[URL] {frame.URL}", ""]
    out += ["[definition]"] + _fill_block(frame.definition, w) + [""]

    semtypes = frame.semTypes
    out.append(f"[semTypes] {len(semtypes)} semantic types")
    if semtypes:
        out += _fill_block(", ".join(f"{st.name}({st.ID})" for st in semtypes), w)
    out.append("")

    relations = frame.frameRelations
    out.append(f"[frameRelations] {len(relations)} frame relations")
    for rel in relations:
        out.append(
            f"{INDENT}<{rel.type.superFrameName}={rel.superFrameName} -- "
            f"{rel.type.name} -> {rel.type.subFrameName}={rel.subFrameName}>"
        )
    out.append("")

    lex_units = frame.lexUnit
    out.append(f"[lexUnit] {len(lex_units)} lexical units")
    if lex_units:
        listing = ", ".join(f"{name} ({lu.ID})" for name, lu in sorted(lex_units.items()))
        out += _fill_block(listing, w)
    out.append("")

    fes = frame.FE
    out.append(f"[FE] {len(fes)} frame elements")
    by_core_type = {}
    for fe in fes.values():
        by_core_type.setdefault(fe.coreType, []).append(fe)
    for core_type in CORE_TYPE_ORDER:
        group = sorted(by_core_type.get(core_type, []), key=lambda fe: fe.name)
        if not group:
            continue
        head = f"{core_type:>16}: "
        out += textwrap.fill(
            ", ".join(f"{fe.name} ({fe.ID})" for fe in group),
            width=w,
            initial_indent=head,
            subsequent_indent=" " * len(head),
            break_long_words=False,
            break_on_hyphens=False,
        ).splitlines()
    out.append("")

    core_sets = frame.FEcoreSets
    out.append(f"[FEcoreSets] {len(core_sets)} frame element core sets")
    for group in core_sets:
        out.append(INDENT + ", ".join(fe.name for fe in group))
    return _finish(out)


def render_lu(lu, options=DEFAULT_OPTIONS):
    """The lexical unit display; touching subCorpus loads its exemplar file."""
    w = options.wrap_width
    out = [f"lexical unit ({lu.ID}): {lu.name}", ""]
    out += ["[definition]"] + _fill_block(lu.definition, w) + [""]
    out += [f"[frame] {lu.frame.name}({lu.frame.ID})", ""]
    out += [f"[POS] {lu.POS}", ""]
    out += [f"[status] {lu.status}", ""]
    lexemes = " ".join(f"{lex.name}/{lex.POS}" for lex in lu.lexemes)
    out += [f"[lexemes] {lexemes}", ""]
    count = lu.sentenceCount
    out += [f"[sentenceCount] annotated={count.annotated} total={count.total}", ""]
    subcorpora = lu.subCorpus
    out.append(f"[subCorpus] {len(subcorpora)} subcorpora")
    if subcorpora:
        out += _fill_block(", ".join(sorted(sub.name for sub in subcorpora)), w)
    return _finish(out)


def _plural(n, word):
    return f"{n} {word}" if n == 1 else f"{n} {word}s"


def render_lexicographic_sentence(sent, options=DEFAULT_OPTIONS):
    """One exemplar sentence: metadata block, aligned annotation, footers."""
    out = [f"exemplar sentence ({sent.ID}):"]
    if sent.get("sentNo") is not None:
        out.append(f"[sentNo] {sent.sentNo}")
    if sent.get("aPos") is not None:
        out.append(f"[aPos] {sent.aPos}")
    out.append("")
    lu, frame = sent.LU, sent.frame
    out += [f"[LU] ({lu.ID}) {lu.name} in {frame.name}", ""]
    out += [f"[frame] ({frame.ID}) {frame.name}", ""]
    out += [f"[annotationSet] {_plural(len(sent.annotationSet), 'annotation set')}", ""]
    out += [f"[POS] {_plural(len(sent.POS), 'tag')}", ""]
    out += [f"[POS_tagset] {sent.POS_tagset}", ""]
    out += [f"[GF] {_plural(len(sent.GF), 'relation')}", ""]
    out += [f"[PT] {_plural(len(sent.PT), 'phrase')}", ""]
    present = ["[text]", "[Target]", "[FE]"]
    present += [f"[{layer}]" for layer in POS_SPECIFIC_LAYERS if sent.get(layer)]
    out += [" + ".join(present), ""]

    abbrevs = {}
    out += _aligned_block(sent.text, _sentence_groups(sent), abbrevs, options)
    out += _ni_footer(sent)
    out += _expansion_footer(abbrevs)
    return _finish(out)


def render_fulltext_sentence(sent, options=DEFAULT_OPTIONS):
    """One full-text sentence: every frame annotation set marked and numbered.

    Sets are numbered in file order, 1-based.  A set whose LU the named frame
    does not define gets a `` ?`` suffix; a set with unannotated FEs (status
    UNANN) gets `` !``.
    """
    doc = sent.get("doc")
    doc_name = doc.name if doc is not None else ""
    out = [f"full-text sentence ({sent.ID}) in {doc_name}:", ""]
    out += [f"[POS] {_plural(len(sent.POS), 'tag')}", ""]
    out += [f"[POS_tagset] {sent.POS_tagset}", ""]
    out += ["[text] + [annotationSet]", ""]

    infos = []
    for index, aset in enumerate(sent.annotationSet[1:], start=1):
        spans = aset.get("Target") or []
        if not spans:
            continue
        lu = aset.get("LU")
        undefined = lu is not None and lu.status == "Problem"
        suffix = (" ?" if undefined else "") + (" !" if aset.status == "UNANN" else "")
        infos.append((spans, aset.get("frameName", ""), f"[{index}]{suffix}"))

    abbrevs = {}
    out += _fulltext_block(sent.text, infos, abbrevs, options)
    out += _expansion_footer(abbrevs)
    return _finish(out)


def _fulltext_block(text, infos, abbrevs, options):
    length = len(text)
    rows = _pack_groups(infos, lambda info: info[0])
    triples = []
    for row in rows:
        row = sorted(row, key=lambda info: info[0][0][0])
        marker = [" "] * length
        name_line = [" "] * length
        index_line = [" "] * length
        for spans, _, _ in row:
            for start, end in spans:
                _paint(marker, start, "*" * (end - start + 1))
        for i, (spans, frame_name, index_text) in enumerate(row):
            start, end = spans[0]
            _paint(name_line, start, _abbreviate(frame_name, end - start + 1, abbrevs))
            # The index may run past a narrow span while the row stays free.
            limit = row[i + 1][0][0][0] if i + 1 < len(row) else length
            _paint(index_line, start, index_text[: max(limit - start, 1)])
        triples.append(("".join(marker), "".join(name_line), "".join(index_line)))

    lines = []
    for i, (offset, chunk) in enumerate(wrap_segments(text, options.wrap_width)):
        if i:
            lines.append("")
        lines.append(chunk.rstrip())
        for marker, name_line, index_line in triples:
            m = marker[offset : offset + len(chunk)].rstrip()
            if not m:
                continue
            lines.append(m)
            for aux in (name_line, index_line):
                sliced = aux[offset : offset + len(chunk)].rstrip()
                if sliced:
                    lines.append(sliced)
    return lines


def render_document(doc, options=DEFAULT_OPTIONS):
    """The document display: metadata, then one [offset] line per sentence."""
    out = [f"full-text document ({doc.ID}): {doc.name}", ""]
    out.append(f"[corpusName] {doc.corpusName}")
    out.append(f"[corpusID] {doc.corpusID}")
    out += [f"[description] {doc.description}", ""]
    sentences = doc.sentences
    out.append(f"[sentence] {_plural(len(sentences), 'sentence')}")
    for offset, sent in enumerate(sentences):
        out.append(f"[{offset}] {sent.text}")
    return _finish(out)


def render_annotation_set(aset, options=DEFAULT_OPTIONS):
    """One annotation set: status, LU, frame, and its own aligned layers."""
    out = [f"annotation set ({aset.ID}):", ""]
    out.append(f"[status] {aset.status}")
    lu = aset.get("LU")
    if lu is not None:
        out.append(f"[LU] ({lu.ID}) {lu.name}")
    frame = aset.get("frame")
    if frame is not None:
        out.append(f"[frame] ({frame.ID}) {frame.name}")
    out.append("")
    sent = aset.get("sent")
    if sent is not None:
        abbrevs = {}
        out += _aligned_block(sent.text, _sentence_groups(aset), abbrevs, options)
        out += _ni_footer(aset)
        out += _expansion_footer(abbrevs)
    return _finish(out)


def render_frame_element(fe, options=DEFAULT_OPTIONS):
    """One frame element: definition, core type, abbreviation, semantic type."""
    w = options.wrap_width
    out = [f"frame element ({fe.ID}): {fe.name}", ""]
    out += ["[definition]"] + _fill_block(fe.definition, w) + [""]
    out += [f"[coreType] {fe.coreType}", ""]
    out += [f"[abbrev] {fe.abbrev}", ""]
    out += [f"[frame] {fe.frame.name}({fe.frame.ID})", ""]
    st = fe.semType
    out.append(f"[semType] {f'{st.name}({st.ID})' if st is not None else '<none>'}")
    return _finish(out)


def render_semtype(st, options=DEFAULT_OPTIONS):
    """One semantic type: abbreviation, definition, parent, children."""
    w = options.wrap_width
    out = [f"semantic type ({st.ID}): {st.name}", ""]
    out += [f"[abbrev] {st.abbrev}", ""]
    out += ["[definition]"] + _fill_block(st.definition, w) + [""]
    parent = st.superType
    out += [f"[superType] {f'{parent.name}({parent.ID})' if parent else '<none>'}", ""]
    subtypes = st.subTypes
    out.append(f"[subTypes] {_plural(len(subtypes), 'subtype')}")
    if subtypes:
        out += _fill_block(", ".join(f"{s.name}({s.ID})" for s in subtypes), w)
    return _finish(out)
