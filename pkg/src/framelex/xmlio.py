"""Parsers for the on-disk XML corpus format.

Every function here is pure over bytes: it receives file content, returns
records, and never touches the file system.  Cross-file references (exemplar
sentences of a lexical unit stub, the frames named by a relation, semantic
types named by ID) are represented as ``Lazy`` thunks built from resolver
callbacks that the caller injects; with no callback the thunk raises a clear
error if it is ever forced.

The parsers read a fixed subset of elements and attributes.  Anything else in
a file (editorial attributes, embedded relation references inside frame files,
unknown child elements) is ignored without error, except that unknown
annotation layers are kept verbatim on their annotation set.

Span convention: label offsets are 0-based with inclusive ends, exactly as
stored in the files.  No adjustment happens at parse time.
"""

import html
import re
from xml.etree import ElementTree

from .errors import IntegrityError, ParseError
from .records import Lazy, Record, unbound_lazy

CORE_TYPES = ("Core", "Core-Unexpressed", "Peripheral", "Extra-Thematic")

# Layers whose labels mark support or copula words for one part of speech.
POS_SPECIFIC_LAYERS = ("Verb", "Noun", "Adj", "Adv", "Prep", "Scon", "Art")

# Layers carrying part-of-speech tags; the layer name doubles as the tagset.
POS_TAGSET_LAYERS = ("BNC", "PENN")

_REPORT_BASE = "https://framenet2.icsi.berkeley.edu/fnReports/data"

_EX_TAG = re.compile(r"</?ex>", re.IGNORECASE)
_ANY_TAG = re.compile(r"<[^>]*>")
_WS_RUN = re.compile(r"\s+")


def strip_markup(markup):
    """Reduce definition markup to plain prose.

    All tags are removed generically; embedded example sentences survive as
    quoted text; entities are decoded; whitespace runs collapse to single
    spaces.
    """
    if not markup:
        return ""
    text = _EX_TAG.sub("'", markup)
    text = _ANY_TAG.sub("", text)
    text = html.unescape(text)
    return _WS_RUN.sub(" ", text).strip()


def frame_url(name):
    return f"{_REPORT_BASE}/frame/{name}.xml"


def lu_url(lu_id):
    return f"{_REPORT_BASE}/lu/lu{lu_id}.xml"


# ---------------------------------------------------------------- plumbing


def _parse_root(data, source, expected_tag):
    try:
        root = ElementTree.fromstring(data)
    except ElementTree.ParseError as exc:
        line, column = getattr(exc, "position", (0, 0))
        raise ParseError(
            f"{source or '<data>'}: line {line}: not well-formed XML ({exc.msg})"
        ) from None
    for elt in root.iter():
        if "}" in elt.tag:
            elt.tag = elt.tag.split("}", 1)[1]
        for key in list(elt.attrib):
            if "}" in key:
                elt.attrib[key.split("}", 1)[1]] = elt.attrib.pop(key)
    if root.tag != expected_tag:
        raise ParseError(
            f"{source or '<data>'}: expected a <{expected_tag}> document, got <{root.tag}>"
        )
    return root


def _req_attr(elt, name, source):
    value = elt.get(name)
    if value is None:
        raise ParseError(f"{source}: <{elt.tag}> is missing required attribute {name!r}")
    return value


def _req_int(elt, name, source):
    value = _req_attr(elt, name, source)
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"{source}: <{elt.tag}> attribute {name!r} is not an integer: {value!r}")


def _opt_int(elt, name):
    value = elt.get(name)
    return None if value is None else int(value)


def _child_text(elt, tag):
    child = elt.find(tag)
    if child is None or child.text is None:
        return ""
    return child.text


# ---------------------------------------------------------------- indexes


def parse_frame_index(data, source="frameIndex.xml"):
    """The frame index: a list of (frame ID, frame name) in file order."""
    root = _parse_root(data, source, "frameIndex")
    seen = set()
    entries = []
    for elt in root.iter("frame"):
        fid = _req_int(elt, "ID", source)
        name = _req_attr(elt, "name", source)
        if fid in seen:
            raise IntegrityError(f"{source}: duplicate frame ID {fid}")
        seen.add(fid)
        entries.append((fid, name))
    return entries


def parse_lu_index(data, source="luIndex.xml"):
    """The LU index: one row per lexical unit across the whole lexicon."""
    root = _parse_root(data, source, "luIndex")
    seen = set()
    rows = []
    for elt in root.iter("lu"):
        lu_id = _req_int(elt, "ID", source)
        if lu_id in seen:
            raise IntegrityError(f"{source}: duplicate lexical unit ID {lu_id}")
        seen.add(lu_id)
        rows.append(
            Record(
                ID=lu_id,
                name=_req_attr(elt, "name", source),
                frameID=_req_int(elt, "frameID", source),
                frameName=_req_attr(elt, "frameName", source),
                status=elt.get("status", ""),
            )
        )
    return rows


def parse_fulltext_index(data, source="fulltextIndex.xml"):
    """The document index: one row per full-text document, with its corpus."""
    root = _parse_root(data, source, "fulltextIndex")
    rows = []
    seen = set()
    for corpus in root.iter("corpus"):
        corpus_id = _opt_int(corpus, "ID")
        corpus_name = corpus.get("name", "")
        for doc in corpus.iter("document"):
            doc_id = _req_int(doc, "ID", source)
            if doc_id in seen:
                raise IntegrityError(f"{source}: duplicate document ID {doc_id}")
            seen.add(doc_id)
            rows.append(
                Record(
                    ID=doc_id,
                    name=_req_attr(doc, "name", source),
                    description=doc.get("description", ""),
                    corpusName=corpus_name,
                    corpusID=corpus_id,
                )
            )
    return rows


# ---------------------------------------------------------------- frames


def parse_frame_file(
    data,
    source=None,
    *,
    relation_query=None,
    semtype_lookup=None,
    exemplar_loader=None,
):
    """One frame file -> a frame record, without exemplar sentences.

    ``relation_query(frame_id)`` supplies the frame's relations on demand;
    ``semtype_lookup(st_id, st_name)`` resolves semantic type references;
    ``exemplar_loader(lu_stub)`` supplies an LU's subcorpora on demand.  Each
    callback is optional; the matching attributes then fail if forced, except
    that an LU with a zero sentence count resolves to empty lists eagerly.
    """
    root = _parse_root(data, source, "frame")
    name = _req_attr(root, "name", source)
    frame_id = _req_int(root, "ID", source)
    markup = _child_text(root, "definition")

    frame = Record()
    frame["cBy"] = root.get("cBy", "")
    frame["cDate"] = root.get("cDate", "")
    frame["name"] = name
    frame["ID"] = frame_id
    frame["_type"] = "frame"
    frame["definition"] = strip_markup(markup)
    frame["definitionMarkup"] = markup
    if relation_query is not None:
        frame["frameRelations"] = Lazy(lambda: relation_query(frame_id))
    else:
        frame["frameRelations"] = unbound_lazy(f"relations of frame {name!r}")
    frame["FE"] = {}
    frame["FEcoreSets"] = []
    frame["lexUnit"] = {}
    frame["semTypes"] = _semtype_ref_list(root, source, semtype_lookup)
    frame["URL"] = frame_url(name)

    fe_ids = set()
    for elt in root:
        if elt.tag == "FE":
            fe = _parse_fe(elt, source, frame, semtype_lookup)
            if fe.name in frame["FE"] or fe.ID in fe_ids:
                raise IntegrityError(
                    f"{source}: duplicate frame element {fe.name!r} ({fe.ID}) in frame {name!r}"
                )
            fe_ids.add(fe.ID)
            frame["FE"][fe.name] = fe
        elif elt.tag == "lexUnit":
            lu = _parse_lu_stub(elt, source, frame, exemplar_loader)
            if lu.name in frame["lexUnit"]:
                raise IntegrityError(
                    f"{source}: duplicate lexical unit {lu.name!r} in frame {name!r}"
                )
            frame["lexUnit"][lu.name] = lu

    # Core set membership refers to FEs by name, so resolve after the FE pass.
    for elt in root:
        if elt.tag != "FEcoreSet":
            continue
        members = []
        for member in elt.iter("memberFE"):
            member_name = _req_attr(member, "name", source)
            if member_name not in frame["FE"]:
                raise IntegrityError(
                    f"{source}: core set of frame {name!r} names unknown FE {member_name!r}"
                )
            members.append(frame["FE"][member_name])
        frame["FEcoreSets"].append(members)

    return frame


def _semtype_ref_list(elt, source, semtype_lookup):
    refs = []
    for child in elt:
        if child.tag == "semType":
            refs.append((_req_int(child, "ID", source), _req_attr(child, "name", source)))
    if not refs:
        return []
    if semtype_lookup is None:
        return unbound_lazy("semantic type references")
    return Lazy(lambda: [semtype_lookup(st_id, st_name) for st_id, st_name in refs])


def _parse_fe(elt, source, frame, semtype_lookup):
    core_type = _req_attr(elt, "coreType", source)
    if core_type not in CORE_TYPES:
        raise IntegrityError(
            f"{source}: frame element {elt.get('name')!r} has unknown coreType {core_type!r}"
        )
    markup = _child_text(elt, "definition")
    fe = Record()
    fe["cBy"] = elt.get("cBy", "")
    fe["cDate"] = elt.get("cDate", "")
    fe["abbrev"] = elt.get("abbrev", "")
    fe["name"] = _req_attr(elt, "name", source)
    fe["ID"] = _req_int(elt, "ID", source)
    fe["_type"] = "fe"
    fe["coreType"] = core_type
    fe["definition"] = strip_markup(markup)
    fe["definitionMarkup"] = markup
    refs = [
        (_req_int(child, "ID", source), _req_attr(child, "name", source))
        for child in elt
        if child.tag == "semType"
    ]
    if not refs:
        fe["semType"] = None
    elif semtype_lookup is None:
        fe["semType"] = unbound_lazy(f"semantic type of FE {fe['name']!r}")
    else:
        st_id, st_name = refs[0]
        fe["semType"] = Lazy(lambda: semtype_lookup(st_id, st_name))
    fe["frame"] = frame
    return fe


def _parse_lu_stub(elt, source, frame, exemplar_loader):
    markup = _child_text(elt, "definition")
    count = elt.find("sentenceCount")
    annotated = int(count.get("annotated", 0)) if count is not None else 0
    total = int(count.get("total", 0)) if count is not None else 0
    if annotated > total:
        raise IntegrityError(
            f"{source}: lexical unit {elt.get('name')!r} has annotated > total sentence count"
        )
    lexemes = [
        Record(
            name=_req_attr(lex, "name", source),
            POS=lex.get("POS", ""),
            headword=lex.get("headword", "false") == "true",
            breakBefore=lex.get("breakBefore", "false") == "true",
            order=int(lex.get("order", 1)),
        )
        for lex in elt
        if lex.tag == "lexeme"
    ]

    lu = Record()
    lu["status"] = elt.get("status", "")
    lu["POS"] = elt.get("POS", "")
    lu["name"] = _req_attr(elt, "name", source)
    lu["ID"] = _req_int(elt, "ID", source)
    lu["_type"] = "lu"
    lu["definition"] = strip_markup(markup)
    lu["definitionMarkup"] = markup
    lu["lexemes"] = lexemes
    lu["sentenceCount"] = Record(annotated=annotated, total=total)
    lu["frame"] = frame
    lu["URL"] = lu_url(lu["ID"])
    if total == 0:
        lu["subCorpus"] = []
        lu["exemplars"] = []
    elif exemplar_loader is None:
        lu["subCorpus"] = unbound_lazy(f"exemplars of {lu['name']!r}")
        lu["exemplars"] = unbound_lazy(f"exemplars of {lu['name']!r}")
    else:
        lu["subCorpus"] = Lazy(lambda: exemplar_loader(lu))
        lu["exemplars"] = Lazy(
            lambda: [sent for sub in lu["subCorpus"] for sent in sub.sentence]
        )
    return lu


# ---------------------------------------------------------------- sentences


def _parse_label(elt, source, layer_name, strict_span):
    start = _opt_int(elt, "start")
    end = _opt_int(elt, "end")
    name = _req_attr(elt, "name", source)
    itype = elt.get("itype")
    if (start is None) != (end is None):
        raise IntegrityError(
            f"{source}: label {name!r} on layer {layer_name!r} has half a span"
        )
    if start is not None and end < start:
        raise IntegrityError(
            f"{source}: label {name!r} on layer {layer_name!r} has end {end} < start {start}"
        )
    if itype is not None and start is not None:
        raise IntegrityError(
            f"{source}: label {name!r} on layer {layer_name!r} has both a span and itype"
        )
    if strict_span and itype is None and start is None:
        raise IntegrityError(
            f"{source}: label {name!r} on layer {layer_name!r} has neither span nor itype"
        )
    label = Record()
    if start is not None:
        label["start"] = start
        label["end"] = end
    label["name"] = name
    if itype is not None:
        label["itype"] = itype
    fe_id = _opt_int(elt, "feID")
    if fe_id is not None:
        label["feID"] = fe_id
    return label


_STRICT_SPAN_LAYERS = frozenset(
    ("Target", "FE", "GF", "PT") + POS_SPECIFIC_LAYERS + POS_TAGSET_LAYERS
)


def _parse_layers(elt, source):
    layers = []
    for child in elt:
        if child.tag != "layer":
            continue
        layer_name = _req_attr(child, "name", source)
        strict = layer_name in _STRICT_SPAN_LAYERS
        labels = [
            _parse_label(label, source, layer_name, strict and layer_name != "FE")
            for label in child
            if label.tag == "label"
        ]
        layers.append(
            Record(rank=int(child.get("rank", 1)), name=layer_name, label=labels)
        )
    return layers


def _span_list(layers, name):
    spans = []
    for layer in layers:
        if layer.name != name:
            continue
        for label in layer.label:
            if "start" in label:
                spans.append((label["start"], label["end"], label["name"]))
    spans.sort(key=lambda s: (s[0], s[1]))
    return spans


def _flatten_fe_layers(layers):
    """Merge FE layers of every rank into one (overt, ni, niDetail) triple."""
    overt = []
    ni = {}
    ni_detail = {}
    for layer in sorted((l for l in layers if l.name == "FE"), key=lambda l: l.rank):
        rank_spans = []
        for label in layer.label:
            if "start" in label:
                rank_spans.append((label["start"], label["end"], label["name"]))
            elif "itype" in label:
                ni.setdefault(label["name"], label["itype"])
                ni_detail.setdefault(label["name"], label)
            else:
                raise IntegrityError(
                    f"FE label {label['name']!r} has neither span nor itype"
                )
        rank_spans.sort(key=lambda s: (s[0], s[1]))
        overt.extend(rank_spans)
    return overt, ni, ni_detail


def _flatten_annotation_set(aset, layers):
    """Attach convenience views of the known layers to an annotation set."""
    names = {layer.name for layer in layers}
    if "Target" in names:
        aset["Target"] = [
            (start, end) for start, end, _ in _span_list(layers, "Target")
        ]
    if "FE" in names:
        aset["FE"] = _flatten_fe_layers(layers)
    for known in ("GF", "PT"):
        if known in names:
            aset[known] = _span_list(layers, known)
    for tagset in POS_TAGSET_LAYERS:
        if tagset in names:
            aset["POS"] = _span_list(layers, tagset)
            aset["POS_tagset"] = tagset
            break
    for pos_layer in POS_SPECIFIC_LAYERS:
        if pos_layer in names:
            spans = _span_list(layers, pos_layer)
            if spans:
                aset[pos_layer] = spans


def _parse_annotation_set(elt, source, fulltext, lu_resolver, frame_resolver):
    aset = Record()
    aset["ID"] = _req_int(elt, "ID", source)
    aset["status"] = elt.get("status", "")
    aset["_type"] = "annotationset"
    if fulltext:
        for key in ("luID", "frameID"):
            value = _opt_int(elt, key)
            if value is not None:
                aset[key] = value
        for key in ("luName", "frameName"):
            value = elt.get(key)
            if value is not None:
                aset[key] = value
        if "luID" in aset or "luName" in aset:
            if lu_resolver is None:
                aset["LU"] = unbound_lazy("the annotation set's lexical unit")
            else:
                aset["LU"] = Lazy(
                    lambda: lu_resolver(
                        aset.get("luID"), aset.get("luName"),
                        aset.get("frameID"), aset.get("frameName"),
                    )
                )
        if "frameID" in aset or "frameName" in aset:
            if frame_resolver is None:
                aset["frame"] = unbound_lazy("the annotation set's frame")
            else:
                aset["frame"] = Lazy(
                    lambda: frame_resolver(aset.get("frameID"), aset.get("frameName"))
                )
    else:
        # The owning store links these to the loaded lexical unit.
        aset["LU"] = unbound_lazy("the annotation set's lexical unit")
        aset["frame"] = unbound_lazy("the annotation set's frame")
    aset["sent"] = None
    layers = _parse_layers(elt, source)
    aset["layer"] = layers
    _flatten_annotation_set(aset, layers)
    return aset


def _parse_sentence(elt, source, fulltext, lu_resolver=None, frame_resolver=None):
    sent = Record()
    if fulltext:
        sent["corpID"] = _opt_int(elt, "corpID")
        sent["docID"] = _opt_int(elt, "docID")
    sent["sentNo"] = _opt_int(elt, "sentNo")
    if fulltext:
        sent["paragNo"] = _opt_int(elt, "paragNo")
    sent["aPos"] = _opt_int(elt, "aPos")
    sent["ID"] = _req_int(elt, "ID", source)
    sent["_type"] = "fulltext_sentence" if fulltext else "sentence"
    text_elt = elt.find("text")
    if text_elt is None:
        raise ParseError(f"{source}: sentence {sent['ID']} has no <text> element")
    sent["text"] = text_elt.text or ""
    if not fulltext:
        sent["LU"] = unbound_lazy("the sentence's lexical unit")
        sent["frame"] = unbound_lazy("the sentence's frame")

    asets = [
        _parse_annotation_set(child, source, fulltext, lu_resolver, frame_resolver)
        for child in elt
        if child.tag == "annotationSet"
    ]
    for aset in asets:
        dict.__setitem__(aset, "sent", sent)
    sent["annotationSet"] = asets

    sent["POS"] = []
    sent["POS_tagset"] = ""
    if asets and "POS" in asets[0]:
        sent["POS"] = asets[0]["POS"]
        sent["POS_tagset"] = asets[0]["POS_tagset"]

    if not fulltext:
        # The frame annotation set's layers are mirrored onto the sentence.
        frame_set = asets[1] if len(asets) > 1 else None
        sent["Target"] = frame_set.get("Target", []) if frame_set else []
        sent["FE"] = frame_set.get("FE", ([], {}, {})) if frame_set else ([], {}, {})
        sent["GF"] = frame_set.get("GF", []) if frame_set else []
        sent["PT"] = frame_set.get("PT", []) if frame_set else []
        if frame_set:
            for pos_layer in POS_SPECIFIC_LAYERS:
                if pos_layer in frame_set:
                    sent[pos_layer] = frame_set[pos_layer]

    _check_spans(sent, source)
    return sent


def _check_spans(sent, source):
    length = len(sent["text"])
    for aset in sent["annotationSet"]:
        for layer in aset["layer"]:
            for label in layer.label:
                if "start" in label and label["end"] >= length:
                    raise IntegrityError(
                        f"{source}: sentence {sent['ID']}: label {label['name']!r} "
                        f"spans past the end of the text"
                    )


def parse_lu_file(data, source=None):
    """One LU exemplar file -> (LU ID, list of subcorpus records)."""
    root = _parse_root(data, source, "lexUnit")
    lu_id = _req_int(root, "ID", source)
    subcorpora = []
    for sub in root:
        if sub.tag != "subCorpus":
            continue
        sentences = [
            _parse_sentence(child, source, fulltext=False)
            for child in sub
            if child.tag == "sentence"
        ]
        subcorpora.append(Record(name=sub.get("name", ""), sentence=sentences))
    return lu_id, subcorpora


def parse_fulltext_file(data, source=None, *, lu_resolver=None, frame_resolver=None):
    """One full-text document file -> a document record with its sentences."""
    root = _parse_root(data, source, "fullTextAnnotation")
    header = root.find("header")
    corpus = header.find("corpus") if header is not None else None
    doc_elt = corpus.find("document") if corpus is not None else None
    if doc_elt is None:
        raise ParseError(f"{source}: missing header/corpus/document element")

    doc = Record()
    doc["ID"] = _req_int(doc_elt, "ID", source)
    doc["name"] = _req_attr(doc_elt, "name", source)
    doc["description"] = doc_elt.get("description", "")
    doc["corpusName"] = corpus.get("name", "")
    doc["corpusID"] = _opt_int(corpus, "ID")
    doc["_type"] = "document"
    sentences = [
        _parse_sentence(
            child, source, fulltext=True,
            lu_resolver=lu_resolver, frame_resolver=frame_resolver,
        )
        for child in root
        if child.tag == "sentence"
    ]
    for sent in sentences:
        sent["doc"] = doc
    doc["sentences"] = sentences
    return doc


# ---------------------------------------------------------------- relations


def parse_relations_file(data, source="frRelation.xml", *, frame_resolver=None):
    """The relation registry -> list of relation-type records.

    Each type carries its relations; each relation carries its FE mappings.
    Frames are resolved lazily through ``frame_resolver(frame_id, name)``.
    """
    root = _parse_root(data, source, "frameRelations")

    def frame_ref(frame_id, name):
        if frame_resolver is None:
            return unbound_lazy(f"frame {name!r}")
        return Lazy(lambda: frame_resolver(frame_id, name))

    def fe_ref(relation, side, fe_name):
        def _resolve():
            frame = relation[side]
            try:
                return frame["FE"][fe_name]
            except KeyError:
                raise IntegrityError(
                    f"{source}: relation {relation['ID']} names unknown FE "
                    f"{fe_name!r} in frame {frame['name']!r}"
                ) from None

        return Lazy(_resolve)

    types = []
    for type_elt in root:
        if type_elt.tag != "frameRelationType":
            continue
        rtype = Record()
        rtype["ID"] = _req_int(type_elt, "ID", source)
        rtype["name"] = _req_attr(type_elt, "name", source)
        rtype["superFrameName"] = _req_attr(type_elt, "superFrameName", source)
        rtype["subFrameName"] = _req_attr(type_elt, "subFrameName", source)
        rtype["_type"] = "framerelationtype"
        rtype["frameRelations"] = []
        for rel_elt in type_elt:
            if rel_elt.tag != "frameRelation":
                continue
            rel = Record()
            rel["ID"] = _req_int(rel_elt, "ID", source)
            rel["type"] = rtype
            rel["superFrameName"] = _req_attr(rel_elt, "superFrameName", source)
            rel["subFrameName"] = _req_attr(rel_elt, "subFrameName", source)
            rel["supID"] = _req_int(rel_elt, "supID", source)
            rel["subID"] = _req_int(rel_elt, "subID", source)
            rel["_type"] = "framerelation"
            rel["superFrame"] = frame_ref(rel["supID"], rel["superFrameName"])
            rel["subFrame"] = frame_ref(rel["subID"], rel["subFrameName"])
            rel["feRelations"] = []
            for fe_elt in rel_elt:
                if fe_elt.tag != "FERelation":
                    continue
                ferel = Record()
                ferel["ID"] = _req_int(fe_elt, "ID", source)
                ferel["superFEName"] = _req_attr(fe_elt, "superFEName", source)
                ferel["subFEName"] = _req_attr(fe_elt, "subFEName", source)
                ferel["supID"] = _req_int(fe_elt, "supID", source)
                ferel["subID"] = _req_int(fe_elt, "subID", source)
                ferel["_type"] = "ferelation"
                ferel["frameRelation"] = rel
                ferel["superFE"] = fe_ref(rel, "superFrame", ferel["superFEName"])
                ferel["subFE"] = fe_ref(rel, "subFrame", ferel["subFEName"])
                rel["feRelations"].append(ferel)
            rtype["frameRelations"].append(rel)
        types.append(rtype)
    return types


# ---------------------------------------------------------------- semtypes


def parse_semtypes_file(data, source="semTypes.xml"):
    """The semantic type registry -> fully linked type records.

    Types form a forest over their ``superType`` links; dangling parents and
    cycles are integrity errors.
    """
    root = _parse_root(data, source, "semTypes")
    types = []
    by_id = {}
    parent_of = {}
    for elt in root:
        if elt.tag != "semType":
            continue
        st = Record()
        st["abbrev"] = elt.get("abbrev", "")
        st["name"] = _req_attr(elt, "name", source)
        st["ID"] = _req_int(elt, "ID", source)
        st["_type"] = "semtype"
        st["definition"] = strip_markup(_child_text(elt, "definition"))
        st["superType"] = None
        st["subTypes"] = []
        if st["ID"] in by_id:
            raise IntegrityError(f"{source}: duplicate semantic type ID {st['ID']}")
        by_id[st["ID"]] = st
        types.append(st)
        sup = elt.find("superType")
        if sup is not None:
            parent_of[st["ID"]] = _req_int(sup, "supID", source)

    for st_id, sup_id in parent_of.items():
        if sup_id not in by_id:
            raise IntegrityError(
                f"{source}: semantic type {st_id} names unknown parent {sup_id}"
            )
        child, parent = by_id[st_id], by_id[sup_id]
        child["superType"] = parent
        parent["subTypes"].append(child)

    for st in types:
        seen = set()
        node = st
        while node is not None:
            if node["ID"] in seen:
                raise IntegrityError(
                    f"{source}: semantic type hierarchy contains a cycle through {node['name']!r}"
                )
            seen.add(node["ID"])
            node = node["superType"]
    return types
