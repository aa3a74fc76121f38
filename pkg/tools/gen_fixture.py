#!/usr/bin/env python3
"""Regenerate the test corpus under tests/data/fixture17/.

The fixture is a miniature lexical database in the FrameNet 1.7 on-disk
format: index files, per-frame files, two LU exemplar files, a relation
registry, a semantic type registry, and two full-text documents.  Every
annotated character span is computed from token positions in the sentence
text, and the handful of spans that the test goldens depend on are asserted
below, so text and offsets cannot drift apart.

Deterministic: running it twice produces byte-identical files.
"""

import sys
from pathlib import Path
from xml.etree import ElementTree as ET

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "fixture17"

XMLNS = "http://framenet.icsi.berkeley.edu"
CDATE = "02/07/2001 04:12:10 PST Wed"
CBY = "664"


# ---------------------------------------------------------------- tokens

class Toks:
    """Token offsets over a space-joined sentence; spans are inclusive."""

    def __init__(self, words):
        self.words = list(words)
        self.text = " ".join(self.words)
        self.starts = []
        pos = 0
        for w in self.words:
            self.starts.append(pos)
            pos += len(w) + 1

    def span(self, i, j=None):
        j = i if j is None else j
        return (self.starts[i], self.starts[j] + len(self.words[j]) - 1)


# ---------------------------------------------------------------- xml out

def write_xml(relpath, root):
    tree = ET.ElementTree(root)
    ET.indent(tree, space="    ")
    path = OUT / relpath
    path.parent.mkdir(parents=True, exist_ok=True)
    tree.write(path, encoding="UTF-8", xml_declaration=True)
    with open(path, "ab") as fh:
        fh.write(b"\n")


def E(tag, parent=None, text=None, **attrs):
    attrs = {k: str(v) for k, v in attrs.items()}
    elt = ET.Element(tag, attrs) if parent is None else ET.SubElement(parent, tag, attrs)
    if text is not None:
        elt.text = text
    return elt


# ---------------------------------------------------------------- lexicon

SEMTYPES = {
    # name: (ID, abbrev, parent name or None, definition)
    "Physical_entity": (70, "phys", None, "An entity with a location in physical space."),
    "Living_thing": (66, "liv", "Physical_entity", "A physical entity that is alive."),
    "Animate_being": (4, "anim", "Living_thing", "A living thing that can move on its own."),
    "Sentient": (5, "sent", "Animate_being", "An animate being with thoughts and feelings."),
    "Non_sentient": (54, "nonsent", "Animate_being", "An animate being without higher cognition."),
    "Locale": (9, "loc", "Physical_entity", "A stable bounded area of space."),
    "Region": (210, "reg", "Locale", "A locale defined by salient features of the terrain."),
    "Abstract_entity": (200, "abs", None, "An entity with no location in physical space."),
    "Time": (141, "tim", "Abstract_entity", "A point or span on the time line."),
    "Degree_type": (172, "deg", "Abstract_entity", "A position on an intensity scale."),
}

# File order mixes children before parents so linking cannot be single-pass.
SEMTYPE_FILE_ORDER = [
    "Sentient", "Animate_being", "Locale", "Non_sentient", "Living_thing",
    "Physical_entity", "Time", "Degree_type", "Abstract_entity", "Region",
]

REVENGE_DEF = (
    "<def-root>An <fen>Avenger</fen> carries out a <fen>Punishment</fen> on a "
    "<fen>Offender</fen> in response to an earlier action, the <fen>Injury</fen>, "
    "that the <fen>Offender</fen> directed at the <fen>Injured_party</fen>. The "
    "<fen>Avenger</fen> delivering the<fen>Punishment</fen> need not be the "
    "<fen>Injured_Party</fen> harmed by the <fen>Injury</fen>, but both hold the "
    "<fen>Offender</fen> responsible, and the score is settled outside the law.\n\n"
    '<ex><fex name="Avenger">The brothers</fex> <t>avenged</t> '
    '<fex name="Injured_party">their cousin</fex> at last.</ex>  '
    "<ex><fex name=\"Avenger\">Morag</fex> swore she would take <t>revenge</t> "
    '<fex name="Offender">on the raiders</fex>..</ex></def-root>'
)

# frame name: (ID, frame-level semtypes, definition markup,
#              [(feName, feID, coreType, semtype, abbrev)],
#              [(luName, luID, status, annotated, total)],
#              [core set FE name lists])
FRAMES = {
    "Event": (
        5,
        ["Abstract_entity"],
        "<def-root>An <fen>Event</fen> takes place at a certain <fen>Place</fen> "
        "and <fen>Time</fen>.</def-root>",
        [
            ("Event", 401, "Core", None, "Evnt"),
            ("Place", 402, "Peripheral", "Locale", "Place"),
            ("Time", 403, "Peripheral", None, "Time"),
        ],
        [
            ("happen.v", 1001, "Finished_Initial", 0, 0),
            ("occur.v", 1002, "Finished_Initial", 0, 0),
            ("event.n", 1003, "Created", 0, 0),
        ],
        [],
    ),
    "Cooking_creation": (
        268,
        [],
        "<def-root>A <fen>Cook</fen> creates the <fen>Produced_food</fen> from raw "
        "ingredients, often using a <fen>Heating_instrument</fen>.</def-root>",
        [
            ("Cook", 2901, "Core", "Sentient", "Cook"),
            ("Produced_food", 2902, "Core", None, "Food"),
            ("Heating_instrument", 2903, "Peripheral", None, "Heat"),
        ],
        [
            ("bake.v", 4001, "Finished_Initial", 0, 0),
            ("cook.v", 4002, "Finished_Initial", 0, 0),
            ("concoct.v", 4003, "Created", 0, 0),
        ],
        [],
    ),
    "Rewards_and_punishments": (
        344,
        [],
        "<def-root>An <fen>Agent</fen> performs a <fen>Response_action</fen> on an "
        "<fen>Evaluee</fen> for a <fen>Reason</fen>, an earlier action judged good "
        "or bad.</def-root>",
        [
            ("Agent", 2501, "Core", "Sentient", "Agt"),
            ("Evaluee", 2502, "Core", None, "Evl"),
            ("Response_action", 2503, "Core", None, "Resp"),
            ("Reason", 2504, "Core", None, "Reas"),
            ("Time", 2505, "Peripheral", "Time", "Time"),
            ("Place", 2506, "Peripheral", None, "Place"),
            ("Manner", 2507, "Peripheral", None, "Manr"),
            ("Degree", 2508, "Peripheral", "Degree_type", "Degr"),
        ],
        [
            ("punish.v", 6100, "Finished_Initial", 0, 0),
            ("reward.v", 6101, "Finished_Initial", 0, 0),
            ("punishment.n", 6102, "Finished_Initial", 0, 0),
            ("reward.n", 6103, "Created", 0, 0),
        ],
        [["Evaluee", "Reason"]],
    ),
    "Revenge": (
        347,
        [],
        REVENGE_DEF,
        [
            ("Avenger", 3009, "Core", None, "Ave"),
            ("Degree", 3010, "Peripheral", "Non_sentient", "Degr"),
            ("Depictive", 3011, "Extra-Thematic", None, "Depict"),
            ("Offender", 3012, "Core", None, "Off"),
            ("Instrument", 3013, "Peripheral", None, "Ins"),
            ("Manner", 3014, "Peripheral", None, "Manr"),
            ("Punishment", 3015, "Core", None, "Pun"),
            ("Place", 3016, "Peripheral", None, "Place"),
            ("Purpose", 3017, "Peripheral", None, "Purp"),
            ("Injury", 3018, "Core", None, "Inj"),
            ("Result", 3020, "Extra-Thematic", None, "Res"),
            ("Time", 3021, "Peripheral", None, "Time"),
            ("Injured_party", 3022, "Core", None, "InjP"),
            ("Duration", 12060, "Peripheral", None, "Dur"),
        ],
        [
            ("avenge.v", 6056, "Finished_Initial", 0, 0),
            ("avenger.n", 6057, "Finished_Initial", 0, 0),
            ("vengeance.n", 6058, "Finished_Initial", 0, 0),
            ("retaliate.v", 6065, "Finished_Initial", 0, 0),
            ("revenge.v", 6066, "Finished_Initial", 0, 0),
            ("revenge.n", 6067, "FN1_Sent", 21, 21),
            ("vengeful.a", 6068, "Finished_Initial", 0, 0),
            ("vindictive.a", 6069, "Finished_Initial", 0, 0),
            ("retribution.n", 6070, "Finished_Initial", 0, 0),
            ("retaliation.n", 6071, "Finished_Initial", 0, 0),
            ("revenger.n", 6072, "Created", 0, 0),
            ("revengeful.a", 6073, "Created", 0, 0),
            ("retributive.a", 6074, "Created", 0, 0),
            ("get even.v", 6075, "Finished_Initial", 0, 0),
            ("retributory.a", 6076, "Created", 0, 0),
            ("get back (at).v", 10003, "Created", 0, 0),
            ("payback.n", 10124, "Created", 0, 0),
            ("sanction.n", 10676, "Created", 0, 0),
        ],
        [["Injury", "Injured_party"], ["Avenger", "Punishment"]],
    ),
    "Waking_up": (
        1017,
        [],
        "<def-root>A <fen>Sleeper</fen> leaves the sleep state at a certain "
        "<fen>Time</fen>.</def-root>",
        [
            ("Sleeper", 3201, "Core", "Sentient", "Slpr"),
            ("Time", 3202, "Peripheral", None, "Time"),
        ],
        [
            ("awaken.v", 5331, "FN1_Sent", 1, 1),
            ("wake.v", 5332, "Finished_Initial", 0, 0),
        ],
        [],
    ),
    "Omen": (
        1180,
        [],
        "<def-root>A <fen>Predictive_phenomenon</fen> is taken as a sign of a "
        "future <fen>Outcome</fen>.</def-root>",
        [
            ("Predictive_phenomenon", 3301, "Core", None, "Phen"),
            ("Outcome", 3302, "Core", None, "Out"),
        ],
        [
            ("betoken.v", 7544, "FN1_Sent", 1, 1),
            ("presage.v", 7545, "Finished_Initial", 0, 0),
        ],
        [],
    ),
    "Create_physical_artwork": (
        1658,
        [],
        "<def-root>A <fen>Creator</fen> produces a physical object bearing a "
        "<fen>Representation</fen>.</def-root>",
        [
            ("Creator", 3101, "Core", "Sentient", "Crea"),
            ("Representation", 3102, "Core", None, "Rep"),
        ],
        [
            ("paint.v", 12001, "Finished_Initial", 0, 0),
            ("sculpt.v", 12002, "Created", 0, 0),
        ],
        [],
    ),
    "Seeking": (
        2001,
        [],
        "<def-root>A <fen>Seeker</fen> tries to locate the "
        "<fen>Sought_entity</fen>.</def-root>",
        [
            ("Seeker", 2701, "Core", "Sentient", "Skr"),
            ("Sought_entity", 2702, "Core", None, "Sght"),
            ("Time", 2703, "Peripheral", None, "Time"),
            ("Place", 2704, "Peripheral", None, "Place"),
        ],
        [
            ("seek.v", 11001, "Finished_Initial", 0, 0),
            ("search.v", 11002, "Finished_Initial", 0, 0),
        ],
        [],
    ),
    "Process_start": (
        2002,
        [],
        "<def-root>An <fen>Event</fen> begins at a certain <fen>Time</fen> and "
        "<fen>Place</fen>.</def-root>",
        [
            ("Event", 2601, "Core", None, "Evnt"),
            ("Time", 2602, "Peripheral", None, "Time"),
            ("Place", 2603, "Peripheral", None, "Place"),
        ],
        [
            ("begin.v", 2280, "Finished_Initial", 0, 0),
            ("commence.v", 2281, "Finished_Initial", 0, 0),
        ],
        [],
    ),
    "Becoming_aware": (
        2003,
        [],
        "<def-root>A <fen>Cognizer</fen> comes to know about a "
        "<fen>Phenomenon</fen>.</def-root>",
        [
            ("Cognizer", 2801, "Core", "Sentient", "Cog"),
            ("Phenomenon", 2802, "Core", None, "Phen"),
            ("Time", 2803, "Peripheral", None, "Time"),
            ("Place", 2804, "Peripheral", "Region", "Place"),
        ],
        [
            ("find out.v", 7458, "Finished_Initial", 0, 0),
            ("discover.v", 7459, "Finished_Initial", 0, 0),
            ("notice.v", 7460, "Created", 0, 0),
        ],
        [],
    ),
}

# Multi-word LUs and their lexeme decomposition; others get one lexeme.
MULTI_LEXEMES = {
    "get even.v": [("get", "V", True, False), ("even", "A", False, False)],
    "get back (at).v": [
        ("get", "V", True, False),
        ("back", "ADV", False, False),
        ("at", "PREP", False, True),
    ],
    "find out.v": [("find", "V", True, False), ("out", "ADV", False, False)],
}

FE_DEFS = {
    "Avenger": "The being that carries out the <fen>Punishment</fen>.",
    "Offender": "The being held responsible for the <fen>Injury</fen>.",
    "Punishment": "The harmful action directed at the <fen>Offender</fen>.",
    "Injury": "The earlier action that is being repaid.",
    "Injured_party": "The being harmed by the <fen>Injury</fen>.",
}

RELATION_TYPES = [
    # (typeID, name, superRole, subRole, [(relID, supFrame, subFrame, [(feRelID, supFE, subFE)])])
    (1, "Inheritance", "Parent", "Child", [
        (810, "Rewards_and_punishments", "Revenge", [
            (9001, "Agent", "Avenger"),
            (9002, "Evaluee", "Offender"),
            (9003, "Response_action", "Punishment"),
            (9004, "Reason", "Injury"),
            (9005, "Time", "Time"),
            (9006, "Place", "Place"),
            (9007, "Manner", "Manner"),
            (9008, "Degree", "Degree"),
        ]),
        (802, "Event", "Rewards_and_punishments", [
            (9101, "Time", "Time"),
            (9102, "Place", "Place"),
        ]),
        (803, "Event", "Becoming_aware", [
            (9103, "Time", "Time"),
            (9104, "Place", "Place"),
        ]),
    ]),
    (2, "Subframe", "Complex", "Component", [
        (820, "Event", "Process_start", [
            (9201, "Time", "Time"),
        ]),
    ]),
    (4, "Perspective_on", "Neutral", "Perspectivized", []),
]


def frame_id(name):
    return FRAMES[name][0]


def fe_id(frame_name, fe_name):
    for name, fid, *_ in FRAMES[frame_name][3]:
        if name == fe_name:
            return fid
    raise KeyError((frame_name, fe_name))


def fe_abbrev_map(frame_name):
    return {name: abbrev for name, _, _, _, abbrev in FRAMES[frame_name][3]}


# ---------------------------------------------------------------- indexes

def gen_frame_index():
    root = E(
        "frameIndex",
        xmlns=XMLNS,
        **{
            "xmlns:xsi": "http://www.w3.org/2001/XMLSchema-instance",
            "xsi:schemaLocation": f"{XMLNS} frameIndex.xsd",
            "XMLCreated": CDATE,
        },
    )
    for name, entry in sorted(FRAMES.items(), key=lambda kv: kv[1][0]):
        E("frame", root, ID=entry[0], name=name, mDate=CDATE)
    write_xml("frameIndex.xml", root)


def all_lu_rows():
    rows = []
    for name, entry in FRAMES.items():
        for lu_name, lu_id, status, _, _ in entry[4]:
            rows.append((lu_id, lu_name, entry[0], name, status))
    return sorted(rows)


def gen_lu_index():
    root = E("luIndex", xmlns=XMLNS, XMLCreated=CDATE)
    for lu_id, lu_name, fid, frame_name, status in all_lu_rows():
        E(
            "lu", root, ID=lu_id, name=lu_name, frameID=fid,
            frameName=frame_name, status=status, hasAnnotation="true",
        )
    write_xml("luIndex.xml", root)


def gen_fulltext_index():
    root = E("fulltextIndex", xmlns=XMLNS, XMLCreated=CDATE)
    corpus = E(
        "corpus", root, description="Selected detective stories",
        name="Sherlock", ID=195,
    )
    E("document", corpus, ID=23802, name="Tiger_Of_San_Pedro",
      description="The Tiger of San Pedro")
    E("document", corpus, ID=23803, name="Wisteria_Report",
      description="Wisteria Lodge report")
    write_xml("fulltextIndex.xml", root)


# ---------------------------------------------------------------- frames

def lexemes_for(lu_name):
    if lu_name in MULTI_LEXEMES:
        return MULTI_LEXEMES[lu_name]
    lemma, _, pos = lu_name.rpartition(".")
    return [(lemma, pos.upper(), True, False)]


def gen_frame_files():
    for name, (fid, frame_sts, definition, fes, lus, core_sets) in FRAMES.items():
        root = E("frame", xmlns=XMLNS, cBy=CBY, cDate=CDATE, name=name, ID=fid)
        E("definition", root, text=definition)
        for st_name in frame_sts:
            st_id, abbrev, _, _ = SEMTYPES[st_name]
            E("semType", root, name=st_name, ID=st_id)
        for fe_name, feid, core_type, st_name, abbrev in fes:
            fe = E(
                "FE", root, bgColor="FF0000", fgColor="FFFFFF",
                coreType=core_type, cBy=CBY, cDate=CDATE,
                abbrev=abbrev, name=fe_name, ID=feid,
            )
            body = FE_DEFS.get(fe_name, f"The <fen>{fe_name}</fen> of the frame.")
            E("definition", fe, text=f"<def-root>{body}</def-root>")
            if st_name is not None:
                E("semType", fe, name=st_name, ID=SEMTYPES[st_name][0])
        for members in core_sets:
            cs = E("FEcoreSet", root)
            for member in members:
                E("memberFE", cs, name=member, ID=fe_id(name, member))
        # Editorial cross-reference block; readers are expected to skip it.
        for rel_line in _frame_relation_texture(name):
            root.append(rel_line)
        for lu_name, lu_id, status, annotated, total in lus:
            lemma = lu_name.rpartition(".")[0]
            lu = E(
                "lexUnit", root, status=status,
                POS=lu_name.rpartition(".")[2].upper(),
                name=lu_name, ID=lu_id, lemmaID=lu_id + 90000,
                cBy=CBY, cDate=CDATE,
            )
            E("definition", lu, text=f"COD: {lemma} in the {name} sense")
            E("sentenceCount", lu, annotated=annotated, total=total)
            for order, (lex_name, pos, headword, break_before) in enumerate(
                lexemes_for(lu_name), start=1
            ):
                E(
                    "lexeme", lu, order=order,
                    headword=str(headword).lower(),
                    breakBefore=str(break_before).lower(),
                    POS=pos, name=lex_name,
                )
        write_xml(f"frame/{name}.xml", root)


def _frame_relation_texture(name):
    lines = []
    for _, type_name, _, _, rels in RELATION_TYPES:
        for _, sup, sub, _ in rels:
            if name == sub:
                elt = E("frameRelation", type="Inherits from")
                E("relatedFrame", elt, text=sup, ID=frame_id(sup))
                lines.append(elt)
            elif name == sup:
                elt = E("frameRelation", type="Is Inherited by")
                E("relatedFrame", elt, text=sub, ID=frame_id(sub))
                lines.append(elt)
    return lines


# ---------------------------------------------------------------- relations

def gen_relations():
    root = E("frameRelations", xmlns=XMLNS, XMLCreated=CDATE)
    for type_id, type_name, sup_role, sub_role, rels in RELATION_TYPES:
        rtype = E(
            "frameRelationType", root, ID=type_id, name=type_name,
            superFrameName=sup_role, subFrameName=sub_role,
        )
        for rel_id, sup, sub, fe_rels in rels:
            rel = E(
                "frameRelation", rtype, ID=rel_id,
                superFrameName=sup, subFrameName=sub,
                supID=frame_id(sup), subID=frame_id(sub),
            )
            for ferel_id, sup_fe, sub_fe in fe_rels:
                E(
                    "FERelation", rel, ID=ferel_id,
                    superFEName=sup_fe, subFEName=sub_fe,
                    supID=fe_id(sup, sup_fe), subID=fe_id(sub, sub_fe),
                )
    write_xml("frRelation.xml", root)


def gen_semtypes():
    root = E("semTypes", xmlns=XMLNS, XMLCreated=CDATE)
    for name in SEMTYPE_FILE_ORDER:
        st_id, abbrev, parent, definition = SEMTYPES[name]
        st = E("semType", root, abbrev=abbrev, name=name, ID=st_id)
        E("definition", st, text=definition)
        if parent is not None:
            E("superType", st, superTypeName=parent, supID=SEMTYPES[parent][0])
    write_xml("semTypes.xml", root)


# ---------------------------------------------------------------- sentences

def add_layer(aset, name, labels, rank=1):
    layer = E("layer", aset, rank=rank, name=name)
    for label in labels:
        E("label", layer, **label)
    return layer


def span_label(name, span, **extra):
    start, end = span
    return dict(cBy=CBY, start=start, end=end, name=name, **extra)


def pos_layer_labels(toks, tags, skip=()):
    labels = []
    tag_iter = iter(tags)
    for i, word in enumerate(toks.words):
        if word in skip:
            continue
        labels.append(dict(name=next(tag_iter), start=toks.span(i)[0], end=toks.span(i)[1]))
    rest = list(tag_iter)
    assert not rest, f"unused tags: {rest}"
    return labels


BNC_PUNCT = ()        # the BNC layer tags punctuation tokens too
PENN_PUNCT = (",", ".", '"')


def lex_sentence(parent, sent_id, sent_no, a_pos, toks, bnc_tags, frame_layers):
    """One lexicographic sentence: a BNC POS set plus one frame set."""
    sent = E("sentence", parent, sentNo=sent_no, aPos=a_pos, ID=sent_id)
    E("text", sent, text=toks.text)
    pos_set = E("annotationSet", sent, cDate=CDATE, status="UNANN", ID=sent_id * 10 + 1)
    add_layer(pos_set, "BNC", pos_layer_labels(toks, bnc_tags, skip=BNC_PUNCT))
    frame_set = E("annotationSet", sent, cDate=CDATE, status="MANUAL", ID=sent_id * 10 + 2)
    for name, labels, rank in frame_layers:
        add_layer(frame_set, name, labels, rank=rank)
    # Empty editorial layers appear in real files; readers keep them harmlessly.
    add_layer(frame_set, "Sent", [])
    add_layer(frame_set, "Other", [])
    return sent


def gen_lu_revenge():
    root = E(
        "lexUnit", xmlns=XMLNS, status="FN1_Sent", POS="N", name="revenge.n",
        ID=6067, frame="Revenge", frameID=347, totalAnnotated=21,
    )
    E("definition", root, text="COD: revenge in the Revenge sense")
    matched = E("subCorpus", root, name="other-matched")

    # 20 padding sentences keep the golden sentence at exemplar index 20.
    ini = Toks("She vowed revenge on her rival .".split())
    lex_sentence(
        matched, 929501, 0, 1000100, ini,
        ["PNP", "VVD", "NN1", "PRP", "DPS", "NN1", "PUN"],
        [
            ("Target", [span_label("Target", ini.span(2))], 1),
            ("FE", [
                span_label("Avenger", ini.span(0), feID=3009),
                span_label("Offender", ini.span(3, 5), feID=3012),
                dict(cBy=CBY, name="Injury", itype="INI", feID=3018),
            ], 1),
            ("GF", [span_label("Ext", ini.span(0)), span_label("Dep", ini.span(3, 5))], 1),
            ("PT", [span_label("NP", ini.span(0)), span_label("PP", ini.span(3, 5))], 1),
            ("Noun", [span_label("Supp", ini.span(1))], 1),
        ],
    )

    cni = Toks("Revenge was taken swiftly .".split())
    lex_sentence(
        matched, 929502, 0, 1000200, cni,
        ["NN1", "VBD", "VVN", "AV0", "PUN"],
        [
            ("Target", [span_label("Target", cni.span(0))], 1),
            ("FE", [
                span_label("Time", cni.span(3), feID=3021),
                dict(cBy=CBY, name="Avenger", itype="CNI", feID=3009),
            ], 1),
            ("GF", [span_label("Dep", cni.span(3))], 1),
            ("PT", [span_label("AVP", cni.span(3))], 1),
            ("Verb", [span_label("Supp", cni.span(2))], 1),
        ],
    )

    fe2 = Toks("The family took revenge on the killers for the murder .".split())
    lex_sentence(
        matched, 929503, 0, 1000300, fe2,
        ["AT0", "NN1", "VVD", "NN1", "PRP", "AT0", "NN2", "PRP", "AT0", "NN1", "PUN"],
        [
            ("Target", [span_label("Target", fe2.span(3))], 1),
            ("FE", [
                span_label("Avenger", fe2.span(0, 1), feID=3009),
                span_label("Offender", fe2.span(4, 6), feID=3012),
                span_label("Injury", fe2.span(7, 9), feID=3018),
            ], 1),
            ("FE", [span_label("Injured_party", fe2.span(0, 1), feID=3022)], 2),
            ("GF", [
                span_label("Ext", fe2.span(0, 1)),
                span_label("Dep", fe2.span(4, 6)),
                span_label("Dep", fe2.span(7, 9)),
            ], 1),
            ("PT", [
                span_label("NP", fe2.span(0, 1)),
                span_label("PP", fe2.span(4, 6)),
                span_label("PP", fe2.span(7, 9)),
            ], 1),
            ("Noun", [span_label("Supp", fe2.span(2))], 1),
        ],
    )

    long = Toks(
        "After the long and bitter winter campaign the soldiers finally "
        "took their revenge on the garrison of the northern fortress .".split()
    )
    assert len(long.text) == 124
    assert long.span(7, 8) == (42, 53)      # the soldiers
    assert long.span(9) == (55, 61)         # finally
    assert long.span(10, 12) == (63, 80)    # took their revenge
    assert long.span(12) == (74, 80)        # revenge
    assert long.span(13, 19) == (82, 121)   # on ... fortress
    lex_sentence(
        matched, 929504, 0, 1000400, long,
        ["PRP", "AT0", "AJ0", "CJC", "AJ0", "NN1", "NN1", "AT0", "NN2", "AV0",
         "VVD", "DPS", "NN1", "PRP", "AT0", "NN1", "PRF", "AT0", "AJ0", "NN1", "PUN"],
        [
            ("Target", [span_label("Target", long.span(12))], 1),
            ("FE", [
                span_label("Avenger", long.span(7, 8), feID=3009),
                span_label("Time", long.span(9), feID=3021),
                span_label("Punishment", long.span(10, 12), feID=3015),
                span_label("Offender", long.span(13, 19), feID=3012),
            ], 1),
            ("GF", [span_label("Ext", long.span(7, 8)), span_label("Dep", long.span(13, 19))], 1),
            ("PT", [span_label("NP", long.span(7, 8)), span_label("PP", long.span(13, 19))], 1),
            ("Noun", [span_label("Supp", long.span(10))], 1),
        ],
    )

    pairs = [
        ("Anna", "Mark"), ("Bill", "Nora"), ("Carla", "Owen"), ("Derek", "Pria"),
        ("Elena", "Quinn"), ("Frank", "Rosa"), ("Greta", "Sam"), ("Henry", "Tessa"),
        ("Ivan", "Ulf"), ("Jane", "Vera"), ("Karl", "Wendy"), ("Lena", "Xan"),
        ("Milo", "Yara"), ("Nina", "Zane"), ("Oscar", "Abel"), ("Petra", "Boris"),
    ]
    for k, (subj, obj) in enumerate(pairs):
        t = Toks(f"{subj} took revenge on {obj} .".split())
        lex_sentence(
            matched, 929505 + k, 0, 1000500 + 100 * k, t,
            ["NP0", "VVD", "NN1", "PRP", "NP0", "PUN"],
            [
                ("Target", [span_label("Target", t.span(2))], 1),
                ("FE", [
                    span_label("Avenger", t.span(0), feID=3009),
                    span_label("Offender", t.span(3, 4), feID=3012),
                ], 1),
                ("GF", [span_label("Ext", t.span(0)), span_label("Dep", t.span(3, 4))], 1),
                ("PT", [span_label("NP", t.span(0)), span_label("PP", t.span(3, 4))], 1),
                ("Noun", [span_label("Supp", t.span(1))], 1),
            ],
        )

    added = E("subCorpus", root, name="manually-added")
    tok = Toks("A short while later Joseph had his revenge on Watney 's .".split())
    assert len(tok.text) == 57
    assert tok.span(0, 3) == (0, 18)     # A short while later
    assert tok.span(4) == (20, 25)       # Joseph
    assert tok.span(5) == (27, 29)       # had
    assert tok.span(6) == (31, 33)       # his
    assert tok.span(7) == (35, 41)       # revenge
    assert tok.span(8, 10) == (43, 54)   # on Watney 's
    lex_sentence(
        added, 929548, 0, 1113164, tok,
        ["AT0", "AJ0", "NN1", "AV0", "NP0", "VHD", "DPS", "NN1", "PRP", "NP0", "POS", "PUN"],
        [
            ("Target", [span_label("Target", tok.span(7))], 1),
            ("FE", [
                span_label("Time", tok.span(0, 3), feID=3021),
                span_label("Avenger", tok.span(4), feID=3009),
                span_label("Avenger", tok.span(6), feID=3009),
                span_label("Offender", tok.span(8, 10), feID=3012),
                dict(cBy=CBY, name="Injury", itype="DNI", feID=3018),
            ], 1),
            ("GF", [
                span_label("Dep", tok.span(0, 3)),
                span_label("Ext", tok.span(4)),
                span_label("Gen", tok.span(6)),
                span_label("Dep", tok.span(8, 10)),
            ], 1),
            ("PT", [
                span_label("AVP", tok.span(0, 3)),
                span_label("NP", tok.span(4)),
                span_label("Poss", tok.span(6)),
                span_label("PP", tok.span(8, 10)),
            ], 1),
            ("Noun", [span_label("Supp", tok.span(5))], 1),
        ],
    )
    write_xml("lu/lu6067.xml", root)


def gen_lu_awaken():
    root = E(
        "lexUnit", xmlns=XMLNS, status="FN1_Sent", POS="V", name="awaken.v",
        ID=5331, frame="Waking_up", frameID=1017, totalAnnotated=1,
    )
    E("definition", root, text="COD: awaken in the Waking_up sense")
    sub = E("subCorpus", root, name="other-matched")
    t = Toks("He awakened slowly from a deep sleep .".split())
    lex_sentence(
        sub, 820001, 0, 500100, t,
        ["PNP", "VVD", "AV0", "PRP", "AT0", "AJ0", "NN1", "PUN"],
        [
            ("Target", [span_label("Target", t.span(1))], 1),
            ("FE", [span_label("Sleeper", t.span(0), feID=3201)], 1),
            ("GF", [span_label("Ext", t.span(0))], 1),
            ("PT", [span_label("NP", t.span(0))], 1),
            ("Verb", [], 1),
        ],
    )
    write_xml("lu/lu5331.xml", root)


def gen_lu_betoken():
    root = E(
        "lexUnit", xmlns=XMLNS, status="FN1_Sent", POS="V", name="betoken.v",
        ID=7544, frame="Omen", frameID=1180, totalAnnotated=1,
    )
    E("definition", root, text="COD: betoken in the Omen sense")
    sub = E("subCorpus", root, name="other-matched")
    t = Toks("Dark clouds betoken a coming storm .".split())
    lex_sentence(
        sub, 830001, 0, 600100, t,
        ["AJ0", "NN2", "VVB", "AT0", "AJ0", "NN1", "PUN"],
        [
            ("Target", [span_label("Target", t.span(2))], 1),
            ("FE", [
                span_label("Predictive_phenomenon", t.span(0, 1), feID=3301),
                span_label("Outcome", t.span(3, 5), feID=3302),
            ], 1),
            ("GF", [span_label("Ext", t.span(0, 1)), span_label("Obj", t.span(3, 5))], 1),
            ("PT", [span_label("NP", t.span(0, 1)), span_label("NP", t.span(3, 5))], 1),
        ],
    )
    write_xml("lu/lu7544.xml", root)


# ---------------------------------------------------------------- fulltext

def ft_sentence(parent, sent_id, sent_no, parag_no, a_pos, toks, penn_tags):
    sent = E(
        "sentence", parent, corpID=195, docID=23802, sentNo=sent_no,
        paragNo=parag_no, aPos=a_pos, ID=sent_id,
    )
    E("text", sent, text=toks.text)
    pos_set = E("annotationSet", sent, cDate=CDATE, status="UNANN", ID=sent_id * 10 + 1)
    add_layer(pos_set, "PENN", pos_layer_labels(toks, penn_tags, skip=PENN_PUNCT))
    return sent


def frame_aset(sent, aset_id, lu_name, lu_id, frame_name, status, layers):
    aset = E(
        "annotationSet", sent, cDate=CDATE, luID=lu_id, luName=lu_name,
        frameID=frame_id(frame_name), frameName=frame_name,
        status=status, ID=aset_id,
    )
    for name, labels, rank in layers:
        add_layer(aset, name, labels, rank=rank)
    return aset


def gen_fulltext_tiger():
    root = E("fullTextAnnotation", xmlns=XMLNS)
    header = E("header", root)
    corpus = E(
        "corpus", header, description="Selected detective stories",
        name="Sherlock", ID=195,
    )
    E("document", corpus, ID=23802, name="Tiger_Of_San_Pedro",
      description="The Tiger of San Pedro")

    s1 = Toks("My friend Watson and I heard the tale from the inspector himself .".split())
    sent = ft_sentence(
        root, 4148526, 1, 1, 100, s1,
        ["PRP$", "NN", "NNP", "CC", "PRP", "VBD", "DT", "NN", "IN", "DT", "NN", "PRP"],
    )
    # A named-entity layer rides along in the first set; readers keep it as-is.
    add_layer(sent.find("annotationSet"), "NER", [span_label("person", s1.span(2))])

    s2 = Toks("The man had begun to seek his revenge against them all .".split())
    assert s2.span(3) == (12, 16)        # begun
    assert s2.span(4, 10) == (18, 53)    # to ... all
    assert s2.span(7) == (30, 36)        # revenge
    sent = ft_sentence(
        root, 4148527, 2, 1, 168, s2,
        ["DT", "NN", "VBD", "VBN", "TO", "VB", "PRP$", "NN", "IN", "PRP", "DT"],
    )
    frame_aset(sent, 41485272, "begin.v", 2280, "Process_start", "MANUAL", [
        ("Target", [span_label("Target", s2.span(3))], 1),
        ("FE", [span_label("Event", s2.span(4, 10), feID=2601)], 1),
        ("GF", [span_label("Dep", s2.span(4, 10))], 1),
        ("PT", [span_label("VPto", s2.span(4, 10))], 1),
    ])
    frame_aset(sent, 41485273, "revenge.n", 6067, "Revenge", "UNANN", [
        ("Target", [span_label("Target", s2.span(7))], 1),
    ])

    s3 = Toks(
        "They 've been looking for him all the time for their revenge , "
        'but it is only now that they have begun to find him out . "'.split()
    )
    assert len(s3.text) == 122
    assert s3.span(3) == (14, 20)      # looking
    assert s3.span(5) == (26, 28)      # him
    assert s3.span(10) == (47, 51)     # their
    assert s3.span(11) == (53, 59)     # revenge
    assert s3.span(19) == (87, 90)     # they
    assert s3.span(21) == (97, 101)    # begun
    assert s3.span(22, 25) == (103, 117)  # to find him out
    assert s3.span(23) == (106, 109)   # find
    assert s3.span(24) == (111, 113)   # him
    assert s3.span(25) == (115, 117)   # out
    sent = ft_sentence(
        root, 4148528, 3, 2, 226, s3,
        ["PRP", "VBP", "VBN", "VBG", "IN", "PRP", "DT", "DT", "NN", "IN", "PRP$",
         "NN", "CC", "PRP", "VBZ", "RB", "RB", "IN", "PRP", "VBP", "VBN", "TO",
         "VB", "PRP", "RP"],
    )
    frame_aset(sent, 41485282, "begin.v", 2280, "Process_start", "MANUAL", [
        ("Target", [span_label("Target", s3.span(21))], 1),
        ("FE", [span_label("Event", s3.span(22, 25), feID=2601)], 1),
        ("GF", [span_label("Dep", s3.span(22, 25))], 1),
        ("PT", [span_label("VPto", s3.span(22, 25))], 1),
    ])
    frame_aset(sent, 41485283, "revenge.n", 6067, "Revenge", "MANUAL", [
        ("Target", [span_label("Target", s3.span(11))], 1),
        ("FE", [
            span_label("Avenger", s3.span(10), feID=3009),
            span_label("Offender", s3.span(5), feID=3012),
            dict(cBy=CBY, name="Injury", itype="DNI", feID=3018),
        ], 1),
        ("GF", [span_label("Gen", s3.span(10)), span_label("Dep", s3.span(5))], 1),
        ("PT", [span_label("Poss", s3.span(10)), span_label("NP", s3.span(5))], 1),
    ])
    frame_aset(sent, 41485284, "look.v", 18997, "Seeking", "MANUAL", [
        ("Target", [span_label("Target", s3.span(3))], 1),
        ("FE", [
            span_label("Seeker", s3.span(0), feID=2701),
            span_label("Sought_entity", s3.span(5), feID=2702),
        ], 1),
        ("GF", [span_label("Ext", s3.span(0)), span_label("Dep", s3.span(5))], 1),
        ("PT", [span_label("NP", s3.span(0)), span_label("PP", s3.span(5))], 1),
    ])
    frame_aset(sent, 41485285, "find out.v", 7458, "Becoming_aware", "MANUAL", [
        ("Target", [
            span_label("Target", s3.span(23)),
            span_label("Target", s3.span(25)),
        ], 1),
        ("FE", [
            span_label("Cognizer", s3.span(19), feID=2801),
            span_label("Phenomenon", s3.span(24), feID=2802),
        ], 1),
        ("GF", [span_label("Ext", s3.span(19)), span_label("Obj", s3.span(24))], 1),
        ("PT", [span_label("NP", s3.span(19)), span_label("NP", s3.span(24))], 1),
    ])
    write_xml("fulltext/Tiger_Of_San_Pedro.xml", root)


def gen_fulltext_wisteria():
    # Stored under the corpus-prefixed fallback name on purpose.
    root = E("fullTextAnnotation", xmlns=XMLNS)
    header = E("header", root)
    corpus = E(
        "corpus", header, description="Selected detective stories",
        name="Sherlock", ID=195,
    )
    E("document", corpus, ID=23803, name="Wisteria_Report",
      description="Wisteria Lodge report")
    write_xml("fulltext/Sherlock__Wisteria_Report.xml", root)


def main():
    gen_frame_index()
    gen_lu_index()
    gen_fulltext_index()
    gen_frame_files()
    gen_relations()
    gen_semtypes()
    gen_lu_revenge()
    gen_lu_awaken()
    gen_lu_betoken()
    gen_fulltext_tiger()
    gen_fulltext_wisteria()
    n = sum(1 for _ in OUT.rglob("*.xml"))
    print(f"wrote {n} files under {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
