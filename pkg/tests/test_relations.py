import pytest

from framelex.errors import LookupFailure


def test_relation_types_registry(lexicon):
    types = lexicon.frame_relation_types()
    assert [t.name for t in types] == ["Inheritance", "Subframe", "Perspective_on"]
    inh = types[0]
    assert (inh.superFrameName, inh.subFrameName) == ("Parent", "Child")
    assert len(inh.frameRelations) == 3


def test_all_relations(lexicon):
    rels = lexicon.frame_relations()
    assert len(rels) == 4
    assert {r.ID for r in rels} == {802, 803, 810, 820}


def test_relations_for_one_frame_either_side(lexicon):
    ids = {r.ID for r in lexicon.frame_relations(frame="Event")}
    assert ids == {802, 803, 820}
    assert {r.ID for r in lexicon.frame_relations(frame=347)} == {810}


def test_relations_frame_pair(lexicon):
    rels = lexicon.frame_relations(frame="Rewards_and_punishments", frame2="Revenge")
    assert [r.ID for r in rels] == [810]
    # pair order does not matter
    rels = lexicon.frame_relations(frame="Revenge", frame2="Rewards_and_punishments")
    assert [r.ID for r in rels] == [810]


def test_relations_frame2_requires_frame(lexicon):
    with pytest.raises(ValueError):
        lexicon.frame_relations(frame2="Revenge")


def test_relations_type_filter(lexicon):
    rels = lexicon.frame_relations(type="Subframe")
    assert [r.ID for r in rels] == [820]
    assert lexicon.frame_relations(frame="Revenge", type="Subframe") == []
    with pytest.raises(LookupFailure):
        lexicon.frame_relations(type="NoSuchType")


def test_relation_record_shape(lexicon):
    rel = lexicon.frame_relations(frame="Revenge")[0]
    assert rel.superFrameName == "Rewards_and_punishments"
    assert rel.subFrameName == "Revenge"
    assert rel.type.name == "Inheritance"
    assert rel.superFrame.ID == 344
    assert rel.subFrame.ID == 347


def test_fe_relations_bundle(lexicon):
    fe_rels = lexicon.fe_relations()
    assert len(fe_rels) == 13
    pair = next(
        fr for fr in fe_rels
        if fr.superFEName == "Agent" and fr.subFEName == "Avenger"
    )
    assert pair.frameRelation.ID == 810
    assert pair.superFE.ID == 2501
    assert pair.subFE.ID == 3009


def test_frame_record_relations_attribute(lexicon):
    frame = lexicon.frame("Revenge")
    assert [r.ID for r in frame.frameRelations] == [810]


def test_semtype_forest(lexicon):
    sts = lexicon.semtypes()
    assert len(sts) == 10
    roots = [st for st in sts if st.superType is None]
    assert {st.name for st in roots} == {"Physical_entity", "Abstract_entity"}
    sentient = lexicon.semtype("Sentient")
    assert sentient.superType.name == "Animate_being"
    assert lexicon.semtype(5) is sentient
    assert lexicon.semtype("sent") is sentient
    with pytest.raises(LookupFailure):
        lexicon.semtype("X")


def test_semtype_inherits_chain(lexicon):
    assert lexicon.semtype_inherits("Sentient", "Sentient")
    assert lexicon.semtype_inherits("Sentient", "Animate_being")
    assert lexicon.semtype_inherits("Sentient", "Physical_entity")
    assert not lexicon.semtype_inherits("Physical_entity", "Sentient")
    assert not lexicon.semtype_inherits("Sentient", "Abstract_entity")
    assert not lexicon.semtype_inherits("Time", "Locale")


def test_propagation_fills_and_counts(lexicon):
    revenge = lexicon.frame("Revenge")
    assert revenge.FE["Avenger"].semType is None
    added = lexicon.propagate_semtypes()
    assert added == 4
    assert revenge.FE["Avenger"].semType.name == "Sentient"
    assert revenge.FE["Time"].semType.name == "Time"
    assert revenge.FE["Place"].semType.name == "Locale"
    rp = lexicon.frame("Rewards_and_punishments")
    assert rp.FE["Place"].semType.name == "Locale"


def test_propagation_is_idempotent(lexicon):
    assert lexicon.propagate_semtypes() == 4
    assert lexicon.propagate_semtypes() == 0
    assert lexicon.propagate_semtypes() == 0


def test_propagation_never_overwrites(lexicon):
    revenge = lexicon.frame("Revenge")
    aware = lexicon.frame("Becoming_aware")
    before = {
        ("Revenge", "Degree"): revenge.FE["Degree"].semType.ID,
        ("Becoming_aware", "Place"): aware.FE["Place"].semType.ID,
    }
    lexicon.propagate_semtypes()
    # both FEs already disagreed with their parent FE; the local value stays
    assert revenge.FE["Degree"].semType.ID == before[("Revenge", "Degree")] == 54
    assert aware.FE["Place"].semType.ID == before[("Becoming_aware", "Place")] == 210


def test_propagation_is_monotone(lexicon):
    def snapshot():
        state = {}
        for frame in lexicon.frames():
            for fe in frame.FE.values():
                st = fe.semType
                state[(frame.ID, fe.ID)] = None if st is None else st.ID
        return state

    before = snapshot()
    lexicon.propagate_semtypes()
    after = snapshot()
    for key, value in before.items():
        if value is not None:
            assert after[key] == value
    assert sum(v is not None for v in after.values()) >= sum(
        v is not None for v in before.values()
    )
