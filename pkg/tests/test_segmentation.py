import pytest
from conftest import EXPECTED, FIXTURE_NAMES, fixture, raw_clause, raw_doc, raw_entity, raw_mention

from centering import AttachmentCycleError, DanglingReferenceError, segment, unit_count
from centering.io import document_from_dict
from centering.model import Clause, ClauseKind, Document, Entity, Sentence
from centering.segmentation import unit_of_clause


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_unit_counts(name):
    assert unit_count(fixture(name)) == EXPECTED[name]["units"]


def test_manifest_unit_counts(corpus, manifest):
    for doc in corpus:
        counts = manifest["documents"][f"{doc.doc_id}.json"]
        assert unit_count(doc) == counts["units"]
        assert unit_count(doc, split_complements=True) == counts["units_split_complements"]


def test_gerund_merges_into_host():
    units = segment(fixture("irais_ret_cont.json"))
    first = units[0]
    assert first.source_clauses == ("s1.c1", "s1.c2")
    assert [m.id for m in first.mentions] == ["m1", "m2", "m3", "m4"]


def test_preposed_adjunct_comes_first():
    units = segment(fixture("lazy_ones.json"))
    assert [u.id for u in units] == ["s1.c1", "s1.c2"]
    assert [u.position for u in units] == [0, 1]


def test_simple_sentences():
    raw = raw_doc([raw_entity("a")], [[raw_clause("c1", [raw_mention("m1", "a")])],
                                      [raw_clause("c2", [raw_mention("m2", "a", form="null")])],
                                      [raw_clause("c3")]])
    units = segment(document_from_dict(raw))
    assert [u.id for u in units] == ["c1", "c2", "c3"]


def test_empty_document():
    assert unit_count(fixture("empty.json")) == 0


def complex_sentence():
    ents = [raw_entity(x) for x in "abcdefg"]
    clauses = [
        raw_clause("adj", [raw_mention("m1", "a")], kind="tensed_adjunct", order=0, attach_to="main"),
        raw_clause("main", [raw_mention("m2", "b"), raw_mention("m3", "c", role="object", pos=1)], order=1),
        raw_clause("comp", [raw_mention("m4", "d")], kind="complement", order=2, attach_to="main"),
        raw_clause("rel", [raw_mention("m5", "e")], kind="relative", order=3, attach_to="comp"),
        raw_clause("ger", [raw_mention("m6", "f", form="clitic", role="object", clitic="in_situ")],
                   kind="tenseless_adjunct", order=4, attach_to="rel", tensed=False),
        raw_clause("imp", [raw_mention("m7", "g", form="np", role="object")], kind="impersonal", order=5),
        raw_clause("conj", [raw_mention("m8", "a", form="null")], kind="conjunct", order=6),
    ]
    return document_from_dict(raw_doc(ents, [clauses]))


def test_dropped_kinds_and_merging():
    units = segment(complex_sentence())
    assert [u.source_clauses for u in units] == [("adj",), ("main", "comp", "ger"), ("conj",)]
    mention_ids = [m.id for u in units for m in u.mentions]
    assert "m5" not in mention_ids and "m7" not in mention_ids
    # the gerund hangs off a dropped relative; it lands with that relative's host
    assert mention_ids == ["m1", "m2", "m3", "m4", "m6", "m8"]


def test_split_complements_keeps_mention_order():
    doc = complex_sentence()
    merged = [m.id for u in segment(doc) for m in u.mentions]
    split_units = segment(doc, split_complements=True)
    assert [u.source_clauses for u in split_units] == [("adj",), ("main",), ("comp", "ger"), ("conj",)]
    assert [m.id for u in split_units for m in u.mentions] == merged


def test_units_partition_live_clauses(corpus):
    for doc in corpus:
        for split in (False, True):
            units = segment(doc, split)
            seen = [c for u in units for c in u.source_clauses]
            live = [c.id for c in doc.clauses() if c.kind.value not in ("relative", "impersonal")]
            assert sorted(seen) == sorted(live)
            assert [u.position for u in units] == list(range(len(units)))
            ids = [m.id for u in units for m in u.mentions]
            assert len(ids) == len(set(ids))
            assert unit_of_clause(units).keys() == set(seen)


def test_segmenting_twice_is_identical(corpus):
    for doc in corpus:
        assert segment(doc) == segment(doc)


def test_center_embedded_adjunct_sits_at_its_position():
    ents = [raw_entity("a"), raw_entity("b")]
    clauses = [
        raw_clause("main", [raw_mention("m1", "a")], order=0),
        raw_clause("adj", [raw_mention("m2", "b")], kind="tensed_adjunct", order=1, attach_to="main"),
        raw_clause("conj", [raw_mention("m3", "a", form="null")], kind="conjunct", order=2),
    ]
    units = segment(document_from_dict(raw_doc(ents, [clauses])))
    assert [u.id for u in units] == ["main", "adj", "conj"]


def test_dangling_and_cyclic_attachment_refused():
    dangling = Document("d", (Entity("a"),), (Sentence("s", (
        Clause("c1", ClauseKind.COMPLEMENT, 0, attach_to="zz"),)),))
    with pytest.raises(DanglingReferenceError):
        segment(dangling)
    cyclic = Document("d", (), (Sentence("s", (
        Clause("c1", ClauseKind.COMPLEMENT, 0, attach_to="c2"),
        Clause("c2", ClauseKind.RELATIVE, 1, attach_to="c1"),)),))
    with pytest.raises(AttachmentCycleError):
        segment(cyclic)
