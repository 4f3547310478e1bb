import pytest
from conftest import FIXTURE_NAMES, fixture, raw_clause, raw_doc, raw_entity, raw_mention

from centering import validate_document
from centering.io import document_from_dict
from centering.model import Clause, ClauseKind, Context, Document, Entity, Mention, Form, Role, Sentence
from centering.validation import INVARIANTS


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixtures_are_clean(name):
    assert validate_document(fixture(name)) == []


def test_synthetic_corpus_is_clean(corpus):
    for doc in corpus:
        assert validate_document(doc) == []


def codes(doc):
    return [(v.object_id, v.invariant) for v in validate_document(doc)]


def test_two_subjects_in_one_clause():
    raw = raw_doc([raw_entity("a"), raw_entity("b")],
                  [[raw_clause("c1", [raw_mention("m1", "a"), raw_mention("m2", "b", pos=1)])]])
    assert codes(document_from_dict(raw)) == [("c1", "clause.single_subject")]


def test_set_without_members():
    ent = dict(raw_entity("grp", number="pl"), is_set=True)
    raw = raw_doc([ent], [[raw_clause("c1")]])
    assert codes(document_from_dict(raw)) == [("grp", "entity.members")]


def test_members_on_non_set():
    ent = dict(raw_entity("a"), members=["b"])
    raw = raw_doc([ent, raw_entity("b")], [])
    assert codes(document_from_dict(raw)) == [("a", "entity.members")]


def test_membership_cycle():
    ents = (Entity("a", is_set=True, members=("b",)), Entity("b", is_set=True, members=("a",)))
    found = codes(Document("d", ents, ()))
    assert ("a", "entity.member_cycle") in found and ("b", "entity.member_cycle") in found


def test_third_person_deictic():
    doc = Document("d", (Entity("x", deictic=True),), ())
    assert codes(doc) == [("x", "entity.deixis")]


def test_clitic_position_mismatch():
    bad = [raw_mention("m1", "a", form="clitic", role="object"),
           raw_mention("m2", "a", form="name", role="oblique", pos=1, clitic="climbed")]
    raw = raw_doc([raw_entity("a")], [[raw_clause("c1", bad)]])
    assert codes(document_from_dict(raw)) == [("m1", "mention.clitic_position"), ("m2", "mention.clitic_position")]


def test_possessor_equal_to_entity():
    raw = raw_doc([raw_entity("a")], [[raw_clause("c1", [raw_mention("m1", "a", form="np", possessor="a")])]])
    assert codes(document_from_dict(raw)) == [("m1", "mention.possessor")]


def test_attach_to_rules():
    raw = raw_doc([raw_entity("a")], [[
        raw_clause("c1"),
        raw_clause("c2", kind="complement", order=1),
        raw_clause("c3", kind="conjunct", order=2, attach_to="c1"),
    ]])
    assert codes(document_from_dict(raw)) == [("c2", "clause.attach_to"), ("c3", "clause.attach_to")]


def test_duplicate_order():
    raw = raw_doc([raw_entity("a")], [[raw_clause("c1"), raw_clause("c2", kind="conjunct", order=0)]])
    assert codes(document_from_dict(raw)) == [("c2", "clause.order")]


def test_untensed_with_agreement():
    raw = raw_doc([raw_entity("a")], [[raw_clause("c1"), raw_clause(
        "c2", kind="tenseless_adjunct", order=1, attach_to="c1", tensed=False, gender="fem")]])
    assert codes(document_from_dict(raw)) == [("c2", "verbal_complex.untensed")]


def test_attachment_cycle_reported_once():
    clauses = (
        Clause("c1", ClauseKind.COMPLEMENT, 0, attach_to="c2"),
        Clause("c2", ClauseKind.COMPLEMENT, 1, attach_to="c1"),
    )
    assert codes(Document("d", (), (Sentence("s1", clauses),))) == [("c1", "clause.attach_cycle")]


def test_hand_built_dangling_refs():
    m = Mention("m1", "ghost", Form.NAME, Role.SUBJECT, 0)
    doc = Document("d", (), (Sentence("s1", (Clause("c1", ClauseKind.MAIN, 0, (m,)),)),))
    assert codes(doc) == [("m1", "mention.entity_ref")]


def test_context_refs():
    doc = Document("d", (Entity("a"),), (), Context(cf=("a",), cb="b"))
    assert codes(doc) == [("d", "context.refs")]


def test_every_code_is_a_declared_invariant(corpus):
    # mix of bad documents; each violation must cite a known invariant
    docs = [
        Document("d", (Entity("x", deictic=True), Entity("g", is_set=True)), ()),
        Document("d", (Entity("a", is_set=True, members=("a",)),), ()),
    ]
    for doc in docs + corpus:
        for v in validate_document(doc):
            assert v.invariant in INVARIANTS
            assert str(v).split("\t")[:2] == [v.object_id, v.invariant]
