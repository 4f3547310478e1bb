import json
from pathlib import Path

import pytest

from centering import DATA_DIR, load_document

FIXTURES = DATA_DIR / "fixtures"
CORPUS = DATA_DIR / "corpus"
LABELED = DATA_DIR / "labeled" / "paper_distribution.jsonl"
GOLDEN = Path(__file__).parent / "golden"

EXPECTED = json.loads((FIXTURES / "expected.json").read_text(encoding="utf-8"))
FIXTURE_NAMES = sorted(EXPECTED)
CORPUS_FILES = sorted(CORPUS.glob("synth*.json"))


def fixture(name):
    return load_document(FIXTURES / name)


@pytest.fixture(scope="session")
def corpus():
    return [load_document(p) for p in CORPUS_FILES]


@pytest.fixture(scope="session")
def manifest():
    return json.loads((CORPUS / "manifest.json").read_text(encoding="utf-8"))


def raw_entity(eid, gender="unspec", number="sg", animate=True, person=3, members=(), deictic=False):
    return {"id": eid, "animate": animate, "gender": gender, "number": number, "person": person,
            "is_set": bool(members), "members": list(members), "deictic": deictic}


def raw_mention(mid, entity, form="name", role="subject", pos=0, clitic=None, possessor=None,
                empathy=False, qis=False, constrained=False):
    return {"id": mid, "entity": entity, "form": form, "role": role, "surface_pos": pos,
            "empathy": empathy, "qis_or_arb": qis, "clitic_position": clitic,
            "possessor": possessor, "constrained": constrained}


def raw_clause(cid, mentions=(), kind="main", order=0, attach_to=None, tensed=True,
               gender="unspec", number="unspec", other=False):
    return {"id": cid, "kind": kind, "attach_to": attach_to, "order": order, "other_construction": other,
            "verbal_complex": {"tensed": tensed, "agr_gender": gender, "agr_number": number},
            "mentions": list(mentions)}


def raw_doc(entities, sentences, doc_id="d", context=None):
    raw = {"doc_id": doc_id, "entities": list(entities),
           "sentences": [{"id": f"s{i + 1}", "clauses": list(cs)} for i, cs in enumerate(sentences)]}
    if context is not None:
        raw["context"] = context
    return raw
