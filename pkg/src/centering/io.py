"""Reading and writing the JSON document format.

Documents are UTF-8 JSON objects, one per file.  The reader is strict:
unknown keys, missing keys and wrongly typed values are rejected, as are
duplicate ids and references to undeclared ids.  :func:`serialize_document`
writes keys in a fixed order so that output is byte-stable.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .errors import DanglingReferenceError, ParseError
from .model import (
    Clause,
    ClauseKind,
    CliticPosition,
    Context,
    Document,
    Entity,
    Form,
    Gender,
    Mention,
    Number,
    Role,
    Sentence,
    VerbalComplex,
)

DOC_KEYS = ("doc_id", "entities", "sentences")
DOC_OPTIONAL_KEYS = ("context",)
ENTITY_KEYS = ("id", "animate", "gender", "number", "person", "is_set", "members", "deictic")
SENTENCE_KEYS = ("id", "clauses")
CLAUSE_KEYS = ("id", "kind", "attach_to", "order", "other_construction", "verbal_complex", "mentions")
VC_KEYS = ("tensed", "agr_gender", "agr_number")
MENTION_KEYS = (
    "id", "entity", "form", "role", "surface_pos", "empathy", "qis_or_arb",
    "clitic_position", "possessor", "constrained",
)
CONTEXT_KEYS = ("cb", "cf")


class _Reader:
    """Typed accessors that report the JSON path of whatever went wrong."""

    def obj(self, value, path, keys, optional=()):
        if not isinstance(value, dict):
            raise ParseError("expected an object", path=path)
        unknown = sorted(set(value) - set(keys) - set(optional))
        if unknown:
            raise ParseError(f"unknown key {unknown[0]!r}", path=path)
        missing = [k for k in keys if k not in value]
        if missing:
            raise ParseError(f"missing key {missing[0]!r}", path=path)
        return value

    def str(self, value, path, nullable=False):
        if value is None and nullable:
            return None
        if not isinstance(value, str):
            raise ParseError("expected a string", path=path)
        return value

    def bool(self, value, path):
        if not isinstance(value, bool):
            raise ParseError("expected true or false", path=path)
        return value

    def int(self, value, path):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError("expected an integer", path=path)
        return value

    def list(self, value, path):
        if not isinstance(value, list):
            raise ParseError("expected an array", path=path)
        return value

    def enum(self, cls, value, path, nullable=False):
        if value is None and nullable:
            return None
        try:
            return cls(value)
        except ValueError:
            allowed = ", ".join(repr(m.value) for m in cls)
            raise ParseError(f"{value!r} is not one of {allowed}", path=path) from None


def _entity(r, raw, path):
    r.obj(raw, path, ENTITY_KEYS)
    person = r.int(raw["person"], path + ".person")
    if person not in (1, 2, 3):
        raise ParseError("person must be 1, 2 or 3", path=path + ".person")
    members = r.list(raw["members"], path + ".members")
    return Entity(
        id=r.str(raw["id"], path + ".id"),
        animate=r.bool(raw["animate"], path + ".animate"),
        gender=r.enum(Gender, raw["gender"], path + ".gender"),
        number=r.enum(Number, raw["number"], path + ".number"),
        person=person,
        is_set=r.bool(raw["is_set"], path + ".is_set"),
        members=tuple(r.str(m, f"{path}.members[{i}]") for i, m in enumerate(members)),
        deictic=r.bool(raw["deictic"], path + ".deictic"),
    )


def _mention(r, raw, path):
    r.obj(raw, path, MENTION_KEYS)
    surface_pos = r.int(raw["surface_pos"], path + ".surface_pos")
    if surface_pos < 0:
        raise ParseError("surface_pos must be nonnegative", path=path + ".surface_pos")
    return Mention(
        id=r.str(raw["id"], path + ".id"),
        entity=r.str(raw["entity"], path + ".entity"),
        form=r.enum(Form, raw["form"], path + ".form"),
        role=r.enum(Role, raw["role"], path + ".role"),
        surface_pos=surface_pos,
        empathy=r.bool(raw["empathy"], path + ".empathy"),
        qis_or_arb=r.bool(raw["qis_or_arb"], path + ".qis_or_arb"),
        clitic_position=r.enum(CliticPosition, raw["clitic_position"], path + ".clitic_position", nullable=True),
        possessor=r.str(raw["possessor"], path + ".possessor", nullable=True),
        constrained=r.bool(raw["constrained"], path + ".constrained"),
    )


def _clause(r, raw, path):
    r.obj(raw, path, CLAUSE_KEYS)
    vc_raw = r.obj(raw["verbal_complex"], path + ".verbal_complex", VC_KEYS)
    vc = VerbalComplex(
        tensed=r.bool(vc_raw["tensed"], path + ".verbal_complex.tensed"),
        agr_gender=r.enum(Gender, vc_raw["agr_gender"], path + ".verbal_complex.agr_gender"),
        agr_number=r.enum(Number, vc_raw["agr_number"], path + ".verbal_complex.agr_number"),
    )
    mentions = r.list(raw["mentions"], path + ".mentions")
    return Clause(
        id=r.str(raw["id"], path + ".id"),
        kind=r.enum(ClauseKind, raw["kind"], path + ".kind"),
        attach_to=r.str(raw["attach_to"], path + ".attach_to", nullable=True),
        order=r.int(raw["order"], path + ".order"),
        other_construction=r.bool(raw["other_construction"], path + ".other_construction"),
        verbal_complex=vc,
        mentions=tuple(_mention(r, m, f"{path}.mentions[{i}]") for i, m in enumerate(mentions)),
    )


def _check_references(doc: Document) -> None:
    ents = doc.entity_map
    for e in doc.entities:
        for m in e.members:
            if m not in ents:
                raise DanglingReferenceError(m, f"members of entity {e.id!r}")
    for s in doc.sentences:
        clause_ids = {c.id for c in s.clauses}
        for c in s.clauses:
            if c.attach_to is not None and c.attach_to not in clause_ids:
                raise DanglingReferenceError(c.attach_to, f"attach_to of clause {c.id!r}")
            for m in c.mentions:
                if m.entity not in ents:
                    raise DanglingReferenceError(m.entity, f"mention {m.id!r}")
                if m.possessor is not None and m.possessor not in ents:
                    raise DanglingReferenceError(m.possessor, f"possessor of mention {m.id!r}")
    if doc.context is not None:
        for eid in doc.context.cf + ((doc.context.cb,) if doc.context.cb else ()):
            if eid not in ents:
                raise DanglingReferenceError(eid, "context")


def document_from_dict(raw: Any) -> Document:
    r = _Reader()
    r.obj(raw, "$", DOC_KEYS, optional=DOC_OPTIONAL_KEYS)
    entities = r.list(raw["entities"], "$.entities")
    sentences = r.list(raw["sentences"], "$.sentences")
    sents = []
    for i, s in enumerate(sentences):
        path = f"$.sentences[{i}]"
        r.obj(s, path, SENTENCE_KEYS)
        clauses = r.list(s["clauses"], path + ".clauses")
        sents.append(Sentence(
            id=r.str(s["id"], path + ".id"),
            clauses=tuple(_clause(r, c, f"{path}.clauses[{j}]") for j, c in enumerate(clauses)),
        ))
    context = None
    if raw.get("context") is not None:
        ctx = r.obj(raw["context"], "$.context", CONTEXT_KEYS)
        cf = r.list(ctx["cf"], "$.context.cf")
        context = Context(
            cf=tuple(r.str(x, f"$.context.cf[{i}]") for i, x in enumerate(cf)),
            cb=r.str(ctx["cb"], "$.context.cb", nullable=True),
        )
    doc = Document(
        doc_id=r.str(raw["doc_id"], "$.doc_id"),
        entities=tuple(_entity(r, e, f"$.entities[{i}]") for i, e in enumerate(entities)),
        sentences=tuple(sents),
        context=context,
    )
    _check_references(doc)
    return doc


def parse_document(data: Union[bytes, str]) -> Document:
    """Parse one document from UTF-8 bytes (or an already decoded string)."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc.reason}") from None
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return document_from_dict(raw)


def load_document(path: Union[str, Path]) -> Document:
    return parse_document(Path(path).read_bytes())


def document_to_dict(doc: Document) -> dict:
    def mention(m: Mention):
        return {
            "id": m.id,
            "entity": m.entity,
            "form": m.form.value,
            "role": m.role.value,
            "surface_pos": m.surface_pos,
            "empathy": m.empathy,
            "qis_or_arb": m.qis_or_arb,
            "clitic_position": m.clitic_position.value if m.clitic_position else None,
            "possessor": m.possessor,
            "constrained": m.constrained,
        }

    def clause(c: Clause):
        vc = c.verbal_complex
        return {
            "id": c.id,
            "kind": c.kind.value,
            "attach_to": c.attach_to,
            "order": c.order,
            "other_construction": c.other_construction,
            "verbal_complex": {
                "tensed": vc.tensed,
                "agr_gender": vc.agr_gender.value,
                "agr_number": vc.agr_number.value,
            },
            "mentions": [mention(m) for m in c.mentions],
        }

    out = {
        "doc_id": doc.doc_id,
        "entities": [
            {
                "id": e.id,
                "animate": e.animate,
                "gender": e.gender.value,
                "number": e.number.value,
                "person": e.person,
                "is_set": e.is_set,
                "members": list(e.members),
                "deictic": e.deictic,
            }
            for e in doc.entities
        ],
        "sentences": [{"id": s.id, "clauses": [clause(c) for c in s.clauses]} for s in doc.sentences],
    }
    if doc.context is not None:
        out["context"] = {"cb": doc.context.cb, "cf": list(doc.context.cf)}
    return out


def serialize_document(doc: Document) -> bytes:
    text = json.dumps(document_to_dict(doc), ensure_ascii=False, indent=2)
    return (text + "\n").encode("utf-8")


def dumps_line(obj) -> str:
    """One compact JSON line with no trailing newline."""
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))

