"""Annotated-discourse data model.

A :class:`Document` is a list of entities plus an ordered list of sentences;
each sentence is a list of clauses and each clause carries its mentions and
the agreement features of its verbal complex.  All values are frozen
dataclasses holding tuples, so equality is structural and documents can be
shared freely.

Enum values are the strings used by the JSON file format.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping, Optional

from .errors import DuplicateIdError


class Gender(enum.Enum):
    MASCULINE = "masc"
    FEMININE = "fem"
    UNSPECIFIED = "unspec"


class Number(enum.Enum):
    SINGULAR = "sg"
    PLURAL = "pl"
    UNSPECIFIED = "unspec"


class Form(enum.Enum):
    NULL_SUBJECT = "null"
    STRONG_PRONOUN = "strong"
    WEAK_CLITIC = "clitic"
    FULL_NP = "np"
    NAME = "name"
    OTHER_ANAPHOR = "other"


class Role(enum.Enum):
    SUBJECT = "subject"
    OBJECT2 = "object2"
    OBJECT = "object"
    OBLIQUE = "oblique"
    OTHER = "other"


class CliticPosition(enum.Enum):
    # "climbed" covers every clitic that precedes the tensed verb, whether it
    # climbed out of an infinitive or simply sits in front of a finite verb.
    CLIMBED = "climbed"
    IN_SITU = "in_situ"


class ClauseKind(enum.Enum):
    MAIN = "main"
    CONJUNCT = "conjunct"
    TENSED_ADJUNCT = "tensed_adjunct"
    TENSELESS_ADJUNCT = "tenseless_adjunct"
    COMPLEMENT = "complement"
    RELATIVE = "relative"
    IMPERSONAL = "impersonal"


#: clause kinds that must name a host clause
ATTACHED_KINDS = frozenset({
    ClauseKind.TENSED_ADJUNCT,
    ClauseKind.TENSELESS_ADJUNCT,
    ClauseKind.COMPLEMENT,
    ClauseKind.RELATIVE,
})

#: clause kinds whose subjects are not counted and which produce no unit
EXCLUDED_KINDS = frozenset({ClauseKind.RELATIVE, ClauseKind.IMPERSONAL})

PRONOUN_SUBJECT_FORMS = frozenset({Form.NULL_SUBJECT, Form.STRONG_PRONOUN})


@dataclass(frozen=True)
class Entity:
    id: str
    animate: bool = True
    gender: Gender = Gender.UNSPECIFIED
    number: Number = Number.SINGULAR
    person: int = 3
    is_set: bool = False
    members: tuple[str, ...] = ()
    deictic: bool = False


@dataclass(frozen=True)
class Mention:
    id: str
    entity: str
    form: Form
    role: Role
    surface_pos: int
    empathy: bool = False
    qis_or_arb: bool = False
    clitic_position: Optional[CliticPosition] = None
    possessor: Optional[str] = None
    constrained: bool = False

    @property
    def is_pronominal(self) -> bool:
        return self.form in (Form.NULL_SUBJECT, Form.STRONG_PRONOUN, Form.WEAK_CLITIC)


@dataclass(frozen=True)
class VerbalComplex:
    tensed: bool = True
    agr_gender: Gender = Gender.UNSPECIFIED
    agr_number: Number = Number.UNSPECIFIED


@dataclass(frozen=True)
class Clause:
    id: str
    kind: ClauseKind
    order: int
    mentions: tuple[Mention, ...] = ()
    attach_to: Optional[str] = None
    other_construction: bool = False
    verbal_complex: VerbalComplex = field(default_factory=VerbalComplex)

    @property
    def subject(self) -> Optional[Mention]:
        for m in self.mentions:
            if m.role is Role.SUBJECT:
                return m
        return None


@dataclass(frozen=True)
class Sentence:
    id: str
    clauses: tuple[Clause, ...]

    def in_surface_order(self) -> list[Clause]:
        return sorted(self.clauses, key=lambda c: c.order)


@dataclass(frozen=True)
class Context:
    """Centering state of the utterance preceding an excerpt.

    Constructed examples are usually introduced with the Cb and Cf of an
    utterance that is not itself part of the excerpt; a document may record
    that state so that its first unit is classified against it.
    """

    cf: tuple[str, ...]
    cb: Optional[str] = None


@dataclass(frozen=True)
class Document:
    doc_id: str
    entities: tuple[Entity, ...]
    sentences: tuple[Sentence, ...]
    context: Optional[Context] = None

    def __post_init__(self):
        _check_unique((e.id for e in self.entities), "entity")
        _check_unique((s.id for s in self.sentences), "sentence")
        _check_unique((c.id for c in self.clauses()), "clause")
        _check_unique((m.id for m in self.mentions()), "mention")

    @cached_property
    def entity_map(self) -> Mapping[str, Entity]:
        return {e.id: e for e in self.entities}

    def entity(self, entity_id: str) -> Entity:
        return self.entity_map[entity_id]

    def clauses(self) -> Iterator[Clause]:
        for s in self.sentences:
            yield from s.in_surface_order()

    def mentions(self) -> Iterator[Mention]:
        for c in self.clauses():
            yield from sorted(c.mentions, key=lambda m: m.surface_pos)

    def clause_of(self) -> dict[str, Clause]:
        """Map mention id to the clause containing it."""
        return {m.id: c for c in self.clauses() for m in c.mentions}


def _check_unique(ids, kind):
    seen = set()
    for i in ids:
        if i in seen:
            raise DuplicateIdError(i, kind)
        seen.add(i)


def is_eligible(mention: Mention, clause: Clause, entities: Mapping[str, Entity]) -> bool:
    """Whether ``mention`` counts as a subject pronoun for the statistics."""
    if mention.role is not Role.SUBJECT or mention.form not in PRONOUN_SUBJECT_FORMS:
        return False
    if mention.constrained or clause.kind in EXCLUDED_KINDS:
        return False
    ent = entities[mention.entity]
    return ent.person == 3 and ent.animate


def eligible_pronouns(doc: Document) -> list[Mention]:
    """Third-person animate null and strong subjects free of syntactic constraints.

    Subjects annotated as ``constrained`` (contraindexing, or a null subject in
    a non-initial conjunct coreferent with the previous conjunct's subject)
    and subjects of impersonal or relative clauses are left out.  The result
    follows document order.
    """
    ents = doc.entity_map
    out = []
    for clause in doc.clauses():
        for m in sorted(clause.mentions, key=lambda m: m.surface_pos):
            if is_eligible(m, clause, ents):
                out.append(m)
    return out
