"""Cf ranking, Cb computation and transition classification.

The Cf ranking is::

    empathy > subject > object2 > object > others > qis / pro_arb

with ties broken by position in the unit.  Deictic participants are never
ranked: they belong to the global focus.  A possessive NP realizes two
entities; the possessor is ranked right before the possessed entity when the
latter is inanimate and right after it when it is animate.

Two transitions extend the usual four: CENT_EST, where a subject pronoun
picks up an entity that is not on the previous Cf list (an entity from the
global focus, or a member of a set that is on the list), and OTHER, for
constructions annotated as unanalyzed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Optional

from .model import Document, Entity, Mention, PRONOUN_SUBJECT_FORMS, Role
from .segmentation import CenteringUnit, segment


class Transition(enum.Enum):
    FIRST = "FIRST"
    CONTINUE = "CONTINUE"
    RETAIN = "RETAIN"
    SMOOTH_SHIFT = "SMOOTH_SHIFT"
    ROUGH_SHIFT = "ROUGH_SHIFT"
    CENT_EST = "CENT_EST"
    OTHER = "OTHER"


class Bigram(enum.Enum):
    CONT_CONT = "CONT_CONT"
    SHIFT_CONT = "SHIFT_CONT"
    RET_CONT = "RET_CONT"


@dataclass(frozen=True)
class CenteringState:
    unit: str
    cf: tuple[str, ...]
    cb: Optional[str]
    cp: Optional[str]
    transition: Transition
    bigram: Optional[Bigram] = None

    def to_dict(self) -> dict:
        return {
            "unit": self.unit,
            "cf": list(self.cf),
            "cb": self.cb,
            "cp": self.cp,
            "transition": self.transition.value,
            "bigram": self.bigram.value if self.bigram else None,
        }


_ROLE_RANK = {Role.SUBJECT: 1, Role.OBJECT2: 2, Role.OBJECT: 3, Role.OBLIQUE: 4, Role.OTHER: 4}


def rank_class(m: Mention) -> int:
    if m.empathy:
        return 0
    if m.qis_or_arb:
        return 5
    return _ROLE_RANK[m.role]


def rank_cf(unit: CenteringUnit, entities: Mapping[str, Entity]) -> list[str]:
    order = sorted(range(len(unit.mentions)), key=lambda i: (rank_class(unit.mentions[i]), i))
    out: list[str] = []
    for i in order:
        m = unit.mentions[i]
        slots = [m.entity]
        if m.possessor is not None:
            if entities[m.entity].animate:
                slots.append(m.possessor)
            else:
                slots.insert(0, m.possessor)
        for eid in slots:
            if eid not in out and not entities[eid].deictic:
                out.append(eid)
    return out


def realizations(unit: CenteringUnit) -> dict[str, bool]:
    """Entities realized in ``unit`` mapped to whether some realization is pronominal.

    Possessive adjectives count as pronominal realizations of the possessor.
    Set members are not realized by a mention of their set.
    """
    out: dict[str, bool] = {}
    for m in unit.mentions:
        out[m.entity] = out.get(m.entity, False) or m.is_pronominal
        if m.possessor is not None:
            out[m.possessor] = True
    return out


def compute_cb(unit: CenteringUnit, prev: Optional[CenteringState]) -> Optional[str]:
    """Backward-looking center of ``unit``.

    Candidates are the elements of the previous Cf list realized in the unit.
    If any candidate is realized pronominally only those are kept.  The
    previous Cb stays the Cb whenever it is still a candidate; otherwise the
    highest-ranked candidate wins.
    """
    if prev is None or not prev.cf:
        return None
    real = realizations(unit)
    candidates = [e for e in prev.cf if e in real]
    if not candidates:
        return None
    pronominal = [e for e in candidates if real[e]]
    if pronominal:
        candidates = pronominal
    if prev.cb in candidates:
        return prev.cb
    return candidates[0]


def subject_pronouns(unit: CenteringUnit, entities: Mapping[str, Entity]) -> list[Mention]:
    return [
        m for m in unit.mentions
        if m.role is Role.SUBJECT and m.form in PRONOUN_SUBJECT_FORMS and not entities[m.entity].deictic
    ]


def establishes_center(unit, prev, entities) -> bool:
    """Whether a subject pronoun of ``unit`` refers outside the previous Cf list.

    Such a referent normally comes from the global focus or is a member of a
    set on the previous Cf list; a pronoun anchored in neither is treated the
    same way, since nothing local licenses it either.
    """
    return any(m.entity not in prev.cf for m in subject_pronouns(unit, entities))


def classify_transition(prev, unit, cb, cf, entities) -> Transition:
    if prev is None:
        return Transition.FIRST
    if unit.other_construction:
        return Transition.OTHER
    if establishes_center(unit, prev, entities) or cb is None:
        return Transition.CENT_EST
    cp = cf[0] if cf else None
    same = prev.cb is None or cb == prev.cb
    if same:
        return Transition.CONTINUE if cb == cp else Transition.RETAIN
    return Transition.SMOOTH_SHIFT if cb == cp else Transition.ROUGH_SHIFT


_BIGRAMS = {
    Transition.CONTINUE: Bigram.CONT_CONT,
    Transition.RETAIN: Bigram.RET_CONT,
    Transition.SMOOTH_SHIFT: Bigram.SHIFT_CONT,
    Transition.ROUGH_SHIFT: Bigram.SHIFT_CONT,
}


def bigram_label(prev_transition: Optional[Transition], current: Transition) -> Optional[Bigram]:
    if current is not Transition.CONTINUE:
        return None
    return _BIGRAMS.get(prev_transition)


def initial_focus(doc: Document) -> frozenset[str]:
    focus = {e.id for e in doc.entities if e.deictic}
    if doc.context is not None:
        focus.update(doc.context.cf)
    return frozenset(focus)


def focus_sequence(doc: Document, units: list[CenteringUnit]) -> list[frozenset[str]]:
    """Global focus available to each unit: deictics, context, and earlier mentions."""
    focus = initial_focus(doc)
    out = []
    for unit in units:
        out.append(focus)
        focus = focus.union(realizations(unit))
    return out


def context_state(doc: Document) -> Optional[CenteringState]:
    ctx = doc.context
    if ctx is None:
        return None
    return CenteringState(
        unit="", cf=ctx.cf, cb=ctx.cb, cp=ctx.cf[0] if ctx.cf else None, transition=Transition.FIRST,
    )


def analyze_units(doc: Document, units: list[CenteringUnit]) -> list[CenteringState]:
    ents = doc.entity_map
    prev = context_state(doc)
    states = []
    for unit in units:
        cf = rank_cf(unit, ents)
        cb = compute_cb(unit, prev)
        transition = classify_transition(prev, unit, cb, cf, ents)
        bigram = bigram_label(prev.transition if prev else None, transition)
        state = CenteringState(unit.id, tuple(cf), cb, cf[0] if cf else None, transition, bigram)
        states.append(state)
        prev = state
    return states


def analyze(doc: Document, split_complements: bool = False) -> list[CenteringState]:
    return analyze_units(doc, segment(doc, split_complements))
