"""Null-subject interpretation from the clues up to the verbal complex.

What the hearer knows by the time the tensed verb is processed: the
agreement features of the finite verb and of an agreeing participle, and
every clitic placed before the verb (including clitics that climbed out of
an infinitive).  Clitics left on a lower infinitive arrive too late: if they
exclude the default referent, the hearer has to revise an interpretation
already made, a garden path.

A clitic in the same clause as the null subject cannot corefer with it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Optional

from .core import Bigram, CenteringState, Transition, analyze_units, context_state
from .errors import UnresolvedError
from .model import (
    CliticPosition,
    Document,
    Entity,
    Form,
    Gender,
    Mention,
    Number,
    Role,
    is_eligible,
)
from .segmentation import CenteringUnit, segment, unit_of_clause


class Prediction(enum.Enum):
    NULL_SUBJECT = "null"
    STRONG_PRONOUN = "strong"
    EITHER = "either"


@dataclass(frozen=True)
class ClueSet:
    agr_gender: Gender = Gender.UNSPECIFIED
    agr_number: Number = Number.UNSPECIFIED
    climbed_clitics: tuple[str, ...] = ()
    late_clitics: tuple[str, ...] = ()

    def summary(self) -> dict:
        return {
            "agr_gender": self.agr_gender.value,
            "agr_number": self.agr_number.value,
            "climbed": list(self.climbed_clitics),
            "late": list(self.late_clitics),
        }


@dataclass(frozen=True)
class Resolution:
    referent: str
    default_was_overridden: bool
    garden_path: bool


def extract_clues(unit: CenteringUnit) -> ClueSet:
    climbed, late = [], []
    for m in unit.mentions:
        if m.form is not Form.WEAK_CLITIC:
            continue
        target = climbed if m.clitic_position is CliticPosition.CLIMBED else late
        if m.entity not in target:
            target.append(m.entity)
    vc = unit.verbal_complex
    return ClueSet(vc.agr_gender, vc.agr_number, tuple(climbed), tuple(late))


def agrees(entity: Entity, clues: ClueSet) -> bool:
    g, n = clues.agr_gender, clues.agr_number
    if Gender.UNSPECIFIED not in (g, entity.gender) and g is not entity.gender:
        return False
    if Number.UNSPECIFIED not in (n, entity.number) and n is not entity.number:
        return False
    return True


def early_compatible(entity_id, clues, entities) -> bool:
    """Compatible with everything up to and including the verbal complex."""
    return agrees(entities[entity_id], clues) and entity_id not in clues.climbed_clitics


def default_referent(prev: CenteringState) -> Optional[str]:
    return prev.cb if prev.cb is not None else prev.cp


def unit_subject(unit: CenteringUnit) -> Optional[Mention]:
    for m in unit.mentions:
        if m.role is Role.SUBJECT:
            return m
    return None


def resolve_null_subject(unit, prev, clues, entities: Mapping[str, Entity]) -> Resolution:
    """Pick the referent of the unit's subject pronoun from the previous Cf list.

    The previous Cb is the default and is tried first; the rest of the Cf
    list follows in rank order.  Garden paths are only reported for null
    subjects; an overt pronoun is never misinterpreted this way.
    """
    if prev is None or not prev.cf:
        raise UnresolvedError(f"unit {unit.id!r}: no previous Cf list")
    order = sorted(prev.cf, key=lambda e: e != prev.cb)
    early = [e for e in order if early_compatible(e, clues, entities)]
    final = [e for e in early if e not in clues.late_clitics]
    if not final:
        raise UnresolvedError(f"unit {unit.id!r}: no candidate survives agreement and clitic filters")
    referent = final[0]
    cb = prev.cb
    overridden = cb is not None and referent != cb
    subj = unit_subject(unit)
    is_null = subj is not None and subj.form is Form.NULL_SUBJECT
    garden = is_null and cb is not None and cb in early and cb in clues.late_clitics
    return Resolution(referent, overridden, garden)


def predict_form(transition, bigram, clues, prev, entities) -> Prediction:
    if transition is Transition.CONTINUE:
        return Prediction.EITHER if bigram is Bigram.RET_CONT else Prediction.NULL_SUBJECT
    if transition in (Transition.RETAIN, Transition.SMOOTH_SHIFT, Transition.ROUGH_SHIFT):
        default = default_referent(prev) if prev is not None else None
        if default is not None and not early_compatible(default, clues, entities):
            return Prediction.NULL_SUBJECT
        return Prediction.STRONG_PRONOUN
    return Prediction.EITHER


@dataclass(frozen=True)
class Mismatch:
    mention: str
    transition: Transition
    bigram: Optional[Bigram]
    predicted: Prediction
    actual: Form
    clues: ClueSet

    def to_dict(self) -> dict:
        return {
            "mention": self.mention,
            "transition": self.transition.value,
            "bigram": self.bigram.value if self.bigram else None,
            "predicted": self.predicted.value,
            "actual": self.actual.value,
            "clues": self.clues.summary(),
        }


def audit(doc: Document, split_complements: bool = False) -> list[Mismatch]:
    """Eligible pronouns whose form contradicts the predicted form."""
    ents = doc.entity_map
    units = segment(doc, split_complements)
    states = analyze_units(doc, units)
    by_clause = unit_of_clause(units)
    state_of = {u.id: (i, s) for i, (u, s) in enumerate(zip(units, states))}
    out = []
    for clause in doc.clauses():
        unit = by_clause.get(clause.id)
        if unit is None:
            continue
        i, state = state_of[unit.id]
        prev = states[i - 1] if i > 0 else context_state(doc)
        clues = extract_clues(unit)
        for m in sorted(clause.mentions, key=lambda m: m.surface_pos):
            if not is_eligible(m, clause, ents):
                continue
            predicted = predict_form(state.transition, state.bigram, clues, prev, ents)
            wrong = (
                (predicted is Prediction.NULL_SUBJECT and m.form is Form.STRONG_PRONOUN)
                or (predicted is Prediction.STRONG_PRONOUN and m.form is Form.NULL_SUBJECT)
            )
            if wrong:
                out.append(Mismatch(m.id, state.transition, state.bigram, predicted, m.form, clues))
    return out
