"""Flattening documents into a linear sequence of centering units.

Main clauses, conjuncts and tensed adjuncts head their own unit.  Tenseless
adjuncts are folded into the unit of the clause they attach to, and so are
tensed complements unless ``split_complements`` is set.  Relative and
impersonal clauses produce no unit and their mentions are dropped.

Units are ordered by the surface position of their head clause, so a
preposed adjunct comes before its matrix clause and a center-embedded one
sits where it appears.  A split complement is placed directly after the unit
of its matrix clause, which keeps the overall mention order identical to the
merged layout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AttachmentCycleError, DanglingReferenceError
from .model import ClauseKind, Document, EXCLUDED_KINDS, Mention, VerbalComplex

HEAD_KINDS = frozenset({ClauseKind.MAIN, ClauseKind.CONJUNCT, ClauseKind.TENSED_ADJUNCT})


@dataclass(frozen=True)
class CenteringUnit:
    id: str
    source_clauses: tuple[str, ...]
    mentions: tuple[Mention, ...]
    verbal_complex: VerbalComplex
    other_construction: bool
    position: int
    sentence_id: str = ""


def _sentence_units(sentence, split_complements):
    by_id = {c.id: c for c in sentence.clauses}

    def live_host(clause):
        """Nearest ancestor that is not a dropped clause kind, or None."""
        seen = {clause.id}
        cur = clause
        while cur.attach_to is not None:
            if cur.attach_to not in by_id:
                raise DanglingReferenceError(cur.attach_to, f"attach_to of clause {cur.id!r}")
            cur = by_id[cur.attach_to]
            if cur.id in seen:
                raise AttachmentCycleError(cur.id)
            seen.add(cur.id)
            if cur.kind not in EXCLUDED_KINDS:
                return cur
        return None

    key: dict[str, tuple] = {}
    head_of: dict[str, str] = {}

    def place(clause):
        if clause.id in key:
            return
        kind = clause.kind
        host = live_host(clause) if clause.attach_to is not None else None
        heads = kind in HEAD_KINDS or (kind is ClauseKind.COMPLEMENT and split_complements)
        if host is None or kind is ClauseKind.TENSED_ADJUNCT:
            key[clause.id] = (clause.order,)
            head_of[clause.id] = clause.id
            return
        place(host)
        branch = 1 if kind is ClauseKind.COMPLEMENT else 0
        key[clause.id] = key[host.id] + (branch, clause.order)
        head_of[clause.id] = clause.id if heads else head_of[host.id]

    for c in sentence.clauses:
        if c.kind not in EXCLUDED_KINDS:
            place(c)

    groups: dict[str, list] = {}
    for cid, head in head_of.items():
        groups.setdefault(head, []).append(cid)
    out = []
    for head in sorted(groups, key=lambda h: key[h]):
        members = sorted(groups[head], key=lambda cid: key[cid])
        mentions = []
        for cid in members:
            mentions.extend(sorted(by_id[cid].mentions, key=lambda m: m.surface_pos))
        out.append((head, tuple(members), tuple(mentions)))
    return out, by_id


def segment(doc: Document, split_complements: bool = False) -> list[CenteringUnit]:
    units = []
    for sentence in doc.sentences:
        groups, by_id = _sentence_units(sentence, split_complements)
        for head, members, mentions in groups:
            units.append(CenteringUnit(
                id=head,
                source_clauses=members,
                mentions=mentions,
                verbal_complex=by_id[head].verbal_complex,
                other_construction=any(by_id[c].other_construction for c in members),
                position=len(units),
                sentence_id=sentence.id,
            ))
    return units


def unit_count(doc: Document, split_complements: bool = False) -> int:
    return len(segment(doc, split_complements))


def unit_of_clause(units) -> dict[str, CenteringUnit]:
    return {cid: u for u in units for cid in u.source_clauses}
