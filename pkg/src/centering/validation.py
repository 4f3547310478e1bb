"""Invariant checks over a parsed (or hand-built) :class:`Document`.

Violations are returned as data.  Each one carries the id of the offending
object and the code of exactly one invariant from :data:`INVARIANTS`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import ATTACHED_KINDS, Document, Form, Gender, Number, Role

INVARIANTS = {
    "entity.members": "members nonempty iff is_set",
    "entity.member_ref": "set members resolve to declared entities",
    "entity.member_cycle": "set membership is acyclic",
    "entity.deixis": "deictic entities are first or second person",
    "mention.entity_ref": "mention entity resolves",
    "mention.clitic_position": "clitic_position set iff form is clitic",
    "mention.possessor": "possessor differs from the mention's entity and resolves",
    "clause.single_subject": "at most one subject mention per clause",
    "clause.attach_to": "attach_to present exactly for adjuncts, complements and relatives",
    "clause.attach_ref": "attach_to resolves within the same sentence",
    "clause.attach_cycle": "clause attachment is acyclic",
    "clause.order": "clause order values are unique within a sentence",
    "verbal_complex.untensed": "untensed verbal complexes carry unspecified agreement",
    "context.refs": "context entities resolve, cb is on cf, cf holds no deictics",
}


@dataclass(frozen=True)
class Violation:
    object_id: str
    invariant: str
    message: str

    def __str__(self):
        return f"{self.object_id}\t{self.invariant}\t{self.message}"


def validate_document(doc: Document) -> list[Violation]:
    out: list[Violation] = []

    def flag(obj_id, code, detail=""):
        out.append(Violation(obj_id, code, detail or INVARIANTS[code]))

    ents = doc.entity_map
    for e in doc.entities:
        if e.is_set != bool(e.members):
            flag(e.id, "entity.members",
                 "set entity without members" if e.is_set else "members listed on a non-set entity")
        dangling = [m for m in e.members if m not in ents]
        if dangling:
            flag(e.id, "entity.member_ref", f"undeclared member {dangling[0]!r}")
        if e.deictic and e.person == 3:
            flag(e.id, "entity.deixis")

    for e in doc.entities:
        if e.is_set and _reaches(e.id, e.id, ents):
            flag(e.id, "entity.member_cycle")

    for s in doc.sentences:
        by_id = {c.id: c for c in s.clauses}
        seen_orders = {}
        for c in s.clauses:
            if c.order in seen_orders:
                flag(c.id, "clause.order", f"order {c.order} already used by {seen_orders[c.order]!r}")
            else:
                seen_orders[c.order] = c.id

            needs_host = c.kind in ATTACHED_KINDS
            if needs_host != (c.attach_to is not None):
                flag(c.id, "clause.attach_to",
                     f"{c.kind.value} clause " + ("needs a host" if needs_host else "must not attach"))
            if c.attach_to is not None and c.attach_to not in by_id:
                flag(c.id, "clause.attach_ref", f"host {c.attach_to!r} not in sentence {s.id!r}")

            vc = c.verbal_complex
            if not vc.tensed and (vc.agr_gender is not Gender.UNSPECIFIED or vc.agr_number is not Number.UNSPECIFIED):
                flag(c.id, "verbal_complex.untensed")

            subjects = [m for m in c.mentions if m.role is Role.SUBJECT]
            if len(subjects) > 1:
                flag(c.id, "clause.single_subject", f"{len(subjects)} subject mentions")

            for m in c.mentions:
                if m.entity not in ents:
                    flag(m.id, "mention.entity_ref", f"undeclared entity {m.entity!r}")
                if (m.form is Form.WEAK_CLITIC) != (m.clitic_position is not None):
                    flag(m.id, "mention.clitic_position")
                if m.possessor is not None and (m.possessor == m.entity or m.possessor not in ents):
                    flag(m.id, "mention.possessor")

        # attachment cycles: one report per cycle, on its smallest clause id
        for c in s.clauses:
            seen = set()
            cur = c
            while cur is not None and cur.attach_to is not None:
                if cur.id in seen:
                    break
                seen.add(cur.id)
                cur = by_id.get(cur.attach_to)
            if cur is not None and cur.id in seen and c.id == _cycle_min(cur, by_id):
                flag(c.id, "clause.attach_cycle")

    ctx = doc.context
    if ctx is not None:
        bad = [x for x in ctx.cf if x not in ents or ents[x].deictic]
        if bad or (ctx.cb is not None and ctx.cb not in ctx.cf):
            flag(doc.doc_id, "context.refs")
    return out


def _cycle_min(start, by_id):
    """Smallest clause id on the cycle through ``start`` (one report per cycle)."""
    ids = [start.id]
    cur = by_id[start.attach_to]
    while cur.id != start.id:
        ids.append(cur.id)
        cur = by_id[cur.attach_to]
    return min(ids)


def _reaches(start, target, ents):
    stack, seen = list(ents[start].members), set()
    while stack:
        x = stack.pop()
        if x == target:
            return True
        if x in seen or x not in ents:
            continue
        seen.add(x)
        stack.extend(ents[x].members)
    return False
