"""Deterministic generator for small synthetic annotated corpora.

The generated texts are not Italian; they are annotation skeletons whose
mention patterns loosely follow narrative prose: a few animate characters
of both genders, a deictic narrator, some inanimate objects, clitics in
both positions, possessives, and the odd relative or impersonal clause.

Every document is valid.  The generator also records how many centering
units each document has, counted from the clauses it emits, so segmentation
can be checked against a number that does not come from segmentation.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from .io import document_from_dict, serialize_document

CHARACTERS = (
    ("anna", "fem"), ("bruno", "masc"), ("carla", "fem"),
    ("dario", "masc"), ("elena", "fem"), ("fabio", "masc"),
)
THINGS = (("casa", "fem"), ("libro", "masc"), ("lettera", "fem"), ("giardino", "masc"))


class _DocBuilder:
    def __init__(self, rng, doc_id):
        self.rng = rng
        self.doc_id = doc_id
        self.n_mentions = 0
        self.recent = []
        cast = rng.sample(CHARACTERS, rng.randint(2, 4))
        things = rng.sample(THINGS, 2)
        self.people = [c[0] for c in cast]
        self.things = [t[0] for t in things]
        self.gender = dict(cast + things)
        self.entities = [self._entity("narrator", person=1, deictic=True)]
        self.entities += [self._entity(name) for name in self.people]
        self.entities += [self._entity(name, animate=False) for name in self.things]
        if rng.random() < 0.5:
            pair = self.people[:2]
            self.entities.append(self._entity("coppia", number="pl", members=pair))
            self.people_sets = ["coppia"]
        else:
            self.people_sets = []
        self.sentences = []
        self.units = 0
        self.units_split = 0

    def _entity(self, eid, animate=True, person=3, deictic=False, number="sg", members=()):
        return {
            "id": eid, "animate": animate,
            "gender": "masc" if members else self.gender.get(eid, "unspec"),
            "number": "pl" if members else number, "person": person,
            "is_set": bool(members), "members": list(members), "deictic": deictic,
        }

    def _mention(self, entity, form, role, pos, **kw):
        self.n_mentions += 1
        m = {
            "id": f"m{self.n_mentions}", "entity": entity, "form": form, "role": role,
            "surface_pos": pos, "empathy": False, "qis_or_arb": False,
            "clitic_position": None, "possessor": None, "constrained": False,
        }
        m.update(kw)
        return m

    def _pick_person(self):
        rng = self.rng
        if self.recent and rng.random() < 0.6:
            return self.recent[0]
        if self.recent and rng.random() < 0.5:
            return rng.choice(self.recent)
        return rng.choice(self.people + self.people_sets)

    def _subject(self, clause_kind, prev_subject=None):
        rng = self.rng
        r = rng.random()
        if r < 0.08:
            return self._mention("narrator", "null", "subject", 0), None
        if r < 0.14:
            thing = rng.choice(self.things)
            return self._mention(thing, "np", "subject", 0, possessor=self._maybe_possessor()), None
        who = self._pick_person()
        known = who in self.recent
        f = rng.random()
        if not known:
            form = "name" if f < 0.6 else ("strong" if f < 0.8 else "null")
        elif who == (self.recent[0] if self.recent else None):
            form = "null" if f < 0.7 else ("strong" if f < 0.85 else "name")
        else:
            form = "strong" if f < 0.5 else ("null" if f < 0.8 else "name")
        kw = {}
        if form == "name":
            kw["empathy"] = rng.random() < 0.03
        if clause_kind == "conjunct" and form == "null" and who == prev_subject:
            kw["constrained"] = True
        if form in ("null", "strong") and rng.random() < 0.03:
            kw["qis_or_arb"] = True
        return self._mention(who, form, "subject", 0, **kw), who

    def _maybe_possessor(self):
        if self.recent and self.rng.random() < 0.3:
            return self.rng.choice(self.recent)
        return None

    def _agreement(self, subj, tensed=True):
        if not tensed:
            return "unspec", "unspec"
        ent = subj["entity"]
        number = "pl" if ent in self.people_sets else "sg"
        r = self.rng.random()
        if r < 0.3 and ent in self.gender:
            return self.gender[ent], number
        if r < 0.7:
            return "unspec", number
        return "unspec", "unspec"

    def _complements(self, subject_entity, pos, allow_clitic=True):
        rng = self.rng
        out = []
        for role in ("object2", "object", "oblique"):
            if rng.random() > 0.45:
                continue
            if rng.random() < 0.3:
                thing = rng.choice(self.things)
                out.append(self._mention(thing, "np", role, pos, possessor=self._maybe_possessor()))
            else:
                others = [p for p in self.people if p != subject_entity]
                if not others:
                    continue
                who = rng.choice(others)
                if allow_clitic and who in self.recent and rng.random() < 0.6:
                    position = "climbed" if rng.random() < 0.6 else "in_situ"
                    out.append(self._mention(who, "clitic", role, pos, clitic_position=position))
                else:
                    form = "name" if rng.random() < 0.8 else "strong"
                    out.append(self._mention(who, form, role, pos))
            pos += 1
        return out

    def _clause(self, cid, kind, order, attach_to=None, tensed=True, prev_subject=None):
        rng = self.rng
        mentions = []
        subj_entity = None
        gender = number = "unspec"
        if kind == "impersonal":
            mentions.append(self._mention(rng.choice(self.people), "np", "object", 0))
        elif tensed:
            subj, subj_entity = self._subject(kind, prev_subject)
            mentions.append(subj)
            gender, number = self._agreement(subj)
        if kind != "impersonal":
            mentions += self._complements(subj_entity, len(mentions))
        return {
            "id": cid, "kind": kind, "attach_to": attach_to, "order": order,
            "other_construction": kind in ("main", "conjunct") and rng.random() < 0.03,
            "verbal_complex": {"tensed": tensed, "agr_gender": gender, "agr_number": number},
            "mentions": mentions,
        }, subj_entity

    def sentence(self):
        rng = self.rng
        sid = f"s{len(self.sentences) + 1}"
        clauses = []
        order = [0]

        def nxt():
            order[0] += 1
            return order[0] - 1

        realized = []
        preposed = rng.random() < 0.1
        main_id = f"{sid}.c1"
        if preposed:
            c, _ = self._clause(f"{sid}.c0", "tensed_adjunct", nxt(), attach_to=main_id)
            clauses.append(c)
            realized.append(c)
        main, main_subject = self._clause(main_id, "main", nxt())
        clauses.append(main)
        realized.append(main)
        extras = rng.choices(
            ["conjunct", "tensed_adjunct", "tenseless_adjunct", "complement", "relative", "impersonal", None],
            weights=[3, 3, 2, 2, 1, 1, 8],
            k=rng.randint(0, 2),
        )
        host = main_id
        for i, kind in enumerate(k for k in extras if k):
            cid = f"{sid}.c{i + 2}"
            if kind in ("conjunct", "impersonal"):
                c, _ = self._clause(cid, kind, nxt(), prev_subject=main_subject)
            elif kind == "tenseless_adjunct":
                c, _ = self._clause(cid, kind, nxt(), attach_to=host, tensed=False)
            else:
                c, _ = self._clause(cid, kind, nxt(), attach_to=host)
            clauses.append(c)
            if kind not in ("relative", "impersonal"):
                realized.append(c)
        for c in clauses:
            if c["kind"] in ("main", "conjunct", "tensed_adjunct"):
                self.units += 1
                self.units_split += 1
            elif c["kind"] == "complement":
                self.units_split += 1
        self.sentences.append({"id": sid, "clauses": clauses})
        # recency: entities of the last realized clauses, most recent subject first
        seen = []
        for c in reversed(realized):
            for m in c["mentions"]:
                if m["entity"] in self.people + self.people_sets and m["entity"] not in seen:
                    seen.append(m["entity"])
        self.recent = seen[:3]

    def build(self, n_sentences):
        for _ in range(n_sentences):
            self.sentence()
        return {"doc_id": self.doc_id, "entities": self.entities, "sentences": self.sentences}


def generate_corpus(seed=0, n_docs=8, sentences_per_doc=(14, 20)):
    """Return a list of ``(raw_document_dict, unit_counts)`` pairs.

    ``unit_counts`` is ``{"units": n, "units_split_complements": m}``.
    """
    rng = random.Random(seed)
    out = []
    for i in range(n_docs):
        b = _DocBuilder(rng, f"synth{i + 1:02d}")
        raw = b.build(rng.randint(*sentences_per_doc))
        out.append((raw, {"units": b.units, "units_split_complements": b.units_split}))
    return out


def write_corpus(directory, seed=0, n_docs=8):
    """Write documents plus a ``manifest.json`` with per-document unit counts."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    manifest = {"seed": seed, "documents": {}}
    for raw, counts in generate_corpus(seed, n_docs):
        doc = document_from_dict(raw)
        name = f"{doc.doc_id}.json"
        (directory / name).write_bytes(serialize_document(doc))
        manifest["documents"][name] = counts
    text = json.dumps(manifest, indent=2, sort_keys=True) + "\n"
    (directory / "manifest.json").write_text(text, encoding="utf-8")
    return manifest
