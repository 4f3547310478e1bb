"""Resolve null subjects using the clues inside the verbal complex.

Agreement on a participle can override the default Cb, a climbed clitic rules
its own referent out early, and a clitic left in place only does so after the
verb has been read, which is a garden path.
"""

import json

from centering import DATA_DIR, analyze, extract_clues, load_document, resolve_null_subject, segment
from centering.core import context_state

CASES = [
    ("maria_seaside_null.json", "no clue: the Cb stays the subject"),
    ("maria_seaside_participle.json", "masculine participle"),
    ("clitic_climbing_early.json", "clitic climbed before the modal"),
    ("clitic_climbing_late.json", "clitic attached to the infinitive"),
]

# the unit holding the null subject of interest for each fixture
TARGETS = {k: v["resolution"]["unit"]
           for k, v in json.loads((DATA_DIR / "fixtures" / "expected.json").read_text()).items()
           if "resolution" in v}

for name, note in CASES:
    doc = load_document(DATA_DIR / "fixtures" / name)
    units, states = segment(doc), analyze(doc)
    i = [u.id for u in units].index(TARGETS[name])
    unit = units[i]
    prev = states[i - 1] if i else context_state(doc)
    clues = extract_clues(unit)
    r = resolve_null_subject(unit, prev, clues, doc.entity_map)
    print(f"{name}  ({note})")
    print(f"  previous Cb={prev.cb}  Cf={list(prev.cf)}")
    print(f"  referent={r.referent}  overridden={r.default_was_overridden}  garden_path={r.garden_path}\n")
