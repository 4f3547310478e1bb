"""Walk a five-unit discourse whose Cb stays put while the Cp changes.

Two retains alternate with continues.  The continues that follow a retain are
labelled RET_CONT, the pattern where a strong pronoun is about as likely as a
null subject.
"""

from centering import DATA_DIR, analyze, audit, load_document, segment

doc = load_document(DATA_DIR / "fixtures" / "irais_ret_cont.json")

for unit, state in zip(segment(doc), analyze(doc)):
    forms = ", ".join(f"{m.entity}:{m.form.value}" for m in unit.mentions)
    label = state.transition.value + (f"/{state.bigram.value}" if state.bigram else "")
    print(f"{unit.id:6}  Cf={list(state.cf)}  Cb={state.cb}  {label}")
    print(f"        mentions: {forms}")

print("\nform audit:", [m.to_dict() for m in audit(doc)] or "no mismatches")
