"""Generate a fresh synthetic corpus, analyse it and tabulate its pronouns.

The generator knows how many centering units it built, so the segmenter can be
checked against it before anything is counted.
"""

import sys
import tempfile
from pathlib import Path

from centering import audit, distribution, load_document, render, unit_count
from centering.synth import write_corpus

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 2024

with tempfile.TemporaryDirectory() as tmp:
    manifest = write_corpus(tmp, seed=seed, n_docs=4)
    docs = [load_document(p) for p in sorted(Path(tmp).glob("synth*.json"))]

for doc in docs:
    print(f"{doc.doc_id}: {unit_count(doc)} units, {len(audit(doc))} form mismatches")

print()
print(render(distribution(docs), "text"))
