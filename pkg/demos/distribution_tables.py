"""Rebuild the distribution tables and chi-square tests from labelled pronouns.

The labelled records carry a form, a transition and a bigram for each subject
pronoun, so no discourse analysis is needed to count them.
"""

from centering import DATA_DIR, paper_tables
from centering.stats import comparisons, chi_square, read_labeled, tally

records = read_labeled((DATA_DIR / "labeled" / "paper_distribution.jsonl").read_text(encoding="utf-8"))
table = tally(records)

print(paper_tables(records, "text"))

print("comparisons:")
for name, (columns, cells) in comparisons(table).items():
    print(f"  {name:26} {cells.as_rows()}  {chi_square(cells)}")
