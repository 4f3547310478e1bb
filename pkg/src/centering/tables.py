"""Rendering of distribution and contingency tables as TSV, aligned text or JSON."""

from __future__ import annotations

import json

from .errors import DegenerateTableError
from .stats import (
    BIGRAM_COLUMNS,
    FORM_LABELS,
    FORMS,
    TRANSITION_COLUMNS,
    DistributionTable,
    LabeledPronoun,
    chi_square,
    comparisons,
    distribution,
    tally,
)

FORMATS = ("tsv", "text", "json")

CAPTIONS = {
    "continue_vs_others": "CONTINUE vs. all other transitions",
    "contcont_vs_retcont": "CONT-CONT + SHIFT-CONT vs. RET-CONT",
    "contcont_vs_others": "CONT-CONT + SHIFT-CONT vs. all other transitions",
    "retcont_vs_noncontinue": "RET-CONT vs. transitions different from CONTINUE",
    "contcont_vs_centest": "CONT-CONT + SHIFT-CONT vs. CENT-EST",
}


class Block:
    """One captioned table: a header row, body rows and optional footer lines."""

    def __init__(self, key, caption, header, rows, notes=()):
        self.key = key
        self.caption = caption
        self.header = list(header)
        self.rows = [list(r) for r in rows]
        self.notes = list(notes)


def _form_rows(counts, columns, prefix=()):
    rows = []
    for f in FORMS:
        cells = [counts[f][c] for c in columns]
        rows.append([*prefix, FORM_LABELS[f], sum(cells), *cells])
    return rows


def _total_row(counts, columns, pad=0):
    cells = [sum(counts[f][c] for f in FORMS) for c in columns]
    return ["Total"] + [""] * pad + [sum(cells), *cells]


def build_blocks(table: DistributionTable) -> list[Block]:
    empty = table.total == 0
    blocks = []

    rows = [] if empty else _form_rows(table.transitions, TRANSITION_COLUMNS) + [
        _total_row(table.transitions, TRANSITION_COLUMNS)
    ]
    blocks.append(Block("transitions", "Distribution of centering transitions",
                        ["Type", "Total", *TRANSITION_COLUMNS], rows))

    rows = []
    if not empty:
        for doc_id in table.per_text:
            rows.extend(_form_rows(table.per_text[doc_id], TRANSITION_COLUMNS, prefix=(doc_id,)))
        rows.append(_total_row(table.transitions, TRANSITION_COLUMNS, pad=1))
    blocks.append(Block("per_text", "Distribution of centering transitions per text",
                        ["Text", "Type", "Total", *TRANSITION_COLUMNS], rows))

    rows = [] if empty else _form_rows(table.bigrams, BIGRAM_COLUMNS) + [
        _total_row(table.bigrams, BIGRAM_COLUMNS)
    ]
    blocks.append(Block("bigrams", "Pronoun occurrences for RET-CONT",
                        ["Type", "Total", *BIGRAM_COLUMNS], rows))

    for key, (labels, t) in comparisons(table).items():
        rows, notes = [], []
        if not empty:
            rows = [[FORM_LABELS[FORMS[0]], t.a, t.b], [FORM_LABELS[FORMS[1]], t.c, t.d]]
            try:
                notes = [str(chi_square(t))]
            except DegenerateTableError:
                notes = ["chi2=n/a"]
        blocks.append(Block(key, CAPTIONS[key], ["", *labels], rows, notes))
    return blocks


def _tsv(block):
    lines = ["# " + block.caption, "\t".join(block.header)]
    lines += ["\t".join(str(c) for c in row) for row in block.rows]
    lines += block.notes
    return lines


def _text(block):
    grid = [block.header] + [[str(c) for c in r] for r in block.rows]
    widths = [max(len(row[i]) for row in grid) for i in range(len(block.header))]
    # label columns are left-aligned, counts right-aligned
    n_labels = 2 if block.key == "per_text" else 1
    lines = [block.caption]
    for n, row in enumerate(grid):
        cells = [c.ljust(w) if i < n_labels else c.rjust(w) for i, (c, w) in enumerate(zip(row, widths))]
        lines.append("  ".join(cells).rstrip())
        if n == 0:
            lines.append("-" * (sum(widths) + 2 * (len(widths) - 1)))
    lines += block.notes
    return lines


def _json(blocks):
    out = {}
    for b in blocks:
        out[b.key] = {
            "caption": b.caption,
            "header": b.header,
            "rows": b.rows,
            "notes": b.notes,
        }
    return json.dumps(out, indent=2, ensure_ascii=False) + "\n"


def render(table: DistributionTable, fmt: str = "tsv") -> str:
    """Deterministic rendering; every line ends with LF."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    blocks = build_blocks(table)
    if fmt == "json":
        return _json(blocks)
    fn = _tsv if fmt == "tsv" else _text
    parts = ["\n".join(fn(b)) for b in blocks]
    return "\n\n".join(parts) + "\n"


def paper_tables(source, fmt: str = "tsv", split_complements: bool = False) -> str:
    """Render the tables for a list of documents or of labeled pronoun records."""
    items = list(source)
    if items and all(isinstance(x, LabeledPronoun) for x in items):
        table = tally(items)
    else:
        table = distribution(items, split_complements)
    return render(table, fmt)
