"""Pronoun-by-transition distributions and 2x2 chi-square tests.

Every eligible subject pronoun is labeled with the transition of the unit it
occurs in.  Smooth and rough shifts are counted together as SHIFT, FIRST
units are not counted, and CONTINUE is further split by the transition that
precedes it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import Bigram, Transition, analyze_units
from .errors import DegenerateTableError, ParseError
from .model import Document, Form, is_eligible
from .segmentation import segment, unit_of_clause

FORMS = (Form.NULL_SUBJECT, Form.STRONG_PRONOUN)
FORM_LABELS = {Form.NULL_SUBJECT: "zero", Form.STRONG_PRONOUN: "strong"}

TRANSITION_COLUMNS = ("CONTINUE", "RETAIN", "SHIFT", "CENT_EST", "OTHER")
BIGRAM_COLUMNS = ("CONT_CONT+SHIFT_CONT", "RET_CONT")

_COLUMN_OF = {
    Transition.CONTINUE: "CONTINUE",
    Transition.RETAIN: "RETAIN",
    Transition.SMOOTH_SHIFT: "SHIFT",
    Transition.ROUGH_SHIFT: "SHIFT",
    Transition.CENT_EST: "CENT_EST",
    Transition.OTHER: "OTHER",
}

# (statistic, bracket) pairs for df = 1, strongest first
CRITICAL_VALUES = (
    (10.828, 0.001),
    (6.635, 0.01),
    (3.841, 0.05),
    (2.706, 0.1),
    (0.455, 0.5),
    (0.148, 0.7),
)


@dataclass(frozen=True)
class LabeledPronoun:
    """One eligible pronoun with the transition of its unit."""

    doc_id: str
    form: Form
    transition: Transition
    bigram: Optional[Bigram] = None
    mention: str = ""

    def to_dict(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "mention": self.mention,
            "form": self.form.value,
            "transition": self.transition.value,
            "bigram": self.bigram.value if self.bigram else None,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "LabeledPronoun":
        try:
            return cls(
                doc_id=raw["doc_id"],
                form=Form(raw["form"]),
                transition=Transition(raw["transition"]),
                bigram=Bigram(raw["bigram"]) if raw.get("bigram") else None,
                mention=raw.get("mention", ""),
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"bad labeled pronoun record: {exc}") from None


def label_pronouns(doc: Document, split_complements: bool = False) -> list[LabeledPronoun]:
    ents = doc.entity_map
    units = segment(doc, split_complements)
    states = {s.unit: s for s in analyze_units(doc, units)}
    by_clause = unit_of_clause(units)
    out = []
    for clause in doc.clauses():
        unit = by_clause.get(clause.id)
        if unit is None:
            continue
        state = states[unit.id]
        for m in sorted(clause.mentions, key=lambda m: m.surface_pos):
            if is_eligible(m, clause, ents):
                out.append(LabeledPronoun(doc.doc_id, m.form, state.transition, state.bigram, m.id))
    return out


def read_labeled(text: str) -> list[LabeledPronoun]:
    """Parse JSON-lines labeled pronoun records; blank lines are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=lineno, column=exc.colno) from None
        out.append(LabeledPronoun.from_dict(raw))
    return out


def _zero_row(columns):
    return {c: 0 for c in columns}


@dataclass
class DistributionTable:
    transitions: dict = field(default_factory=lambda: {f: _zero_row(TRANSITION_COLUMNS) for f in FORMS})
    bigrams: dict = field(default_factory=lambda: {f: _zero_row(BIGRAM_COLUMNS) for f in FORMS})
    per_text: dict = field(default_factory=dict)

    def add(self, rec: LabeledPronoun) -> None:
        col = _COLUMN_OF.get(rec.transition)
        if col is None or rec.form not in FORMS:
            return
        self.transitions[rec.form][col] += 1
        text = self.per_text.setdefault(rec.doc_id, {f: _zero_row(TRANSITION_COLUMNS) for f in FORMS})
        text[rec.form][col] += 1
        if rec.transition is Transition.CONTINUE:
            bcol = "RET_CONT" if rec.bigram is Bigram.RET_CONT else "CONT_CONT+SHIFT_CONT"
            self.bigrams[rec.form][bcol] += 1

    def row_total(self, form: Form) -> int:
        return sum(self.transitions[form].values())

    def column_total(self, column: str) -> int:
        return sum(self.transitions[f][column] for f in FORMS)

    @property
    def total(self) -> int:
        return sum(self.row_total(f) for f in FORMS)


def tally(records: Iterable[LabeledPronoun]) -> DistributionTable:
    table = DistributionTable()
    for rec in records:
        table.add(rec)
    return table


def distribution(corpus: Iterable[Document], split_complements: bool = False) -> DistributionTable:
    table = DistributionTable()
    for doc in corpus:
        # register every text, including those without pronouns
        table.per_text.setdefault(doc.doc_id, {f: _zero_row(TRANSITION_COLUMNS) for f in FORMS})
        for rec in label_pronouns(doc, split_complements):
            table.add(rec)
    return table


@dataclass(frozen=True)
class ContingencyTable:
    a: int
    b: int
    c: int
    d: int

    def as_rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def transpose(self) -> "ContingencyTable":
        return ContingencyTable(self.a, self.c, self.b, self.d)


@dataclass(frozen=True)
class ChiSquare:
    statistic: float
    bracket: float

    @property
    def label(self) -> str:
        if self.bracket >= 1.0:
            return "p<=1"
        return f"p<{self.bracket:g}"

    def __str__(self):
        return f"chi2={self.statistic:.3f} {self.label}"


def p_bracket(statistic: float) -> float:
    for crit, alpha in CRITICAL_VALUES:
        if statistic > crit:
            return alpha
    return 1.0


def chi_square(t: ContingencyTable) -> ChiSquare:
    """Pearson chi-square for a 2x2 table, df = 1, no continuity correction."""
    (a, b), (c, d) = t.as_rows()
    rows = (a + b, c + d)
    cols = (a + c, b + d)
    if min(rows) <= 0 or min(cols) <= 0:
        raise DegenerateTableError(f"table {a},{b},{c},{d} has an empty row or column")
    n = a + b + c + d
    stat = 0.0
    for i, row in enumerate(t.as_rows()):
        for j, observed in enumerate(row):
            expected = rows[i] * cols[j] / n
            stat += (observed - expected) ** 2 / expected
    return ChiSquare(stat, p_bracket(stat))


def comparisons(table: DistributionTable) -> dict[str, tuple[tuple[str, str], ContingencyTable]]:
    """The five zero/strong comparisons, as (column labels, table) keyed by name."""
    z, s = Form.NULL_SUBJECT, Form.STRONG_PRONOUN
    tr, bg = table.transitions, table.bigrams

    def others(form):
        return table.row_total(form) - tr[form]["CONTINUE"]

    cc = {f: bg[f]["CONT_CONT+SHIFT_CONT"] for f in FORMS}
    rc = {f: bg[f]["RET_CONT"] for f in FORMS}
    return {
        "continue_vs_others": (
            ("CONTINUE", "all others"),
            ContingencyTable(tr[z]["CONTINUE"], others(z), tr[s]["CONTINUE"], others(s)),
        ),
        "contcont_vs_retcont": (
            ("CONT-CONT + SHIFT-CONT", "RET-CONT"),
            ContingencyTable(cc[z], rc[z], cc[s], rc[s]),
        ),
        "contcont_vs_others": (
            ("CONT-CONT + SHIFT-CONT", "RET-CONT + all others"),
            ContingencyTable(cc[z], table.row_total(z) - cc[z], cc[s], table.row_total(s) - cc[s]),
        ),
        "retcont_vs_noncontinue": (
            ("RET-CONT", "all others (excluding CONTINUE)"),
            ContingencyTable(rc[z], others(z), rc[s], others(s)),
        ),
        "contcont_vs_centest": (
            ("CONT-CONT + SHIFT-CONT", "CENT-EST"),
            ContingencyTable(cc[z], tr[z]["CENT_EST"], cc[s], tr[s]["CENT_EST"]),
        ),
    }
