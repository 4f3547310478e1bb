"""Centering analysis of Italian null and strong subject pronouns."""

from pathlib import Path

from .core import (
    Bigram,
    CenteringState,
    Transition,
    analyze,
    bigram_label,
    classify_transition,
    compute_cb,
    rank_cf,
)
from .errors import (
    AttachmentCycleError,
    CorpusError,
    DanglingReferenceError,
    DegenerateTableError,
    DuplicateIdError,
    ParseError,
    UnresolvedError,
)
from .interpretation import (
    ClueSet,
    Mismatch,
    Prediction,
    Resolution,
    audit,
    extract_clues,
    predict_form,
    resolve_null_subject,
)
from .io import load_document, parse_document, serialize_document
from .model import (
    Clause,
    ClauseKind,
    CliticPosition,
    Context,
    Document,
    Entity,
    Form,
    Gender,
    Mention,
    Number,
    Role,
    Sentence,
    VerbalComplex,
    eligible_pronouns,
)
from .segmentation import CenteringUnit, segment, unit_count
from .stats import (
    ChiSquare,
    ContingencyTable,
    DistributionTable,
    LabeledPronoun,
    chi_square,
    comparisons,
    distribution,
    tally,
)
from .tables import paper_tables, render
from .validation import Violation, validate_document

__version__ = "0.1.0"

#: shipped example documents, synthetic corpus and labeled records
DATA_DIR = Path(__file__).parent / "data"
