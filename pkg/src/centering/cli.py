"""Command-line front end.

Subcommands::

    validate FILE...        list invariant violations (exit 0 iff none)
    analyze  FILE...        JSON lines, one centering state per unit
    audit    FILE...        JSON lines, one record per form mismatch
    tables   FILE...        distribution and contingency tables
    stats    [FILE...]      chi-square for --cells a,b,c,d or for the input tables

Files ending in ``.jsonl`` are read as labeled pronoun records (tables and
stats only); anything else is a document.  Output is assembled in memory
and written only when the command succeeds.

Exit status: 0 on success, 1 for invalid documents, failed validation or a
degenerate contingency table, 2 for unreadable files or bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import analyze
from .errors import CorpusError, DegenerateTableError
from .interpretation import audit
from .io import dumps_line, parse_document
from .stats import ContingencyTable, chi_square, comparisons, distribution, read_labeled, tally
from .tables import FORMATS, render
from .validation import validate_document

EXIT_OK, EXIT_INVALID, EXIT_UNREADABLE = 0, 1, 2


class Failure(Exception):
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status


def _read(path):
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise Failure(EXIT_UNREADABLE, f"{path}: cannot read: {exc.strerror or exc}") from None


def _load(path):
    data = _read(path)
    try:
        return parse_document(data)
    except CorpusError as exc:
        raise Failure(EXIT_INVALID, f"{path}: {exc}") from None


def _load_valid(path):
    doc = _load(path)
    violations = validate_document(doc)
    if violations:
        lines = [f"{path}: invalid document"] + [f"  {v}" for v in violations]
        raise Failure(EXIT_INVALID, "\n".join(lines))
    return doc


def _load_records(paths):
    docs, records = [], []
    for p in paths:
        if str(p).endswith(".jsonl"):
            data = _read(p)
            try:
                records.extend(read_labeled(data.decode("utf-8")))
            except (CorpusError, UnicodeDecodeError) as exc:
                raise Failure(EXIT_INVALID, f"{p}: {exc}") from None
        else:
            docs.append(_load_valid(p))
    return docs, records


def _table(args):
    docs, records = _load_records(args.inputs)
    table = distribution(docs, args.split_complements)
    for rec in records:
        table.add(rec)
    return table


def _streams(args, per_doc):
    out = []
    docs = [_load_valid(p) for p in args.inputs]
    for doc in docs:
        if len(docs) > 1:
            out.append(f"# {doc.doc_id}")
        out.extend(per_doc(doc))
    return out


def cmd_validate(args):
    out, bad = [], False
    docs = [(p, _load(p)) for p in args.inputs]
    for path, doc in docs:
        if len(docs) > 1:
            out.append(f"# {doc.doc_id}")
        violations = validate_document(doc)
        bad = bad or bool(violations)
        out.extend(str(v) for v in violations)
    return out, EXIT_INVALID if bad else EXIT_OK


def cmd_analyze(args):
    lines = _streams(args, lambda d: [dumps_line(s.to_dict()) for s in analyze(d, args.split_complements)])
    return lines, EXIT_OK


def cmd_audit(args):
    lines = _streams(args, lambda d: [dumps_line(m.to_dict()) for m in audit(d, args.split_complements)])
    return lines, EXIT_OK


def cmd_tables(args):
    return render(_table(args), args.format or "tsv"), EXIT_OK


def _parse_cells(text):
    try:
        cells = [int(x) for x in text.split(",")]
    except ValueError:
        cells = []
    if len(cells) != 4 or min(cells) < 0:
        raise Failure(EXIT_UNREADABLE, f"--cells expects four nonnegative integers a,b,c,d, got {text!r}")
    return ContingencyTable(*cells)


def _format_result(name, result, fmt):
    if fmt == "json":
        return {"table": name, "statistic": round(result.statistic, 3), "p": result.label}
    if fmt == "tsv" and name:
        return f"{name}\t{result.statistic:.3f}\t{result.label}"
    return f"{name}: {result}" if name else str(result)


def cmd_stats(args):
    fmt = args.format or "text"
    if args.cells is not None:
        pairs = [("", _parse_cells(args.cells))]
    else:
        if not args.inputs:
            raise Failure(EXIT_UNREADABLE, "stats needs --cells or at least one input file")
        pairs = [(name, t) for name, (_, t) in comparisons(_table(args)).items()]
    results = []
    for name, t in pairs:
        try:
            results.append(_format_result(name, chi_square(t), fmt))
        except DegenerateTableError as exc:
            label = f"{name}: " if name else ""
            raise Failure(EXIT_INVALID, f"{label}{exc}") from None
    if fmt == "json":
        payload = results[0] if args.cells is not None else results
        if args.cells is not None:
            del payload["table"]
        return json.dumps(payload, indent=2) + "\n", EXIT_OK
    return results, EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "audit": cmd_audit,
    "tables": cmd_tables,
    "stats": cmd_stats,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="centering",
        description="Centering analysis of null and strong subject pronouns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("inputs", nargs="*" if name == "stats" else "+", metavar="FILE")
        p.add_argument("--split-complements", action="store_true",
                       help="give tensed complement clauses their own centering unit")
        p.add_argument("--format", choices=FORMATS, default=None)
        p.add_argument("--output", metavar="PATH", help="write to PATH instead of standard output")
        if name == "stats":
            p.add_argument("--cells", metavar="a,b,c,d", help="2x2 table, row-major")
    return parser


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        body, status = COMMANDS[args.command](args)
    except Failure as exc:
        print(str(exc), file=stderr)
        return exc.status
    if isinstance(body, list):
        body = "".join(line + "\n" for line in body)
    if args.output:
        try:
            Path(args.output).write_text(body, encoding="utf-8", newline="\n")
        except OSError as exc:
            print(f"{args.output}: cannot write: {exc.strerror or exc}", file=stderr)
            return EXIT_UNREADABLE
    else:
        stdout.write(body)
        stdout.flush()
    return status


def main():
    sys.exit(run())
