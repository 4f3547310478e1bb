"""Exception types raised while reading and processing annotated documents."""


class CorpusError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CorpusError):
    """Malformed document text.

    ``line`` and ``column`` are 1-based and set for syntax errors; structural
    errors (wrong key, wrong type) carry a JSON ``path`` instead.
    """

    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif path:
            where = f" (at {path})"
        super().__init__(message + where)


class DanglingReferenceError(CorpusError):
    """An identifier is referenced but never declared."""

    def __init__(self, ref_id, context=""):
        self.ref_id = ref_id
        msg = f"undeclared id {ref_id!r}"
        if context:
            msg += f" referenced by {context}"
        super().__init__(msg)


class DuplicateIdError(CorpusError):
    def __init__(self, dup_id, kind="object"):
        self.dup_id = dup_id
        super().__init__(f"duplicate {kind} id {dup_id!r}")


class AttachmentCycleError(DanglingReferenceError):
    """Clause attachment does not bottom out in a root clause."""

    def __init__(self, clause_id):
        CorpusError.__init__(self, f"attachment cycle through clause {clause_id!r}")
        self.ref_id = clause_id


class UnresolvedError(CorpusError):
    """No candidate referent survives the agreement and clitic filters."""


class DegenerateTableError(CorpusError, ValueError):
    """A contingency table with an empty row or column."""
