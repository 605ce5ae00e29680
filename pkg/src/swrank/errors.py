"""Exception hierarchy for the ranking engine.

Every error raised by the package derives from :class:`EngineError`, so
callers (the CLI in particular) can map failures to exit codes without
enumerating modules.
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine errors."""


# --- corpus ingestion ---------------------------------------------------


class MalformedLine(EngineError):
    """A statement line matches neither the IRI-object nor literal-object shape."""

    def __init__(self, line_no: int, text: str = ""):
        self.line_no = line_no
        self.text = text
        snippet = f": {text!r}" if text else ""
        super().__init__(f"malformed statement on line {line_no}{snippet}")


class DuplicateId(EngineError):
    """A doc_id is already present in the corpus."""

    def __init__(self, doc_id: int):
        self.doc_id = doc_id
        super().__init__(f"doc_id {doc_id} already used in this corpus")


# --- graph construction -------------------------------------------------


class UnknownLabel(EngineError):
    """A data-graph node carries a label absent from the schema graph."""

    def __init__(self, node_id: int, label: str):
        self.node_id = node_id
        self.label = label
        super().__init__(f"node {node_id} has label {label!r} not present in schema")


class UnmappableEdge(EngineError):
    """A data edge has no schema edge with matching endpoint labels and role."""

    def __init__(self, edge):
        self.edge = edge
        super().__init__(f"data edge {edge} maps to no schema edge")


class MissingRate(EngineError):
    def __init__(self, role: str):
        self.role = role
        super().__init__(f"no authority transfer rate configured for role {role!r}")


class RateOutOfRange(EngineError):
    def __init__(self, role: str, value: float):
        self.role = role
        self.value = value
        super().__init__(f"rate {value} for role {role!r} outside [0, 1]")


# --- offline ranking ----------------------------------------------------


class EmptyGraph(EngineError):
    """Ranking requested on a graph with zero nodes."""


class MassExceedsOne(EngineError):
    """Some nodes transfer more than unit authority; the ranker refuses."""

    def __init__(self, nodes: list[int]):
        self.nodes = nodes
        shown = ", ".join(str(n) for n in nodes[:10])
        more = "" if len(nodes) <= 10 else f" (+{len(nodes) - 10} more)"
        super().__init__(f"outgoing authority mass exceeds 1 at nodes: {shown}{more}")


class NotConverged(EngineError):
    """Power iteration hit max_iter; carries the best vector seen."""

    def __init__(self, result, residual: float):
        self.result = result
        self.residual = residual
        super().__init__(
            f"rank iteration did not converge (final L1 residual {residual:.3e})"
        )


class SingularSystem(EngineError):
    """The dense oracle's linear system has no unique solution."""


# --- keyword index ------------------------------------------------------


class MissingScore(EngineError):
    def __init__(self, doc_id: int):
        self.doc_id = doc_id
        super().__init__(f"document {doc_id} has keywords but no rank score")


class NoMatch(EngineError):
    """No indexed document matches any query term."""


# --- query-time HITS ----------------------------------------------------


class DegenerateSubGraph(EngineError):
    """The query sub-graph carries no usable edges; HITS is undefined on it."""


# --- persistence --------------------------------------------------------


class IoFailure(EngineError):
    def __init__(self, path, cause: BaseException):
        self.path = path
        self.cause = cause
        super().__init__(f"I/O failure at {path}: {cause}")


class VersionMismatch(EngineError):
    def __init__(self, found: int, expected: int):
        self.found = found
        self.expected = expected
        super().__init__(f"state format version {found}, reader supports {expected}")


class CorruptRecord(EngineError):
    def __init__(self, file: str, line: int, detail: str = ""):
        self.file = file
        self.line = line
        extra = f" ({detail})" if detail else ""
        super().__init__(f"corrupt record in {file} at line {line}{extra}")


class MissingFile(EngineError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"state file missing: {name}")


# --- CLI ----------------------------------------------------------------


class UnknownDocument(EngineError):
    def __init__(self, key):
        self.key = key
        super().__init__(f"no document with id or uri {key!r}")
