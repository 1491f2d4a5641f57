"""Knowledge-graph assertion ingestion, indexing, and serialization.

The input is the standard assertions dump: 5 tab-separated fields per
line (edge URI, relation URI, start URI, end URI, JSON metadata with a
numeric "weight"). Assertions are indexed by their start concept.
"""

from __future__ import annotations

import gzip
import hashlib
import io
import json
import pickle
import re
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Iterator

from dialogue_concepts.errors import IngestionError, StoreFormatError
from dialogue_concepts.lexicon import min_max_scale

STORE_MAGIC = b"DCKS"
STORE_VERSION = 1

_CAMEL_BOUNDARY = re.compile(r"(?<=[a-z0-9])(?=[A-Z])")


@dataclass(frozen=True)
class Relation:
    """Canonical relation identifier, e.g. IsA or CausesDesire."""

    name: str

    def display(self) -> str:
        """Lowercase form with camel-case boundaries as spaces."""
        return _CAMEL_BOUNDARY.sub(" ", self.name).replace("/", " ").lower()

    def family(self) -> str:
        """Leading segment, for namespaced relations like dbpedia/genre."""
        return self.name.split("/", 1)[0]


def relation_display(relation: Relation) -> str:
    return relation.display()


@dataclass(frozen=True)
class Assertion:
    start: str
    relation: Relation
    end: str
    raw_confidence: float
    scaled_confidence: float


class KnowledgeStore:
    """Immutable start-concept -> assertions index."""

    def __init__(self, index: dict[str, list[Assertion]], skipped_lines: int = 0):
        self._index = index
        self.skipped_lines = skipped_lines
        self.assertion_count = sum(len(v) for v in index.values())
        self.concept_count = len(index)

    def query_by_keyword(self, keyword: str) -> list[Assertion]:
        """All assertions whose start concept equals `keyword`, in ingestion order."""
        return list(self._index.get(keyword, ()))

    def keys(self) -> Iterator[str]:
        return iter(self._index)


def query_by_keyword(store: KnowledgeStore, keyword: str) -> list[Assertion]:
    return store.query_by_keyword(keyword)


def _concept_from_uri(uri: str, language_filter: str) -> str | None:
    # /c/<lang>/<text>[/<sense>...]; sense suffix dropped, underscores to spaces
    parts = uri.split("/")
    if len(parts) < 4 or parts[1] != "c":
        return None
    if parts[2] != language_filter:
        return None
    text = parts[3].replace("_", " ").strip().lower()
    return text or None


def _relation_from_uri(uri: str) -> str | None:
    if not uri.startswith("/r/"):
        return None
    name = uri[len("/r/"):]
    return name or None


def parse_assertion_line(line: str, language_filter: str) -> Assertion | None:
    """Parse one dump line; None when filtered out; raises on malformed lines."""
    fields = line.rstrip("\n").split("\t")
    if len(fields) != 5:
        raise IngestionError(f"expected 5 tab-separated fields, got {len(fields)}")
    relation_name = _relation_from_uri(fields[1])
    if relation_name is None:
        raise IngestionError(f"bad relation URI: {fields[1]!r}")
    start = _concept_from_uri(fields[2], language_filter)
    end = _concept_from_uri(fields[3], language_filter)
    if start is None or end is None:
        return None
    try:
        meta = json.loads(fields[4])
    except json.JSONDecodeError:
        raise IngestionError("metadata field is not valid JSON") from None
    weight = meta.get("weight") if isinstance(meta, dict) else None
    if not isinstance(weight, (int, float)):
        return None
    return Assertion(
        start=start,
        relation=Relation(relation_name),
        end=end,
        raw_confidence=float(weight),
        scaled_confidence=min_max_scale(float(weight)),
    )


def ingest_conceptnet(
    source: Iterable[str],
    language_filter: str = "en",
    strict: bool = False,
) -> KnowledgeStore:
    """Build a KnowledgeStore from an assertions dump line stream.

    Tolerant mode (default) counts and skips malformed lines; strict mode
    raises naming the offending line.
    """
    index: dict[str, list[Assertion]] = {}
    skipped = 0
    for lineno, line in enumerate(source, start=1):
        if not line.strip():
            continue
        try:
            assertion = parse_assertion_line(line, language_filter)
        except IngestionError as exc:
            if strict:
                raise IngestionError(f"line {lineno}: {exc}") from None
            skipped += 1
            continue
        if assertion is None:
            continue
        index.setdefault(assertion.start, []).append(assertion)
    return KnowledgeStore(index, skipped_lines=skipped)


def open_dump(path: str, gzipped: bool | None = None) -> io.TextIOBase:
    """Open a dump file, transparently handling .gz."""
    if gzipped is None:
        gzipped = path.endswith(".gz")
    if gzipped:
        return io.TextIOWrapper(gzip.open(path, "rb"), encoding="utf-8")
    return open(path, encoding="utf-8")


def save_store(store: KnowledgeStore, sink: BinaryIO) -> None:
    """Write magic + version + length + sha256 checksum + payload."""
    rows = {
        key: [
            (a.relation.name, a.end, a.raw_confidence, a.scaled_confidence)
            for a in assertions
        ]
        for key, assertions in ((k, store.query_by_keyword(k)) for k in store.keys())
    }
    payload = pickle.dumps((rows, store.skipped_lines), protocol=4)
    sink.write(STORE_MAGIC)
    sink.write(bytes([STORE_VERSION]))
    sink.write(len(payload).to_bytes(8, "big"))
    sink.write(hashlib.sha256(payload).digest())
    sink.write(payload)


def load_store(source: BinaryIO) -> KnowledgeStore:
    header = source.read(len(STORE_MAGIC))
    if header != STORE_MAGIC:
        raise StoreFormatError("not a knowledge store file (bad magic)")
    version = source.read(1)
    if len(version) != 1 or version[0] != STORE_VERSION:
        raise StoreFormatError(f"unsupported store version: {version!r}")
    length_bytes = source.read(8)
    digest = source.read(32)
    if len(length_bytes) != 8 or len(digest) != 32:
        raise StoreFormatError("truncated store header")
    length = int.from_bytes(length_bytes, "big")
    payload = source.read(length)
    if len(payload) != length:
        raise StoreFormatError("truncated store payload")
    if hashlib.sha256(payload).digest() != digest:
        raise StoreFormatError("store checksum mismatch")
    rows, skipped = pickle.loads(payload)
    index = {
        key: [
            Assertion(key, Relation(rel), end, raw, scaled)
            for rel, end, raw, scaled in assertions
        ]
        for key, assertions in rows.items()
    }
    return KnowledgeStore(index, skipped_lines=skipped)
