"""Persistent sign database: an append-only record file plus a derived
co-occurrence sidecar.

Layout under the store directory:

    signs.jsonl   one JSON object per line, fields in exactly the order
                  id, created_at, gloss, canvas, glyphs — appended on save
    stats.txt     snapshot of the co-occurrence table, rebuilt from the
                  record file whenever it is missing or stale

Saved signs are immutable; there is no delete or update, which keeps the
statistics consistent with the record file by construction. Saves are
serialized through one writer; readers always see a prefix-consistent
store.
"""

from __future__ import annotations

import json
import os
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import document as doc_ops
from .catalog import Catalog
from .codes import GlyphCode, canonical, parse_code
from .document import Placement, SignDocument
from .errors import EngineError, InvalidDocument, NotFound, StoreCorrupt, StoreUnavailable
from .hints import CooccurrenceTable

RECORDS_FILE = "signs.jsonl"
STATS_FILE = "stats.txt"

EXPORT_FORMATS = ("text", "svg", "record")


@dataclass(frozen=True)
class SignRecord:
    id: int
    created_at: int
    gloss: str | None
    document: SignDocument
    used_glyphs: tuple[str, ...]


@dataclass(frozen=True)
class SignSummary:
    id: int
    created_at: int
    gloss: str | None
    glyph_count: int


class InjectedCrash(RuntimeError):
    """Raised by the test hook between record append and stats update."""


def record_to_json(record: SignRecord) -> str:
    obj = {
        "id": record.id,
        "created_at": record.created_at,
        "gloss": record.gloss,
        "canvas": [record.document.width, record.document.height],
        "glyphs": [[canonical(p.code), p.x, p.y] for p in record.document.placements],
    }
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def record_from_json(line: str) -> SignRecord:
    """Parse one record line; any deviation is store corruption, surfaced
    rather than silently repaired."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise StoreCorrupt(f"unparseable record line: {exc}") from None
    if not isinstance(obj, dict) or set(obj) != {"id", "created_at", "gloss", "canvas", "glyphs"}:
        raise StoreCorrupt("record line has wrong field set")
    rec_id, created_at, gloss = obj["id"], obj["created_at"], obj["gloss"]
    canvas, glyphs = obj["canvas"], obj["glyphs"]
    if not isinstance(rec_id, int) or rec_id < 1:
        raise StoreCorrupt("record id must be a positive integer")
    if not isinstance(created_at, int) or created_at < 0:
        raise StoreCorrupt("record created_at must be a non-negative integer")
    if gloss is not None and not isinstance(gloss, str):
        raise StoreCorrupt("record gloss must be a string or null")
    if (
        not isinstance(canvas, list) or len(canvas) != 2
        or not all(isinstance(v, int) and v >= 1 for v in canvas)
    ):
        raise StoreCorrupt("record canvas must be [w, h] with w, h >= 1")
    placements = []
    used = []
    if not isinstance(glyphs, list):
        raise StoreCorrupt("record glyphs must be a list")
    for entry in glyphs:
        if (
            not isinstance(entry, list) or len(entry) != 3
            or not isinstance(entry[0], str)
            or not all(isinstance(v, int) and v >= 0 for v in entry[1:])
        ):
            raise StoreCorrupt(f"bad glyph entry {entry!r}")
        try:
            code = parse_code(entry[0])
        except EngineError as exc:
            raise StoreCorrupt(f"bad glyph code in record: {exc}") from None
        placements.append(Placement(id=len(placements) + 1, code=code, x=entry[1], y=entry[2]))
        used.append(canonical(code))
    document = SignDocument(
        width=canvas[0], height=canvas[1],
        placements=tuple(placements), next_id=len(placements) + 1,
    )
    return SignRecord(
        id=rec_id, created_at=created_at, gloss=gloss,
        document=document, used_glyphs=tuple(used),
    )


class SignStore:
    """Single-writer, multi-reader store over one directory."""

    def __init__(
        self,
        path: str | Path,
        catalog: Catalog | None = None,
        clock: Callable[[], int] | None = None,
    ):
        self.path = Path(path)
        self.catalog = catalog
        self._clock = clock or (lambda: int(time.time()))
        self._lock = threading.Lock()
        self._records: list[SignRecord] = []
        self._closed = False
        self.fail_after_append = False  # test hook: simulate a crash mid-save
        try:
            self.path.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StoreUnavailable(f"cannot open store at {self.path}: {exc}") from None
        self._load()

    # -- loading ---------------------------------------------------------

    @property
    def _records_path(self) -> Path:
        return self.path / RECORDS_FILE

    @property
    def _stats_path(self) -> Path:
        return self.path / STATS_FILE

    def _load(self):
        if self._records_path.exists():
            text = self._records_path.read_text(encoding="utf-8")
            for lineno, line in enumerate(text.split("\n"), start=1):
                if line == "":
                    continue
                record = record_from_json(line)
                if record.id != len(self._records) + 1:
                    raise StoreCorrupt(
                        f"line {lineno}: record id {record.id} breaks the sequence"
                    )
                # used_glyphs is derived; recompute and cross-check
                derived = tuple(canonical(p.code) for p in record.document.placements)
                if record.used_glyphs != derived:
                    raise StoreCorrupt(f"line {lineno}: used-glyph list out of sync")
                self._records.append(record)
        self._table = self._load_or_rebuild_stats()

    def _load_or_rebuild_stats(self) -> CooccurrenceTable:
        if self._stats_path.exists():
            try:
                table = CooccurrenceTable.load(self._stats_path.read_text(encoding="utf-8"))
                if table.signs_seen == len(self._records):
                    return table
            except StoreCorrupt:
                pass  # sidecar is derived data: fall through and rebuild
        return self._rebuild_in_memory(write=True)

    def _rebuild_in_memory(self, write: bool) -> CooccurrenceTable:
        table = CooccurrenceTable()
        for record in self._records:
            table.record_sign([p.code for p in record.document.placements])
        if write:
            self._write_stats(table)
        return table

    def _write_stats(self, table: CooccurrenceTable):
        tmp = self._stats_path.with_suffix(".tmp")
        tmp.write_text(table.dump(), encoding="utf-8")
        os.replace(tmp, self._stats_path)

    # -- operations --------------------------------------------------------

    @property
    def table(self) -> CooccurrenceTable:
        return self._table

    def __len__(self) -> int:
        return len(self._records)

    def save(self, document: SignDocument, gloss: str | None = None) -> SignRecord:
        """Durably append one sign and fold it into the statistics.

        The two effects commit together: validation happens up front, the
        in-memory record and table are only updated after the append
        succeeds, and a stale sidecar is healed by rebuild on reopen.
        """
        with self._lock:
            if self._closed:
                raise StoreUnavailable("store is closed")
            if self.catalog is not None:
                for p in document.placements:
                    if p.code not in self.catalog:
                        raise InvalidDocument(
                            f"code {canonical(p.code)} not in catalog", code=canonical(p.code)
                        )
            record = SignRecord(
                id=len(self._records) + 1,
                created_at=self._clock(),
                gloss=gloss,
                document=document,
                used_glyphs=tuple(canonical(p.code) for p in document.placements),
            )
            line = record_to_json(record) + "\n"
            try:
                with open(self._records_path, "a", encoding="utf-8") as fh:
                    fh.write(line)
                    fh.flush()
                    os.fsync(fh.fileno())
            except OSError as exc:
                raise StoreUnavailable(f"append failed: {exc}") from None
            if self.fail_after_append:
                raise InjectedCrash("simulated crash between append and stats update")
            self._records.append(record)
            self._table.record_sign([p.code for p in document.placements])
            self._write_stats(self._table)
            return record

    def get(self, sign_id: int) -> SignRecord:
        for record in self._records:
            if record.id == sign_id:
                return record
        raise NotFound(f"no sign with id {sign_id}")

    def list(self, offset: int = 0, limit: int | None = None) -> list[SignSummary]:
        """Record summaries in id order."""
        window = self._records[offset: None if limit is None else offset + limit]
        return [
            SignSummary(
                id=r.id, created_at=r.created_at, gloss=r.gloss,
                glyph_count=len(r.used_glyphs),
            )
            for r in window
        ]

    def export(self, sign_id: int, fmt: str) -> bytes:
        """One saved sign as SWT text, SVG, or its record line."""
        record = self.get(sign_id)
        if fmt == "text":
            return doc_ops.serialize_text(record.document).encode("utf-8")
        if fmt == "svg":
            if self.catalog is None:
                raise StoreUnavailable("svg export needs a bound catalog")
            return doc_ops.render_svg(record.document, self.catalog)
        if fmt == "record":
            return record_to_json(record).encode("utf-8")
        raise ValueError(f"unknown export format {fmt!r}")

    def used_glyphs(self) -> list[list[GlyphCode]]:
        """Per-sign used-code lists in save order (rebuild input)."""
        return [[p.code for p in r.document.placements] for r in self._records]

    def rebuild_stats(self) -> CooccurrenceTable:
        """Recompute the table from the record file and rewrite the sidecar."""
        with self._lock:
            self._table = self._rebuild_in_memory(write=True)
            return self._table

    def close(self):
        self._closed = True
