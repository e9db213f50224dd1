"""Co-occurrence statistics over saved signs, and the hint lists they rank.

Counting is done at base-symbol granularity: a sign saved with a rotated
variant should inform hints for every fill and rotation of the same symbol.
Within one sign, duplicated symbols count once (set semantics); each
unordered pair of distinct base symbols gains one count per saved sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .catalog import Catalog
from .codes import GlyphCode
from .errors import StoreCorrupt, UnknownArea


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


class CooccurrenceTable:
    """Counts of unordered base-symbol pairs across saved signs.

    Mutated only by ``record_sign`` (one writer, inside the store's save);
    no zero-count entries are ever stored.
    """

    def __init__(self):
        self._pairs: dict[tuple[int, int], int] = {}
        self.signs_seen = 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, CooccurrenceTable):
            return NotImplemented
        return self._pairs == other._pairs and self.signs_seen == other.signs_seen

    def __len__(self) -> int:
        return len(self._pairs)

    def copy(self) -> "CooccurrenceTable":
        dup = CooccurrenceTable()
        dup._pairs = dict(self._pairs)
        dup.signs_seen = self.signs_seen
        return dup

    def record_sign(self, used: Iterable[GlyphCode]) -> None:
        """Count every unordered pair of distinct base symbols in the sign."""
        bases = sorted({c.base for c in used})
        for i, a in enumerate(bases):
            for b in bases[i + 1:]:
                key = (a, b)
                self._pairs[key] = self._pairs.get(key, 0) + 1
        self.signs_seen += 1

    def pair_count(self, a: int, b: int) -> int:
        if a == b:
            return 0
        return self._pairs.get(_pair(a, b), 0)

    def score(self, candidate: GlyphCode, display: Iterable[GlyphCode]) -> int:
        """Total co-occurrence weight between the candidate's base symbol
        and the distinct base symbols currently on display."""
        base = candidate.base
        return sum(self.pair_count(base, d) for d in {c.base for c in display} if d != base)

    # -- text snapshot ("<hex a> <hex b> <count>", a < b, sorted) ----------

    def export_lines(self) -> list[str]:
        return [f"{a:03x} {b:03x} {n}" for (a, b), n in sorted(self._pairs.items())]

    def dump(self) -> str:
        return "\n".join([f"signs {self.signs_seen}"] + self.export_lines()) + "\n"

    @classmethod
    def load(cls, text: str) -> "CooccurrenceTable":
        table = cls()
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if not lines or not lines[0].startswith("signs "):
            raise StoreCorrupt("stats snapshot missing 'signs' line")
        try:
            table.signs_seen = int(lines[0][6:])
            for line in lines[1:]:
                a_text, b_text, n_text = line.split(" ")
                a, b, n = int(a_text, 16), int(b_text, 16), int(n_text)
                if a >= b or n < 1:
                    raise ValueError(line)
                table._pairs[(a, b)] = n
        except ValueError as exc:
            raise StoreCorrupt(f"bad stats snapshot line: {exc}") from None
        return table


@dataclass(frozen=True)
class HintList:
    """Area-filtered hint entries, scored and sorted (score desc, code asc);
    ``count`` is the number of compatible glyphs before truncation — the
    figure the minimized footer shows."""

    entries: tuple[tuple[str, int], ...]
    count: int


def hints_for(
    table: CooccurrenceTable,
    display: Iterable[GlyphCode],
    area: str,
    catalog: Catalog,
    limit: int,
    threshold: int = 1,
) -> HintList:
    """Rank the catalog glyphs of ``area`` by co-occurrence with the display.

    Glyphs sharing a base symbol with the display are excluded; only glyphs
    whose score reaches ``threshold`` (default: ever co-occurred) qualify.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if area not in catalog.taxonomy.areas:
        raise UnknownArea(f"unknown area {area!r}")
    display = list(display)
    display_bases = {c.base for c in display}
    base_scores: dict[int, int] = {}
    entries = []
    for key, rec in catalog.records.items():
        if rec.area != area or rec.code.base in display_bases:
            continue
        score = base_scores.get(rec.code.base)
        if score is None:
            score = table.score(rec.code, display)
            base_scores[rec.code.base] = score
        if score >= threshold:
            entries.append((key, score))
    entries.sort(key=lambda e: (-e[1], e[0]))
    return HintList(entries=tuple(entries[:limit]), count=len(entries))


def rebuild(signs: Iterable[Sequence[GlyphCode]]) -> CooccurrenceTable:
    """Fold record_sign over stored signs in save order; equals the
    incrementally maintained table."""
    table = CooccurrenceTable()
    for used in signs:
        table.record_sign(used)
    return table
