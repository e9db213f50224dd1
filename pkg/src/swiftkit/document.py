"""The Sign Display model: a canvas of z-ordered glyph placements.

Every operation is pure — document in, new document out — so a failed
transform can never leave a half-applied state. Placements are anchored
top-left in integer pixels; the placement list is the only z-order source
(later = on top).

Documents may live unbound from a catalog (e.g. parsed from a file);
operations that need glyph geometry or variant existence take the catalog
explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

from .catalog import Catalog
from .codes import GlyphCode, canonical, parse_code
from .errors import (
    BadVersion,
    OutOfCanvas,
    TextSyntaxError,
    UnknownCode,
    UnknownId,
    VariantUnavailable,
)

DUPLICATE_OFFSET = 10  # copies land at (+10, +10), visibly apart from originals


@dataclass(frozen=True)
class Placement:
    id: int
    code: GlyphCode
    x: int
    y: int


@dataclass(frozen=True)
class SignDocument:
    width: int
    height: int
    placements: tuple[Placement, ...] = ()
    next_id: int = 1

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("canvas dimensions must be >= 1")

    def placement(self, pid: int) -> Placement:
        for p in self.placements:
            if p.id == pid:
                return p
        raise UnknownId(f"no placement with id {pid}")

    def ids(self) -> set[int]:
        return {p.id for p in self.placements}


def new_document(width: int = 500, height: int = 500) -> SignDocument:
    return SignDocument(width=width, height=height)


def _check_position(doc: SignDocument, code: GlyphCode, x: int, y: int, catalog: Catalog | None):
    if x < 0 or y < 0:
        raise OutOfCanvas(f"negative position ({x}, {y})")
    if catalog is not None:
        rec = catalog.get(code)
        if rec is None:
            raise UnknownCode(f"code {canonical(code)} not in catalog")
        if x + rec.asset_w > doc.width or y + rec.asset_h > doc.height:
            raise OutOfCanvas(
                f"glyph {canonical(code)} at ({x}, {y}) exceeds {doc.width}x{doc.height} canvas"
            )


def _validate_selection(doc: SignDocument, sel: Iterable[int]) -> set[int]:
    ids = set(sel)
    existing = doc.ids()
    for pid in ids:
        if pid not in existing:
            raise UnknownId(f"no placement with id {pid}")
    return ids


def add_glyph(
    doc: SignDocument, code: GlyphCode, x: int, y: int, catalog: Catalog | None = None
) -> tuple[SignDocument, int]:
    """Append a placement on top of the z-order; returns (doc', new id)."""
    _check_position(doc, code, x, y, catalog)
    pid = doc.next_id
    placed = Placement(id=pid, code=code, x=x, y=y)
    return replace(doc, placements=doc.placements + (placed,), next_id=pid + 1), pid


def _rotated(rotation: int, steps: int) -> int:
    # rotation advances within its mirror half; 8 steps is the identity
    if rotation < 8:
        return (rotation + steps) % 8
    return 8 + (rotation - 8 + steps) % 8


def _recode(doc: SignDocument, sel: Iterable[int], catalog: Catalog, new_code) -> SignDocument:
    ids = _validate_selection(doc, sel)
    updated = []
    for p in doc.placements:
        if p.id not in ids:
            updated.append(p)
            continue
        code = new_code(p.code)
        if code not in catalog:
            raise VariantUnavailable(
                f"variant {canonical(code)} not in catalog (placement {p.id})", id=p.id
            )
        updated.append(replace(p, code=code))
    return replace(doc, placements=tuple(updated))


def transform_rotate(doc: SignDocument, sel: Iterable[int], steps: int, catalog: Catalog) -> SignDocument:
    """Advance each selected placement's rotation by ``steps`` 45-degree
    increments, staying within its mirror half. Atomic: if any rotated
    variant is missing from the catalog, nothing changes."""
    return _recode(
        doc, sel, catalog,
        lambda c: GlyphCode(c.base, c.fill, _rotated(c.rotation, steps)),
    )


def transform_mirror(doc: SignDocument, sel: Iterable[int], catalog: Catalog) -> SignDocument:
    """Toggle each selected placement between the plain and mirrored halves
    of the rotation digit. Atomic like rotate."""
    return _recode(
        doc, sel, catalog,
        lambda c: GlyphCode(c.base, c.fill, c.rotation ^ 8),
    )


def duplicate(
    doc: SignDocument, sel: Iterable[int], catalog: Catalog | None = None
) -> tuple[SignDocument, tuple[int, ...]]:
    """Copy every selected placement to (+10, +10), appended on top in the
    originals' relative z-order. Atomic: if any copy would leave the
    canvas, nothing is duplicated."""
    ids = _validate_selection(doc, sel)
    originals = [p for p in doc.placements if p.id in ids]
    for p in originals:
        _check_position(doc, p.code, p.x + DUPLICATE_OFFSET, p.y + DUPLICATE_OFFSET, catalog)
    copies = []
    new_ids = []
    next_id = doc.next_id
    for p in originals:
        copies.append(Placement(id=next_id, code=p.code, x=p.x + DUPLICATE_OFFSET, y=p.y + DUPLICATE_OFFSET))
        new_ids.append(next_id)
        next_id += 1
    return (
        replace(doc, placements=doc.placements + tuple(copies), next_id=next_id),
        tuple(new_ids),
    )


def erase(doc: SignDocument, sel: Iterable[int]) -> SignDocument:
    """Remove exactly the selected placements, preserving remaining order."""
    ids = _validate_selection(doc, sel)
    return replace(doc, placements=tuple(p for p in doc.placements if p.id not in ids))


def move(
    doc: SignDocument, sel: Iterable[int], dx: int, dy: int, catalog: Catalog | None = None
) -> SignDocument:
    """Shift every selected placement by (dx, dy); atomic bounds check."""
    ids = _validate_selection(doc, sel)
    for p in doc.placements:
        if p.id in ids:
            _check_position(doc, p.code, p.x + dx, p.y + dy, catalog)
    return replace(doc, placements=tuple(
        replace(p, x=p.x + dx, y=p.y + dy) if p.id in ids else p for p in doc.placements
    ))


def clear(doc: SignDocument) -> SignDocument:
    return replace(doc, placements=())


# -- SWT text format ------------------------------------------------------
#
# Bit-exact: UTF-8, LF endings, line 1 "swt 1", line 2 "canvas <w> <h>",
# then "glyph <code> <x> <y>" per placement in z-order, single spaces,
# decimal integers without leading zeros, mandatory trailing newline.

_SWT_VERSION = "1"


def serialize_text(doc: SignDocument) -> str:
    lines = [f"swt {_SWT_VERSION}", f"canvas {doc.width} {doc.height}"]
    for p in doc.placements:
        lines.append(f"glyph {canonical(p.code)} {p.x} {p.y}")
    return "\n".join(lines) + "\n"


def _decimal(token: str, lineno: int, minimum: int = 0) -> int:
    if not token.isdigit() or (token != "0" and token.startswith("0")):
        raise TextSyntaxError(f"line {lineno}: bad integer {token!r}", line=lineno)
    value = int(token)
    if value < minimum:
        raise TextSyntaxError(f"line {lineno}: integer below {minimum}", line=lineno)
    return value


def parse_text(text: str) -> SignDocument:
    """Parse the SWT grammar exactly; ids are reassigned 1..n in z-order."""
    if not text.endswith("\n"):
        raise TextSyntaxError("missing trailing newline")
    lines = text.split("\n")[:-1]
    if len(lines) < 2:
        raise TextSyntaxError("document needs a version and a canvas line")
    head = lines[0].split(" ")
    if len(head) != 2 or head[0] != "swt":
        raise TextSyntaxError("line 1: expected 'swt <version>'", line=1)
    if head[1] != _SWT_VERSION:
        raise BadVersion(f"unsupported version {head[1]!r}")
    canvas = lines[1].split(" ")
    if len(canvas) != 3 or canvas[0] != "canvas":
        raise TextSyntaxError("line 2: expected 'canvas <w> <h>'", line=2)
    width = _decimal(canvas[1], 2, minimum=1)
    height = _decimal(canvas[2], 2, minimum=1)
    placements = []
    for lineno, line in enumerate(lines[2:], start=3):
        parts = line.split(" ")
        if len(parts) != 4 or parts[0] != "glyph":
            raise TextSyntaxError(f"line {lineno}: expected 'glyph <code> <x> <y>'", line=lineno)
        code = parse_code(parts[1])
        x = _decimal(parts[2], lineno)
        y = _decimal(parts[3], lineno)
        placements.append(Placement(id=len(placements) + 1, code=code, x=x, y=y))
    return SignDocument(
        width=width, height=height, placements=tuple(placements), next_id=len(placements) + 1
    )


# -- SVG rendering ---------------------------------------------------------

def _xml_escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")
    )


def render_svg(doc: SignDocument, catalog: Catalog) -> bytes:
    """Deterministic SVG: one image element per placement in z-order,
    byte-identical across runs for equal inputs."""
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{doc.width}" height="{doc.height}">'
    ]
    for p in doc.placements:
        rec = catalog.get(p.code)
        if rec is None:
            raise UnknownCode(f"code {canonical(p.code)} not in catalog")
        parts.append(
            f'  <image x="{p.x}" y="{p.y}" width="{rec.asset_w}" height="{rec.asset_h}"'
            f' href="{_xml_escape(rec.asset)}"/>'
        )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")
