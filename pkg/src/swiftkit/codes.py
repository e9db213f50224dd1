"""Glyph code parsing and formatting.

A glyph code names one catalog variant: a base symbol declined by a fill
and a rotation. The canonical text form is six lowercase characters,
``S`` + base as three hex digits + one fill digit + one rotation hex digit,
e.g. ``S14c20``. Input is accepted case-insensitively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadLength, BadPrefix, BaseOutOfRange, FillOutOfRange, RotationNotHex

BASE_MIN = 0x100  # 256
BASE_MAX = 0x38B  # 907
FILL_MAX = 5
ROTATION_MAX = 15

_HEX = set("0123456789abcdef")
_FILLS = set("012345")


@dataclass(frozen=True, order=True)
class GlyphCode:
    """One glyph variant. Rotations 0-7 are plain 45-degree orientations,
    8-15 their mirrored counterparts."""

    base: int
    fill: int
    rotation: int

    def __post_init__(self):
        if not BASE_MIN <= self.base <= BASE_MAX:
            raise BaseOutOfRange(f"base {self.base} outside {BASE_MIN}..{BASE_MAX}")
        if not 0 <= self.fill <= FILL_MAX:
            raise FillOutOfRange(f"fill {self.fill} outside 0..{FILL_MAX}")
        if not 0 <= self.rotation <= ROTATION_MAX:
            raise RotationNotHex(f"rotation {self.rotation} outside 0..{ROTATION_MAX}")

    @property
    def mirrored(self) -> bool:
        return self.rotation >= 8

    def __str__(self) -> str:
        return canonical(self)


def canonical(code: GlyphCode) -> str:
    """Six-character lowercase text form; inverse of parse_code."""
    return f"S{code.base:03x}{code.fill}{code.rotation:x}"


def parse_code(text: str) -> GlyphCode:
    """Parse a glyph code string, accepting either case.

    Raises BadPrefix, BadLength, BaseOutOfRange, FillOutOfRange or
    RotationNotHex; never returns a partially valid code.
    """
    if not text:
        raise BadLength("empty code")
    if text[0] not in ("S", "s"):
        raise BadPrefix(f"code must start with 'S': {text!r}")
    if len(text) != 6:
        raise BadLength(f"code must be 6 characters, got {len(text)}: {text!r}")
    lowered = text.lower()
    base_part, fill_part, rot_part = lowered[1:4], lowered[4], lowered[5]
    if any(ch not in _HEX for ch in base_part):
        raise BaseOutOfRange(f"base is not hex: {text!r}")
    base = int(base_part, 16)
    if not BASE_MIN <= base <= BASE_MAX:
        raise BaseOutOfRange(
            f"base {base:#05x} outside {BASE_MIN:#05x}..{BASE_MAX:#05x}: {text!r}"
        )
    if fill_part not in _FILLS:
        raise FillOutOfRange(f"fill must be a digit 0-5: {text!r}")
    if rot_part not in _HEX:
        raise RotationNotHex(f"rotation must be a hex digit: {text!r}")
    return GlyphCode(base=base, fill=int(fill_part), rotation=int(rot_part, 16))
