"""Synthetic full-scale catalog manifests for benchmarks and tests.

The real glyph alphabet is a licensed asset set, so scale testing uses a
generated stand-in with the same shape: roughly 35,000 variants over the
full 652-symbol base range, split across the seven canonical anatomical
areas. All sampling comes from a self-contained splitmix64 stream, so a
(seed, bases) pair always produces byte-identical output.

Population model, documented because the numbers are load-bearing:

* Every hand-configuration family holds 15 base symbols split into five
  finger-count groups of three. Fills encode the plane/view pair
  (fill = plane * 3 + view), rotations are free variants. A full
  Choose-Box assignment therefore pins 3 bases x 1 fill x 16 rotation
  slots = at most 48 glyphs, and each slot is kept with the family's
  density, so a full choice lands near 30 glyphs and never above 48.
* The largest family ("flat_hand", density 0.79) is tuned so that any
  single facet choice leaves a few hundred glyphs to browse.
* Non-hand families use the same slot sampling with smaller bases and
  densities around 0.5, which keeps them all below the largest hand
  family while filling the catalog out to scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import HEADER_ROW
from .codes import BASE_MAX, BASE_MIN

FULL_BASE_BUDGET = BASE_MAX - BASE_MIN + 1  # 652

AREAS = ("head", "shoulders", "arms", "hands", "contacts", "punctuation", "movement")


class _Rng:
    """splitmix64: tiny, seedable, stable across platforms and versions."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self.MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self.MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def unit(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)


@dataclass(frozen=True)
class FacetPlan:
    name: str
    kind: str  # "base" | "fill_div" | "fill_mod" | "rot"
    values: tuple[str, ...]


@dataclass(frozen=True)
class FamilyPlan:
    ident: str
    bases: int
    density: float
    facets: tuple[FacetPlan, ...]
    subfamilies: tuple[str, ...]


@dataclass(frozen=True)
class CategoryPlan:
    ident: str
    area: str
    families: tuple[FamilyPlan, ...]


_PLANE = FacetPlan("plane", "fill_div", ("wall", "floor"))
_VIEW = FacetPlan("view", "fill_mod", ("palm", "side", "back"))
_FINGERS = FacetPlan("fingers", "base", ("1", "2", "3", "4", "5"))

_HAND_SUBS = ("straight", "bent", "curved")


def _hand(ident: str, density: float) -> FamilyPlan:
    return FamilyPlan(ident, 15, density, (_FINGERS, _PLANE, _VIEW), _HAND_SUBS)


def _plain(ident: str, bases: int, density: float, facets: tuple[FacetPlan, ...]) -> FamilyPlan:
    subs = ("primary", "secondary", "tertiary") if bases >= 12 else ("primary", "secondary")
    return FamilyPlan(ident, bases, density, facets, subs)


_HEAD_FACETS = (
    FacetPlan("form", "base", ("narrow", "medium", "wide")),
    FacetPlan("aspect", "fill_mod", ("front", "three_quarter", "profile")),
    FacetPlan("tone", "fill_div", ("light", "dark")),
)
_SHOULDER_FACETS = (
    FacetPlan("lean", "base", ("level", "tilted")),
    FacetPlan("side", "fill_div", ("left", "right")),
    FacetPlan("extent", "fill_mod", ("small", "medium", "large")),
)
_ARM_FACETS = (
    FacetPlan("bend", "base", ("straight", "bent", "crossed")),
    FacetPlan("side", "fill_div", ("left", "right")),
    FacetPlan("plane", "fill_mod", ("wall", "floor", "diagonal")),
)
_CONTACT_FACETS = (
    FacetPlan("manner", "base", ("single", "double")),
    FacetPlan("emphasis", "fill_div", ("plain", "strong")),
)
_MOVEMENT_FACETS = (
    FacetPlan("direction", "rot", ("n", "ne", "e", "se", "s", "sw", "w", "nw")),
    FacetPlan("size", "fill_div", ("small", "large")),
    FacetPlan("repetition", "fill_mod", ("once", "twice", "thrice")),
)

PLAN: tuple[CategoryPlan, ...] = (
    CategoryPlan("head_face", "head", (
        _plain("brow", 16, 0.52, _HEAD_FACETS),
        _plain("eyes", 18, 0.55, _HEAD_FACETS),
        _plain("nose", 12, 0.50, _HEAD_FACETS),
        _plain("mouth", 18, 0.56, _HEAD_FACETS),
        _plain("cheeks", 14, 0.53, _HEAD_FACETS),
        _plain("chin", 12, 0.51, _HEAD_FACETS),
        _plain("face_outline", 14, 0.54, _HEAD_FACETS),
        _plain("gaze", 10, 0.52, _HEAD_FACETS),
    )),
    CategoryPlan("torso", "shoulders", (
        _plain("shoulder_line", 18, 0.54, _SHOULDER_FACETS),
        _plain("torso_tilt", 16, 0.52, _SHOULDER_FACETS),
        _plain("body_shift", 14, 0.50, _SHOULDER_FACETS),
    )),
    CategoryPlan("arm_positions", "arms", (
        _plain("forearm", 18, 0.55, _ARM_FACETS),
        _plain("elbow", 16, 0.52, _ARM_FACETS),
        _plain("wrist", 14, 0.54, _ARM_FACETS),
        _plain("arm_cross", 10, 0.50, _ARM_FACETS),
    )),
    CategoryPlan("hand_config", "hands", (
        _hand("fist", 0.58),
        _hand("index", 0.60),
        _hand("index_middle", 0.62),
        _hand("index_middle_thumb", 0.64),
        _hand("thumb_hand", 0.66),
        _hand("spread_hand", 0.68),
        _hand("flat_hand", 0.79),
        _hand("cupped_hand", 0.63),
        _hand("hooked_hand", 0.61),
        _hand("angled_hand", 0.65),
    )),
    CategoryPlan("contact_marks", "contacts", (
        _plain("touch", 14, 0.54, _CONTACT_FACETS),
        _plain("grasp", 12, 0.52, _CONTACT_FACETS),
        _plain("strike", 10, 0.50, _CONTACT_FACETS),
        _plain("brush", 10, 0.53, _CONTACT_FACETS),
        _plain("between", 10, 0.51, _CONTACT_FACETS),
    )),
    CategoryPlan("punctuation_marks", "punctuation", (
        _plain("pause", 8, 0.52, ()),
        _plain("stop", 8, 0.50, ()),
    )),
    CategoryPlan("dynamics_motion", "movement", (
        _plain("straight_path", 18, 0.56, _MOVEMENT_FACETS),
        _plain("curved_path", 18, 0.54, _MOVEMENT_FACETS),
        _plain("circle_path", 16, 0.55, _MOVEMENT_FACETS),
        _plain("finger_motion", 16, 0.53, _MOVEMENT_FACETS),
        _plain("wrist_motion", 14, 0.54, _MOVEMENT_FACETS),
        _plain("shoulder_motion", 14, 0.52, _MOVEMENT_FACETS),
        _plain("dynamics", 16, 0.55, _MOVEMENT_FACETS),
        _plain("tempo", 14, 0.53, _MOVEMENT_FACETS),
        _plain("shake", 14, 0.54, _MOVEMENT_FACETS),
        _plain("axial", 14, 0.52, _MOVEMENT_FACETS),
        _plain("bounce", 14, 0.55, _MOVEMENT_FACETS),
        _plain("cross", 14, 0.53, _MOVEMENT_FACETS),
        _plain("twist", 14, 0.54, _MOVEMENT_FACETS),
        _plain("sweep", 14, 0.52, _MOVEMENT_FACETS),
    )),
)


def _min_bases(plan: FamilyPlan) -> int:
    need = len(plan.subfamilies)
    for facet in plan.facets:
        if facet.kind == "base":
            need = max(need, len(facet.values))
    return need


def _facet_value(facet: FacetPlan, base_idx: int, base_count: int, fill: int, rotation: int) -> str:
    if facet.kind == "base":
        return facet.values[base_idx * len(facet.values) // base_count]
    if facet.kind == "fill_div":
        return facet.values[fill // 3]
    if facet.kind == "fill_mod":
        return facet.values[fill % 3]
    if facet.kind == "rot":
        return facet.values[rotation % 8]
    raise ValueError(f"unknown facet kind {facet.kind!r}")


def generate_manifest(seed: int = 42, bases: int = FULL_BASE_BUDGET) -> str:
    """Emit a complete manifest as text; pure function of (seed, bases)."""
    if not 100 <= bases <= FULL_BASE_BUDGET:
        raise ValueError(f"bases must be within 100..{FULL_BASE_BUDGET}")
    scale = bases / FULL_BASE_BUDGET
    rng = _Rng(seed)
    lines = [f"#! areas: {','.join(AREAS)}"]
    allocations: list[tuple[CategoryPlan, FamilyPlan, int, int]] = []
    next_base = BASE_MIN
    for cat in PLAN:
        lines.append(f"#! taxon: {cat.ident},{cat.area}")
        for fam in cat.families:
            count = max(_min_bases(fam), round(fam.bases * scale))
            lines.append(f"#! family: {cat.ident}/{fam.ident}")
            for facet in fam.facets:
                lines.append(
                    f"#! facet: {cat.ident}/{fam.ident}/{facet.name}={'|'.join(facet.values)}"
                )
            for sub in fam.subfamilies:
                lines.append(f"#! subfamily: {cat.ident}/{fam.ident}/{sub}")
            allocations.append((cat, fam, next_base, count))
            next_base += count
    if next_base - BASE_MIN > FULL_BASE_BUDGET:
        raise ValueError("family plan exceeds the base symbol range")
    lines.append(HEADER_ROW)
    for cat, fam, first_base, count in allocations:
        nsub = len(fam.subfamilies)
        for idx in range(count):
            base = first_base + idx
            subfamily = fam.subfamilies[idx * nsub // count]
            for fill in range(6):
                for rotation in range(16):
                    if rng.unit() >= fam.density:
                        continue
                    code = f"S{base:03x}{fill}{rotation:x}"
                    facets = ";".join(
                        f"{f.name}={_facet_value(f, idx, count, fill, rotation)}"
                        for f in fam.facets
                    )
                    w = 18 + (base * 3 + fill) % 22
                    h = 18 + (base * 5 + rotation) % 26
                    lines.append(
                        f"{code},{cat.ident},{fam.ident},{subfamily},{cat.area},"
                        f"{code}.png,{w},{h},{facets}"
                    )
    return "\n".join(lines) + "\n"
