"""Shared fixtures: toy catalogs, random-catalog builders, and the
brute-force oracles the engine is checked against."""

from __future__ import annotations

import random

import pytest

from swiftkit import Catalog, load_manifest

# 10 glyphs, 6 of them in the hands area: small enough to reason about by
# hand, rich enough to exercise families, facets and subfamilies.
TOY_MANIFEST = """\
#! areas: head,shoulders,arms,hands,contacts,punctuation,movement
#! taxon: hand_config,hands
#! family: hand_config/index
#! facet: hand_config/index/fingers=1|2
#! facet: hand_config/index/plane=wall|floor
#! facet: hand_config/index/view=palm|side|back
#! subfamily: hand_config/index/straight
#! subfamily: hand_config/index/bent
#! taxon: head_face,head
#! family: head_face/brow
#! facet: head_face/brow/arch=raised|furrowed
#! subfamily: head_face/brow/plain
code,category,family,subfamily,area,asset,w,h,facets
S10000,hand_config,index,straight,hands,S10000.png,24,30,fingers=1;plane=wall;view=palm
S10010,hand_config,index,straight,hands,S10010.png,24,30,fingers=1;plane=wall;view=side
S10021,hand_config,index,straight,hands,S10021.png,24,30,fingers=1;plane=wall;view=back
S10130,hand_config,index,bent,hands,S10130.png,24,30,fingers=2;plane=floor;view=palm
S10140,hand_config,index,bent,hands,S10140.png,24,30,fingers=2;plane=floor;view=side
S10152,hand_config,index,bent,hands,S10152.png,24,30,fingers=2;plane=floor;view=back
S20000,head_face,brow,plain,head,S20000.png,30,18,arch=raised
S20010,head_face,brow,plain,head,S20010.png,30,18,arch=raised
S20022,head_face,brow,plain,head,S20022.png,30,18,arch=furrowed
S20033,head_face,brow,plain,head,S20033.png,30,18,arch=furrowed
"""

AREA_POOL = ("head", "shoulders", "arms", "hands", "contacts", "punctuation", "movement")


@pytest.fixture
def toy_catalog() -> Catalog:
    return load_manifest(TOY_MANIFEST)


def full_variant_manifest(n_bases: int = 2) -> str:
    """One hands family where every fill/rotation variant of every base
    exists — transforms can never fall off the catalog."""
    lines = [
        "#! areas: hands",
        "#! taxon: hand_config,hands",
        "#! family: hand_config/index",
        "#! facet: hand_config/index/fingers=1|2",
        "#! subfamily: hand_config/index/straight",
        "code,category,family,subfamily,area,asset,w,h,facets",
    ]
    for base in range(0x100, 0x100 + n_bases):
        fingers = "1" if base % 2 == 0 else "2"
        for fill in range(6):
            for rotation in range(16):
                code = f"S{base:03x}{fill}{rotation:x}"
                lines.append(
                    f"{code},hand_config,index,straight,hands,{code}.png,10,10,fingers={fingers}"
                )
    return "\n".join(lines) + "\n"


@pytest.fixture
def variant_catalog() -> Catalog:
    return load_manifest(full_variant_manifest())


def random_manifest_text(rng: random.Random, density: float = 0.15) -> str:
    """A random irregular catalog: 2-4 populated areas, 1-2 categories per
    area, families with 0-3 facets, facet values assigned per record (not
    derived from the code), sparse variant population."""
    lines = ["#! areas: " + ",".join(AREA_POOL)]
    rows = []
    next_base = 0x100
    areas = rng.sample(AREA_POOL, k=rng.randint(2, 4))
    schema = []
    for a_idx, area in enumerate(areas):
        for c_idx in range(rng.randint(1, 2)):
            cat = f"cat{a_idx}{c_idx}_{area}"
            lines.append(f"#! taxon: {cat},{area}")
            for f_idx in range(rng.randint(1, 3)):
                # family idents stay unique within an area so (area, family)
                # addressing is unambiguous, like production catalogs
                fam = f"fam{a_idx}{c_idx}{f_idx}"
                lines.append(f"#! family: {cat}/{fam}")
                facets = []
                for facet_idx in range(rng.randint(0, 3)):
                    values = [f"v{v}" for v in range(rng.randint(2, 4))]
                    name = f"facet{facet_idx}"
                    facets.append((name, values))
                    lines.append(f"#! facet: {cat}/{fam}/{name}={'|'.join(values)}")
                subs = [f"sub{s}" for s in range(rng.randint(1, 2))]
                for sub in subs:
                    lines.append(f"#! subfamily: {cat}/{fam}/{sub}")
                n_bases = rng.randint(1, 6)
                schema.append((area, cat, fam, facets, subs, next_base, n_bases))
                next_base += n_bases
    for area, cat, fam, facets, subs, first_base, n_bases in schema:
        for base in range(first_base, first_base + n_bases):
            for fill in range(6):
                for rotation in range(16):
                    if rng.random() >= density:
                        continue
                    code = f"S{base:03x}{fill}{rotation:x}"
                    pairs = ";".join(f"{name}={rng.choice(values)}" for name, values in facets)
                    sub = rng.choice(subs)
                    rows.append(f"{code},{cat},{fam},{sub},{area},{code}.png,12,14,{pairs}")
    return "\n".join(lines + ["code,category,family,subfamily,area,asset,w,h,facets"] + rows) + "\n"


def random_catalog(rng: random.Random, density: float = 0.15) -> Catalog:
    return load_manifest(random_manifest_text(rng, density))


def scan_codes(catalog: Catalog, area: str, family: str | None = None,
               assignment: dict[str, str] | None = None) -> list[str]:
    """The query oracle: a plain linear scan applying the same predicates."""
    assignment = assignment or {}
    out = []
    for key, rec in catalog.records.items():
        if rec.area != area:
            continue
        if family is not None and rec.family != family:
            continue
        if any(rec.facets.get(name) != value for name, value in assignment.items()):
            continue
        out.append(key)
    return sorted(out)


def pair_counts_oracle(signs: list[list[int]]) -> dict[tuple[int, int], int]:
    """Brute-force double loop over the saved sign list (base-symbol sets)."""
    counts: dict[tuple[int, int], int] = {}
    for bases in signs:
        distinct = sorted(set(bases))
        for i, a in enumerate(distinct):
            for b in distinct[i + 1:]:
                counts[(a, b)] = counts.get((a, b), 0) + 1
    return counts
