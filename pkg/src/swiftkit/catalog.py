"""Glyph catalog: manifest ingestion and the immutable taxonomy.

The manifest is UTF-8 text with LF endings. A header block of ``#!``
directives declares the taxonomy, then a fixed header row, then one data
row per glyph:

    #! areas: head,shoulders,arms,hands,contacts,punctuation,movement
    #! taxon: <category>,<area>
    #! family: <category>/<family>
    #! facet: <category>/<family>/<facet>=<v1>|<v2>|...
    #! subfamily: <category>/<family>/<subfamily>
    code,category,family,subfamily,area,asset,w,h,facets
    S14c20,hand_config,index,straight,hands,S14c20.png,30,38,fingers=1;plane=wall;view=palm

The manifest is the single source of truth: no taxonomy or glyph data is
hard coded anywhere in the engine. A loaded Catalog is immutable and safe
to share between threads.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO, Mapping

from .codes import GlyphCode, canonical, parse_code
from .errors import (
    DuplicateCode,
    EngineError,
    FacetMismatch,
    MalformedRow,
    UnknownArea,
    UnknownTaxonPath,
    VariantUnavailable,
)

HEADER_ROW = "code,category,family,subfamily,area,asset,w,h,facets"

# identifiers for areas/categories/families/subfamilies/facet names and values
_TOKEN_RE = re.compile(r"^[a-z0-9][a-z0-9_-]*$")


@dataclass(frozen=True)
class Facet:
    """One Choose Box: a named feature with mutually exclusive values."""

    name: str
    icon: str
    values: tuple[str, ...]


@dataclass(frozen=True)
class Subfamily:
    ident: str
    name: str


@dataclass(frozen=True)
class Family:
    ident: str
    name: str
    facets: tuple[Facet, ...] = ()
    subfamilies: tuple[Subfamily, ...] = ()

    def facet(self, name: str) -> Facet | None:
        for f in self.facets:
            if f.name == name:
                return f
        return None


@dataclass(frozen=True)
class Category:
    ident: str
    name: str
    area: str
    families: tuple[Family, ...] = ()

    def family(self, ident: str) -> Family | None:
        for f in self.families:
            if f.ident == ident:
                return f
        return None


@dataclass(frozen=True)
class Taxonomy:
    areas: tuple[str, ...]
    categories: tuple[Category, ...]

    def category(self, ident: str) -> Category | None:
        for c in self.categories:
            if c.ident == ident:
                return c
        return None

    def family_in_area(self, area: str, family: str) -> tuple[Category, Family] | None:
        """First (category, family) under ``area`` with that family ident."""
        for cat in self.categories:
            if cat.area != area:
                continue
            fam = cat.family(family)
            if fam is not None:
                return cat, fam
        return None


@dataclass(frozen=True)
class GlyphRecord:
    code: GlyphCode
    category: str
    family: str
    subfamily: str
    area: str
    facets: Mapping[str, str] = field(default_factory=dict)
    asset: str = ""
    asset_w: int = 1
    asset_h: int = 1


class Catalog:
    """Immutable set of glyph records plus the taxonomy they live in.

    ``records`` maps canonical code -> GlyphRecord in manifest order.
    """

    def __init__(self, taxonomy: Taxonomy, records: dict[str, GlyphRecord], manifest_hash: str):
        self.taxonomy = taxonomy
        self.records = records
        self.manifest_hash = manifest_hash

    def __len__(self) -> int:
        return len(self.records)

    def __contains__(self, code) -> bool:
        key = canonical(code) if isinstance(code, GlyphCode) else code
        return key in self.records

    def get(self, code) -> GlyphRecord | None:
        key = canonical(code) if isinstance(code, GlyphCode) else code
        return self.records.get(key)

    def require(self, code) -> GlyphRecord:
        rec = self.get(code)
        if rec is None:
            key = canonical(code) if isinstance(code, GlyphCode) else code
            raise VariantUnavailable(f"code {key} not in catalog")
        return rec


def decline(base: int, fill: int, rotation: int, catalog: Catalog) -> GlyphRecord:
    """Resolve a (base, fill, rotation) variant against the catalog.

    Raises VariantUnavailable when that combination was never declared; a
    syntactically valid code is not necessarily a real glyph.
    """
    return catalog.require(GlyphCode(base=base, fill=fill, rotation=rotation))


def load_manifest(source: bytes | str | BinaryIO) -> Catalog:
    """Parse and validate a manifest, returning an immutable Catalog.

    Every record is checked against the declared taxonomy and its family's
    facet schema; any violation aborts the load with the offending line.
    """
    if isinstance(source, bytes):
        raw = source
    elif isinstance(source, str):
        raw = source.encode("utf-8")
    else:
        raw = source.read()
    digest = hashlib.sha256(raw).hexdigest()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedRow(f"manifest is not UTF-8: {exc}") from None
    return _Parser().parse(text, digest)


def load_manifest_file(path: str | Path) -> Catalog:
    return load_manifest(Path(path).read_bytes())


class _Parser:
    def __init__(self):
        self.areas: tuple[str, ...] | None = None
        self.cat_area: dict[str, str] = {}
        self.cat_order: list[str] = []
        self.families: dict[str, list[str]] = {}           # category -> family idents
        self.facets: dict[tuple[str, str], list[Facet]] = {}
        self.subfamilies: dict[tuple[str, str], list[str]] = {}
        self.records: dict[str, GlyphRecord] = {}

    def parse(self, text: str, digest: str) -> Catalog:
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        header_seen = False
        for lineno, line in enumerate(lines, start=1):
            if not header_seen:
                if line.startswith("#!"):
                    self._directive(line, lineno)
                    continue
                if line != HEADER_ROW:
                    raise MalformedRow(
                        f"line {lineno}: expected header row {HEADER_ROW!r}", line=lineno
                    )
                if self.areas is None:
                    raise MalformedRow(
                        f"line {lineno}: no '#! areas:' directive before header row",
                        line=lineno,
                    )
                header_seen = True
                continue
            self._data_row(line, lineno)
        if not header_seen:
            raise MalformedRow("manifest has no header row")
        return Catalog(self._taxonomy(), self.records, digest)

    # -- directives ----------------------------------------------------

    def _directive(self, line: str, lineno: int):
        body = line[2:].strip()
        kind, sep, payload = body.partition(":")
        kind = kind.strip()
        payload = payload.strip()
        if not sep:
            raise MalformedRow(f"line {lineno}: malformed directive {line!r}", line=lineno)
        if kind == "areas":
            self._areas(payload, lineno)
        elif kind == "taxon":
            self._taxon(payload, lineno)
        elif kind == "family":
            self._family(payload, lineno)
        elif kind == "facet":
            self._facet(payload, lineno)
        elif kind == "subfamily":
            self._subfamily(payload, lineno)
        else:
            raise MalformedRow(f"line {lineno}: unknown directive {kind!r}", line=lineno)

    def _areas(self, payload: str, lineno: int):
        if self.areas is not None:
            raise MalformedRow(f"line {lineno}: duplicate areas directive", line=lineno)
        tokens = payload.split(",")
        if not tokens or any(not _TOKEN_RE.match(t) for t in tokens):
            raise MalformedRow(f"line {lineno}: bad area tokens {payload!r}", line=lineno)
        if len(set(tokens)) != len(tokens):
            raise MalformedRow(f"line {lineno}: repeated area token", line=lineno)
        self.areas = tuple(tokens)

    def _taxon(self, payload: str, lineno: int):
        parts = payload.split(",")
        if len(parts) != 2 or not all(_TOKEN_RE.match(p) for p in parts):
            raise MalformedRow(f"line {lineno}: bad taxon directive {payload!r}", line=lineno)
        ident, area = parts
        if self.areas is None or area not in self.areas:
            raise UnknownArea(f"line {lineno}: taxon {ident!r} names unknown area {area!r}", line=lineno)
        if ident in self.cat_area:
            raise MalformedRow(f"line {lineno}: duplicate category {ident!r}", line=lineno)
        self.cat_area[ident] = area
        self.cat_order.append(ident)
        self.families[ident] = []

    def _family(self, payload: str, lineno: int):
        parts = payload.split("/")
        if len(parts) != 2 or not all(_TOKEN_RE.match(p) for p in parts):
            raise MalformedRow(f"line {lineno}: bad family directive {payload!r}", line=lineno)
        cat, fam = parts
        if cat not in self.cat_area:
            raise UnknownTaxonPath(f"line {lineno}: family under unknown category {cat!r}", line=lineno)
        if fam in self.families[cat]:
            raise MalformedRow(f"line {lineno}: duplicate family {cat}/{fam}", line=lineno)
        self.families[cat].append(fam)
        self.facets[(cat, fam)] = []
        self.subfamilies[(cat, fam)] = []

    def _facet(self, payload: str, lineno: int):
        path, sep, values = payload.partition("=")
        parts = path.split("/")
        if not sep or len(parts) != 3 or not all(_TOKEN_RE.match(p) for p in parts):
            raise MalformedRow(f"line {lineno}: bad facet directive {payload!r}", line=lineno)
        cat, fam, facet = parts
        if (cat, fam) not in self.facets:
            raise UnknownTaxonPath(f"line {lineno}: facet under unknown family {cat}/{fam}", line=lineno)
        tokens = values.split("|")
        if len(tokens) < 2 or any(not _TOKEN_RE.match(t) for t in tokens):
            # a 1-value facet discriminates nothing
            raise MalformedRow(f"line {lineno}: facet needs >= 2 values: {payload!r}", line=lineno)
        if len(set(tokens)) != len(tokens):
            raise MalformedRow(f"line {lineno}: repeated facet value", line=lineno)
        declared = self.facets[(cat, fam)]
        if any(f.name == facet for f in declared):
            raise MalformedRow(f"line {lineno}: duplicate facet {facet!r}", line=lineno)
        declared.append(Facet(name=facet, icon=facet, values=tuple(tokens)))

    def _subfamily(self, payload: str, lineno: int):
        parts = payload.split("/")
        if len(parts) != 3 or not all(_TOKEN_RE.match(p) for p in parts):
            raise MalformedRow(f"line {lineno}: bad subfamily directive {payload!r}", line=lineno)
        cat, fam, sub = parts
        if (cat, fam) not in self.subfamilies:
            raise UnknownTaxonPath(f"line {lineno}: subfamily under unknown family {cat}/{fam}", line=lineno)
        if sub in self.subfamilies[(cat, fam)]:
            raise MalformedRow(f"line {lineno}: duplicate subfamily {sub!r}", line=lineno)
        self.subfamilies[(cat, fam)].append(sub)

    # -- data rows -----------------------------------------------------

    def _data_row(self, line: str, lineno: int):
        fields = line.split(",")
        if len(fields) != 9:
            raise MalformedRow(f"line {lineno}: expected 9 fields, got {len(fields)}", line=lineno)
        code_text, cat, fam, sub, area, asset, w_text, h_text, facet_text = fields
        try:
            code = parse_code(code_text)
        except EngineError as exc:
            raise MalformedRow(f"line {lineno}: bad code: {exc}", line=lineno) from None
        key = canonical(code)
        if key in self.records:
            raise DuplicateCode(f"line {lineno}: duplicate code {key}", code=key, line=lineno)
        if cat not in self.cat_area or fam not in self.families[cat] or sub not in self.subfamilies[(cat, fam)]:
            raise UnknownTaxonPath(
                f"line {lineno}: taxon path {cat}/{fam}/{sub} not declared", line=lineno
            )
        if area not in (self.areas or ()):
            raise UnknownArea(f"line {lineno}: unknown area {area!r}", line=lineno)
        if area != self.cat_area[cat]:
            raise UnknownArea(
                f"line {lineno}: area {area!r} does not match category {cat!r} ({self.cat_area[cat]!r})",
                line=lineno,
            )
        if not asset or asset.startswith("/") or ".." in asset:
            raise MalformedRow(f"line {lineno}: bad asset path {asset!r}", line=lineno)
        try:
            w, h = int(w_text), int(h_text)
        except ValueError:
            raise MalformedRow(f"line {lineno}: bad asset dimensions", line=lineno) from None
        if w < 1 or h < 1:
            raise MalformedRow(f"line {lineno}: asset dimensions must be >= 1", line=lineno)
        facets = self._row_facets(facet_text, cat, fam, lineno)
        self.records[key] = GlyphRecord(
            code=code, category=cat, family=fam, subfamily=sub, area=area,
            facets=facets, asset=asset, asset_w=w, asset_h=h,
        )

    def _row_facets(self, text: str, cat: str, fam: str, lineno: int) -> dict[str, str]:
        schema = self.facets[(cat, fam)]
        given: dict[str, str] = {}
        if text:
            for pair in text.split(";"):
                name, sep, value = pair.partition("=")
                if not sep or not name or not value:
                    raise FacetMismatch(f"line {lineno}: bad facet pair {pair!r}", line=lineno)
                if name in given:
                    raise FacetMismatch(f"line {lineno}: repeated facet {name!r}", line=lineno, facet=name)
                given[name] = value
        declared = {f.name for f in schema}
        if set(given) != declared:
            missing = declared - set(given)
            extra = set(given) - declared
            off = (sorted(missing) + sorted(extra))[0] if (missing or extra) else ""
            raise FacetMismatch(
                f"line {lineno}: facets {sorted(given)} do not match schema {sorted(declared)}",
                line=lineno, facet=off,
            )
        # normalize to schema order so record serialization is deterministic
        out: dict[str, str] = {}
        for facet in schema:
            value = given[facet.name]
            if value not in facet.values:
                raise FacetMismatch(
                    f"line {lineno}: value {value!r} not declared for facet {facet.name!r}",
                    line=lineno, facet=facet.name,
                )
            out[facet.name] = value
        return out

    # -- assembly ------------------------------------------------------

    def _taxonomy(self) -> Taxonomy:
        categories = []
        for cat in self.cat_order:
            fams = []
            for fam in self.families[cat]:
                fams.append(Family(
                    ident=fam,
                    name=fam,
                    facets=tuple(self.facets[(cat, fam)]),
                    subfamilies=tuple(Subfamily(ident=s, name=s) for s in self.subfamilies[(cat, fam)]),
                ))
            categories.append(Category(ident=cat, name=cat, area=self.cat_area[cat], families=tuple(fams)))
        return Taxonomy(areas=self.areas or (), categories=tuple(categories))


def validate_catalog(catalog: Catalog) -> None:
    """Exhaustive post-load check of every record invariant.

    The loader already enforces these row by row; this is the independent
    sweep used by the CLI validator and the test suite.
    """
    tax = catalog.taxonomy
    for key, rec in catalog.records.items():
        assert key == canonical(rec.code)
        cat = tax.category(rec.category)
        if cat is None or cat.family(rec.family) is None:
            raise UnknownTaxonPath(f"record {key}: path {rec.category}/{rec.family} missing")
        fam = cat.family(rec.family)
        if not any(s.ident == rec.subfamily for s in fam.subfamilies):
            raise UnknownTaxonPath(f"record {key}: subfamily {rec.subfamily} missing")
        if rec.area != cat.area or rec.area not in tax.areas:
            raise UnknownArea(f"record {key}: area {rec.area}")
        declared = {f.name: f for f in fam.facets}
        if set(rec.facets) != set(declared):
            raise FacetMismatch(f"record {key}: facet names")
        for name, value in rec.facets.items():
            if value not in declared[name].values:
                raise FacetMismatch(f"record {key}: facet {name}={value}")
        if rec.asset_w < 1 or rec.asset_h < 1:
            raise MalformedRow(f"record {key}: asset dimensions")
