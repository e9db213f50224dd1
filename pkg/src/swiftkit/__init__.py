"""SignWriting composition engine.

Glyph catalog with a three-level taxonomy, order-free faceted search,
z-ordered sign documents with multi-select transforms, co-occurrence
hints over saved signs, an append-only sign store, and an HTTP editor API.
"""

from .catalog import (
    Catalog,
    Category,
    Facet,
    Family,
    GlyphRecord,
    Subfamily,
    Taxonomy,
    decline,
    load_manifest,
    load_manifest_file,
    validate_catalog,
)
from .codes import GlyphCode, canonical, parse_code
from .document import (
    Placement,
    SignDocument,
    add_glyph,
    clear,
    duplicate,
    erase,
    move,
    new_document,
    parse_text,
    render_svg,
    serialize_text,
    transform_mirror,
    transform_rotate,
)
from .errors import EngineError
from .facets import FacetIndex, FacetQuery, QueryResult, orderings_agree, query, refine
from .generator import generate_manifest
from .hints import CooccurrenceTable, HintList, hints_for, rebuild
from .store import SignRecord, SignStore, SignSummary

__version__ = "0.1.0"

__all__ = [
    "Catalog", "Category", "CooccurrenceTable", "EngineError", "Facet",
    "FacetIndex", "FacetQuery", "Family", "GlyphCode", "GlyphRecord",
    "HintList", "Placement", "QueryResult", "SignDocument", "SignRecord",
    "SignStore", "SignSummary", "Subfamily", "Taxonomy", "add_glyph",
    "canonical", "clear", "decline", "duplicate", "erase", "generate_manifest",
    "hints_for", "load_manifest", "load_manifest_file", "move", "new_document",
    "orderings_agree", "parse_code", "parse_text", "query", "rebuild", "refine",
    "render_svg", "serialize_text", "transform_mirror", "transform_rotate",
    "validate_catalog",
]
