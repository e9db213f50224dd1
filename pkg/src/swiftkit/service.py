"""HTTP face of the engine: catalog browsing, faceted queries, sign CRUD,
hints, and exports.

Every read endpoint returns a pure serialization of the corresponding
engine call, built with one deterministic JSON dumper so response bodies
are byte-stable. Errors carry a machine token mirroring the engine error
names plus a human message. Facet choices travel as ``f.<facet>=<value>``
query parameters, so request URLs are order-free like the queries they
describe.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.staticfiles import StaticFiles

from .catalog import Catalog, GlyphRecord, load_manifest_file
from .codes import parse_code
from .document import add_glyph, new_document
from .errors import EngineError, VariantUnavailable
from .facets import FacetIndex, FacetQuery, QueryResult
from .hints import HintList, hints_for
from .store import EXPORT_FORMATS, SignRecord, SignStore, SignSummary, record_to_json


class BadRequest(EngineError):
    """Request-shape problem (missing/duplicated/unparseable parameter)."""


_STATUS = {
    "NotFound": 404,
    "VariantUnavailable": 404,
    "UnknownCode": 404,
    "StoreUnavailable": 503,
    "StoreCorrupt": 500,
}


@dataclass
class ApiConfig:
    manifest: Path
    store: Path
    host: str = "127.0.0.1"
    port: int = 8000
    canvas_width: int = 500
    canvas_height: int = 500
    hint_limit: int = 24
    hint_threshold: int = 1
    asset_dir: Path | None = None  # defaults to the manifest's directory
    ui_dir: Path | None = None


def parse_config(path: str | Path) -> ApiConfig:
    """Read the ``key = value`` config format used by the serve command."""
    values: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").split("\n"), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition("=")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        values[key.strip()] = value.strip()
    known = {
        "manifest", "store", "host", "port", "canvas_width", "canvas_height",
        "hint_limit", "hint_threshold", "asset_dir", "ui_dir",
    }
    unknown = set(values) - known
    if unknown:
        raise ValueError(f"{path}: unknown config keys {sorted(unknown)}")
    for required in ("manifest", "store"):
        if required not in values:
            raise ValueError(f"{path}: missing required key {required!r}")
    config = ApiConfig(manifest=Path(values["manifest"]), store=Path(values["store"]))
    if "host" in values:
        config.host = values["host"]
    for key in ("port", "canvas_width", "canvas_height", "hint_limit", "hint_threshold"):
        if key in values:
            setattr(config, key, int(values[key]))
    if "asset_dir" in values:
        config.asset_dir = Path(values["asset_dir"])
    if "ui_dir" in values:
        config.ui_dir = Path(values["ui_dir"])
    return config


# -- serialization ----------------------------------------------------------

def json_bytes(payload) -> bytes:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def taxonomy_payload(catalog: Catalog) -> dict:
    tax = catalog.taxonomy
    return {
        "areas": [
            {
                "area": area,
                "categories": [
                    {
                        "id": cat.ident,
                        "name": cat.name,
                        "families": [
                            {
                                "id": fam.ident,
                                "name": fam.name,
                                "facets": [
                                    {"name": f.name, "icon": f.icon, "values": list(f.values)}
                                    for f in fam.facets
                                ],
                                "subfamilies": [
                                    {"id": s.ident, "name": s.name} for s in fam.subfamilies
                                ],
                            }
                            for fam in cat.families
                        ],
                    }
                    for cat in tax.categories
                    if cat.area == area
                ],
            }
            for area in tax.areas
        ]
    }


def query_payload(result: QueryResult, offset: int = 0, limit: int | None = None) -> dict:
    end = None if limit is None else offset + limit
    return {
        "codes": list(result.codes[offset:end]),
        "count": result.count,
        "available": {name: list(values) for name, values in result.available.items()},
    }


def glyph_payload(record: GlyphRecord) -> dict:
    return {
        "code": f"S{record.code.base:03x}{record.code.fill}{record.code.rotation:x}",
        "category": record.category,
        "family": record.family,
        "subfamily": record.subfamily,
        "area": record.area,
        "facets": dict(record.facets),
        "asset": record.asset,
        "w": record.asset_w,
        "h": record.asset_h,
    }


def hints_payload(hint_list: HintList) -> dict:
    return {
        "entries": [[code, score] for code, score in hint_list.entries],
        "count": hint_list.count,
    }


def record_payload(record: SignRecord) -> dict:
    return json.loads(record_to_json(record))


def summaries_payload(summaries: list[SignSummary], total: int) -> dict:
    return {
        "signs": [
            {
                "id": s.id,
                "created_at": s.created_at,
                "gloss": s.gloss,
                "glyph_count": s.glyph_count,
            }
            for s in summaries
        ],
        "total": total,
    }


# -- request parsing --------------------------------------------------------

def _int_param(params, name: str, default, minimum: int):
    raw = params.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise BadRequest(f"parameter {name!r} must be an integer") from None
    if value < minimum:
        raise BadRequest(f"parameter {name!r} must be >= {minimum}")
    return value


def _facet_assignment(params) -> dict[str, str]:
    assignment: dict[str, str] = {}
    for key in params.keys():
        if not key.startswith("f."):
            continue
        values = params.getlist(key)
        if len(values) != 1:
            raise BadRequest(f"facet parameter {key!r} given more than once")
        assignment[key[2:]] = values[0]
    return assignment


def _display_codes(params):
    raw = params.get("display", "")
    if not raw:
        return []
    return [parse_code(token) for token in raw.split(",")]


# -- application ------------------------------------------------------------

def create_app(config: ApiConfig) -> FastAPI:
    """Load the catalog and store, then expose them; startup failures
    propagate so the operator sees which resource is broken."""
    catalog = load_manifest_file(config.manifest)
    index = FacetIndex(catalog)
    store = SignStore(config.store, catalog=catalog)
    app = FastAPI(openapi_url=None, docs_url=None, redoc_url=None)
    app.state.catalog = catalog
    app.state.index = index
    app.state.store = store
    app.state.config = config

    def jres(payload, status_code: int = 200) -> Response:
        return Response(
            content=json_bytes(payload), status_code=status_code,
            media_type="application/json",
        )

    @app.exception_handler(EngineError)
    async def engine_error(_request: Request, exc: EngineError):
        status = _STATUS.get(exc.token, 400)
        return jres({"error": exc.token, "message": str(exc)}, status_code=status)

    @app.get("/api/areas")
    def areas():
        return jres(taxonomy_payload(catalog))

    @app.get("/api/glyphs")
    def glyphs(request: Request):
        params = request.query_params
        area = params.get("area")
        if area is None:
            raise BadRequest("parameter 'area' is required")
        q = FacetQuery(area=area, family=params.get("family"),
                       assignment=_facet_assignment(params))
        offset = _int_param(params, "offset", 0, minimum=0)
        limit = _int_param(params, "limit", None, minimum=1)
        return jres(query_payload(index.query(q), offset, limit))

    @app.get("/api/glyphs/{code}")
    def glyph(code: str):
        record = catalog.get(parse_code(code))
        if record is None:
            raise VariantUnavailable(f"code {code} not in catalog")
        return jres(glyph_payload(record))

    @app.get("/api/hints")
    def hints(request: Request):
        params = request.query_params
        area = params.get("area")
        if area is None:
            raise BadRequest("parameter 'area' is required")
        display = _display_codes(params)
        limit = _int_param(params, "limit", config.hint_limit, minimum=1)
        result = hints_for(store.table, display, area, catalog, limit,
                           threshold=config.hint_threshold)
        return jres(hints_payload(result))

    @app.post("/api/signs")
    async def save_sign(request: Request):
        try:
            body = json.loads(await request.body())
        except json.JSONDecodeError as exc:
            raise BadRequest(f"body is not JSON: {exc}") from None
        if not isinstance(body, dict):
            raise BadRequest("body must be a JSON object")
        unknown = set(body) - {"gloss", "canvas", "glyphs"}
        if unknown:
            raise BadRequest(f"unknown fields {sorted(unknown)}")
        gloss = body.get("gloss")
        if gloss is not None and not isinstance(gloss, str):
            raise BadRequest("gloss must be a string")
        canvas = body.get("canvas", [config.canvas_width, config.canvas_height])
        if (
            not isinstance(canvas, list) or len(canvas) != 2
            or not all(isinstance(v, int) and v >= 1 for v in canvas)
        ):
            raise BadRequest("canvas must be [w, h] with w, h >= 1")
        glyphs = body.get("glyphs", [])
        if not isinstance(glyphs, list):
            raise BadRequest("glyphs must be a list of [code, x, y]")
        document = new_document(canvas[0], canvas[1])
        for entry in glyphs:
            if (
                not isinstance(entry, list) or len(entry) != 3
                or not isinstance(entry[0], str)
                or not all(isinstance(v, int) for v in entry[1:])
            ):
                raise BadRequest(f"bad glyph entry {entry!r}")
            document, _ = add_glyph(document, parse_code(entry[0]), entry[1], entry[2], catalog)
        return jres(record_payload(store.save(document, gloss=gloss)))

    @app.get("/api/signs")
    def list_signs(request: Request):
        params = request.query_params
        offset = _int_param(params, "offset", 0, minimum=0)
        limit = _int_param(params, "limit", None, minimum=1)
        return jres(summaries_payload(store.list(offset, limit), total=len(store)))

    @app.get("/api/signs/{sign_id}")
    def get_sign(sign_id: str):
        return jres(record_payload(store.get(_parse_id(sign_id))))

    @app.get("/api/signs/{sign_id}/export")
    def export_sign(sign_id: str, request: Request):
        fmt = request.query_params.get("format")
        if fmt not in EXPORT_FORMATS:
            raise BadRequest(f"format must be one of {', '.join(EXPORT_FORMATS)}")
        payload = store.export(_parse_id(sign_id), fmt)
        media = {
            "text": "text/plain; charset=utf-8",
            "svg": "image/svg+xml",
            "record": "application/json",
        }[fmt]
        return Response(content=payload, media_type=media)

    asset_dir = config.asset_dir or Path(config.manifest).parent
    app.mount("/assets", StaticFiles(directory=asset_dir, check_dir=False), name="assets")
    if config.ui_dir is not None:
        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")
    return app


def _parse_id(raw: str) -> int:
    try:
        sign_id = int(raw)
    except ValueError:
        raise BadRequest("sign id must be an integer") from None
    if sign_id < 1:
        raise BadRequest("sign id must be >= 1")
    return sign_id
