"""Operator command line: manifest tooling, shell queries, statistics,
exports, bulk replay, and the service launcher.

All output is machine-parsable (one item per line). Exit codes: 0 on
success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import load_manifest_file, validate_catalog
from .codes import parse_code
from .document import parse_text
from .errors import EngineError
from .facets import FacetIndex, FacetQuery
from .generator import FULL_BASE_BUDGET, generate_manifest
from .hints import hints_for
from .store import EXPORT_FORMATS, SignStore


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        print(f"error: {exc.token}: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swiftkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="load a manifest and print its counts")
    p.add_argument("--manifest", required=True, type=Path)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen-manifest", help="emit a synthetic full-scale manifest")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--bases", type=int, default=FULL_BASE_BUDGET,
                   help=f"approximate number of base symbols (100..{FULL_BASE_BUDGET})")
    p.add_argument("--out", required=True, type=Path)
    p.set_defaults(func=cmd_gen_manifest)

    p = sub.add_parser("query", help="run a faceted glyph query")
    p.add_argument("--manifest", required=True, type=Path)
    p.add_argument("--area", required=True)
    p.add_argument("--family")
    p.add_argument("--facet", action="append", default=[], metavar="NAME=VALUE")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("hints", help="rank compatible glyphs for a display set")
    p.add_argument("--manifest", required=True, type=Path)
    p.add_argument("--store", required=True, type=Path)
    p.add_argument("--display", default="", metavar="CODE,CODE,...")
    p.add_argument("--area", required=True)
    p.add_argument("--limit", type=int, default=24)
    p.add_argument("--threshold", type=int, default=1)
    p.set_defaults(func=cmd_hints)

    p = sub.add_parser("stats", help="co-occurrence table maintenance")
    stats_sub = p.add_subparsers(dest="stats_command", required=True)
    q = stats_sub.add_parser("rebuild", help="recompute the table from the record file")
    q.add_argument("--store", required=True, type=Path)
    q.set_defaults(func=cmd_stats_rebuild)
    q = stats_sub.add_parser("export", help="print pair counts, one per line")
    q.add_argument("--store", required=True, type=Path)
    q.set_defaults(func=cmd_stats_export)

    p = sub.add_parser("export", help="write one saved sign to stdout")
    p.add_argument("--store", required=True, type=Path)
    p.add_argument("--manifest", type=Path, help="required for --format svg")
    p.add_argument("--id", required=True, type=int, dest="sign_id")
    p.add_argument("--format", required=True, choices=EXPORT_FORMATS)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("replay", help="bulk-save a directory of .swt files")
    p.add_argument("--dir", required=True, type=Path)
    p.add_argument("--store", required=True, type=Path)
    p.add_argument("--manifest", required=True, type=Path)
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("serve", help="launch the HTTP service")
    p.add_argument("--config", required=True, type=Path)
    p.set_defaults(func=cmd_serve)

    return parser


def cmd_validate(args) -> int:
    catalog = load_manifest_file(args.manifest)
    validate_catalog(catalog)
    tax = catalog.taxonomy
    families = sum(len(c.families) for c in tax.categories)
    subfamilies = sum(len(f.subfamilies) for c in tax.categories for f in c.families)
    print(f"areas {len(tax.areas)}")
    print(f"categories {len(tax.categories)}")
    print(f"families {families}")
    print(f"subfamilies {subfamilies}")
    print(f"records {len(catalog)}")
    print(f"hash {catalog.manifest_hash}")
    return 0


def cmd_gen_manifest(args) -> int:
    text = generate_manifest(seed=args.seed, bases=args.bases)
    args.out.write_bytes(text.encode("utf-8"))
    lines = text.split("\n")
    records = sum(1 for line in lines if line and not line.startswith("#!")) - 1
    print(f"out {args.out}")
    print(f"records {records}")
    return 0


def cmd_query(args) -> int:
    catalog = load_manifest_file(args.manifest)
    assignment = {}
    for pair in args.facet:
        name, sep, value = pair.partition("=")
        if not sep or not name or not value:
            print(f"error: --facet expects NAME=VALUE, got {pair!r}", file=sys.stderr)
            return 2
        assignment[name] = value
    q = FacetQuery(area=args.area, family=args.family, assignment=assignment)
    result = FacetIndex(catalog).query(q)
    for code in result.codes:
        print(code)
    return 0


def cmd_hints(args) -> int:
    catalog = load_manifest_file(args.manifest)
    store = SignStore(args.store, catalog=catalog)
    display = [parse_code(token) for token in args.display.split(",") if token]
    result = hints_for(store.table, display, args.area, catalog,
                       limit=args.limit, threshold=args.threshold)
    for code, score in result.entries:
        print(f"{code} {score}")
    return 0


def cmd_stats_rebuild(args) -> int:
    store = SignStore(args.store)
    table = store.rebuild_stats()
    print(f"signs {table.signs_seen}")
    print(f"pairs {len(table)}")
    return 0


def cmd_stats_export(args) -> int:
    store = SignStore(args.store)
    for line in store.table.export_lines():
        print(line)
    return 0


def cmd_export(args) -> int:
    catalog = load_manifest_file(args.manifest) if args.manifest else None
    store = SignStore(args.store, catalog=catalog)
    sys.stdout.buffer.write(store.export(args.sign_id, args.format))
    sys.stdout.buffer.flush()
    return 0


def cmd_replay(args) -> int:
    catalog = load_manifest_file(args.manifest)
    store = SignStore(args.store, catalog=catalog)
    count = 0
    for path in sorted(args.dir.glob("*.swt")):
        document = parse_text(path.read_text(encoding="utf-8"))
        store.save(document, gloss=path.stem)
        count += 1
    print(f"replayed {count}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app, parse_config

    config = parse_config(args.config)
    try:
        app = create_app(config)
    except (EngineError, OSError) as exc:
        print(f"error: cannot start service: {exc}", file=sys.stderr)
        return 1
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


if __name__ == "__main__":
    sys.exit(main())
