import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from swiftkit import (
    GlyphCode,
    add_glyph,
    canonical,
    clear,
    duplicate,
    erase,
    move,
    new_document,
    parse_code,
    parse_text,
    render_svg,
    serialize_text,
    transform_mirror,
    transform_rotate,
)
from swiftkit.errors import (
    BadPrefix,
    BadVersion,
    OutOfCanvas,
    TextSyntaxError,
    UnknownCode,
    UnknownId,
    VariantUnavailable,
)

S10000 = parse_code("S10000")
S10100 = parse_code("S10100")


def build_doc(*placements, size=(200, 200)):
    doc = new_document(*size)
    ids = []
    for code, x, y in placements:
        doc, pid = add_glyph(doc, code, x, y)
        ids.append(pid)
    return doc, ids


def doc_shape(doc):
    return (doc.width, doc.height, [(canonical(p.code), p.x, p.y) for p in doc.placements])


def random_code(rng):
    return GlyphCode(rng.randint(256, 907), rng.randint(0, 5), rng.randint(0, 15))


def random_doc(rng, max_placements=8):
    doc = new_document(rng.randint(50, 400), rng.randint(50, 400))
    for _ in range(rng.randint(0, max_placements)):
        doc, _ = add_glyph(doc, random_code(rng), rng.randint(0, 600), rng.randint(0, 600))
    return doc


# -- add --------------------------------------------------------------------

def test_add_to_empty_document():
    doc, ids = build_doc((S10000, 10, 10))
    assert ids == [1]
    assert len(doc.placements) == 1
    assert doc.next_id == 2


def test_add_appends_in_z_order():
    doc, ids = build_doc((S10000, 10, 10), (S10100, 20, 20))
    assert [p.id for p in doc.placements] == ids


def test_add_negative_position():
    doc = new_document(200, 200)
    with pytest.raises(OutOfCanvas):
        add_glyph(doc, S10000, -1, 0)


def test_add_bound_respects_asset_size(variant_catalog):
    doc = new_document(50, 50)
    add_glyph(doc, S10000, 40, 40, variant_catalog)  # 10x10 asset fits exactly
    with pytest.raises(OutOfCanvas):
        add_glyph(doc, S10000, 41, 40, variant_catalog)


def test_add_bound_unknown_code(variant_catalog):
    doc = new_document(200, 200)
    with pytest.raises(UnknownCode):
        add_glyph(doc, parse_code("S38b00"), 0, 0, variant_catalog)


# -- rotate / mirror ----------------------------------------------------------

def test_rotate_advances_within_half(variant_catalog):
    doc, ids = build_doc((S10000, 10, 10))
    rotated = transform_rotate(doc, ids, 1, variant_catalog)
    assert rotated.placements[0].code.rotation == 1


@pytest.mark.parametrize("start,steps,expected", [(7, 1, 0), (15, 1, 8), (0, 3, 3), (8, 9, 9), (2, -3, 7)])
def test_rotate_wraps(start, steps, expected, variant_catalog):
    doc, ids = build_doc((GlyphCode(256, 0, start), 10, 10))
    rotated = transform_rotate(doc, ids, steps, variant_catalog)
    assert rotated.placements[0].code.rotation == expected


def test_rotate_eight_steps_is_identity(variant_catalog):
    doc, ids = build_doc((S10000, 10, 10), (GlyphCode(257, 3, 12), 30, 30))
    assert transform_rotate(doc, ids, 8, variant_catalog) == doc


def test_rotate_keeps_position_and_z(variant_catalog):
    doc, ids = build_doc((S10000, 10, 10), (S10100, 20, 20))
    rotated = transform_rotate(doc, [ids[0]], 2, variant_catalog)
    assert [(p.id, p.x, p.y) for p in rotated.placements] == [(p.id, p.x, p.y) for p in doc.placements]


def test_rotate_atomic_on_missing_variant(toy_catalog):
    # toy catalog has no rotation 1 for S10130's base at fill 3
    doc, ids = build_doc((parse_code("S10130"), 10, 10), (parse_code("S10000"), 20, 20))
    before = serialize_text(doc)
    with pytest.raises(VariantUnavailable):
        transform_rotate(doc, ids, 1, toy_catalog)
    assert serialize_text(doc) == before


def test_rotate_unknown_id(variant_catalog):
    doc, _ = build_doc((S10000, 10, 10))
    with pytest.raises(UnknownId):
        transform_rotate(doc, [99], 1, variant_catalog)


def test_mirror_toggles_half(variant_catalog):
    doc, ids = build_doc((S10000, 10, 10))
    mirrored = transform_mirror(doc, ids, variant_catalog)
    assert mirrored.placements[0].code.rotation == 8
    assert transform_mirror(mirrored, ids, variant_catalog) == doc


def test_mirror_atomic_on_missing_variant(toy_catalog):
    doc, ids = build_doc((parse_code("S10000"), 10, 10))
    before = serialize_text(doc)
    with pytest.raises(VariantUnavailable):
        transform_mirror(doc, ids, toy_catalog)
    assert serialize_text(doc) == before


def test_multi_select_equals_sequential_singles(variant_catalog):
    doc, ids = build_doc((S10000, 10, 10), (GlyphCode(257, 2, 5), 30, 40))
    both = transform_rotate(doc, ids, 3, variant_catalog)
    one_by_one = transform_rotate(
        transform_rotate(doc, [ids[0]], 3, variant_catalog), [ids[1]], 3, variant_catalog
    )
    assert both == one_by_one


# -- duplicate / erase / move / clear -----------------------------------------

def test_duplicate_offsets_copy():
    doc, ids = build_doc((S10000, 10, 10))
    doc2, new_ids = duplicate(doc, ids)
    assert len(doc2.placements) == 2
    copy = doc2.placement(new_ids[0])
    assert (copy.x, copy.y) == (20, 20)
    assert doc2.placements[0] == doc.placements[0]


def test_duplicate_preserves_relative_order():
    doc, ids = build_doc((S10000, 10, 10), (S10100, 30, 30), (S10000, 50, 50))
    doc2, new_ids = duplicate(doc, [ids[2], ids[0]])
    # copies appended on top, in the originals' z-order
    assert [p.id for p in doc2.placements] == ids + list(new_ids)
    assert canonical(doc2.placement(new_ids[0]).code) == "S10000"
    assert (doc2.placement(new_ids[0]).x, doc2.placement(new_ids[1]).x) == (20, 60)


def test_duplicate_overflow_is_atomic(variant_catalog):
    doc = new_document(50, 50)
    doc, ids = add_glyph(doc, S10000, 0, 0, variant_catalog)
    doc, id2 = add_glyph(doc, S10000, 40, 40, variant_catalog)
    with pytest.raises(OutOfCanvas):
        duplicate(doc, [ids, id2], variant_catalog)
    assert len(doc.placements) == 2


def test_erase_selected_only():
    doc, ids = build_doc((S10000, 10, 10), (S10100, 30, 30), (S10000, 50, 50))
    remaining = erase(doc, [ids[1]])
    assert [p.id for p in remaining.placements] == [ids[0], ids[2]]


def test_erase_all_empties_document():
    doc, ids = build_doc((S10000, 10, 10), (S10100, 30, 30))
    assert erase(doc, ids).placements == ()


def test_move_zero_is_identity():
    doc, ids = build_doc((S10000, 10, 10))
    assert move(doc, ids, 0, 0) == doc


def test_move_round_trip_is_identity():
    doc, ids = build_doc((S10000, 10, 10), (S10100, 30, 30))
    assert move(move(doc, ids, 5, -3), ids, -5, 3) == doc


def test_move_out_of_canvas_is_atomic():
    doc, ids = build_doc((S10000, 0, 0), (S10100, 30, 30))
    with pytest.raises(OutOfCanvas):
        move(doc, ids, -1, 0)
    assert doc.placement(ids[0]).x == 0


def test_clear_keeps_dimensions():
    doc, _ = build_doc((S10000, 10, 10))
    cleared = clear(doc)
    assert cleared.placements == ()
    assert (cleared.width, cleared.height) == (200, 200)


# -- SWT text format -----------------------------------------------------------

def test_serialize_empty_document():
    assert serialize_text(new_document(200, 200)) == "swt 1\ncanvas 200 200\n"


def test_serialize_one_placement():
    doc, _ = build_doc((S10000, 10, 10))
    assert serialize_text(doc) == "swt 1\ncanvas 200 200\nglyph S10000 10 10\n"


def test_parse_round_trip_simple():
    text = "swt 1\ncanvas 200 200\nglyph S10000 10 10\nglyph S14c20 35 40\n"
    doc = parse_text(text)
    assert serialize_text(doc) == text
    assert [p.id for p in doc.placements] == [1, 2]
    assert doc.next_id == 3


@pytest.mark.parametrize(
    "text",
    [
        "swt 1\ncanvas 200 200",              # missing trailing newline
        "swt 1\ncanvas 200 200\r\n",          # CR is not part of the grammar
        "swt 1\ncanvas  200 200\n",           # double space
        "swt 1\ncanvas 200 200\nglyph S10000 010 10\n",  # leading zero
        "swt 1\ncanvas 200 200\nglyph S10000 10\n",
        "swt 1\ncanvas 0 200\n",
        "swt 1\n",
        "canvas 200 200\nswt 1\n",
        "swt 1\ncanvas 200 200\nglyph S10000 -1 10\n",
        "swt 1\ncanvas 200 200\n\nglyph S10000 1 1\n",
    ],
)
def test_parse_rejects_grammar_violations(text):
    with pytest.raises(TextSyntaxError):
        parse_text(text)


def test_parse_rejects_unknown_version():
    with pytest.raises(BadVersion):
        parse_text("swt 2\ncanvas 200 200\n")


def test_parse_propagates_code_errors():
    with pytest.raises(BadPrefix):
        parse_text("swt 1\ncanvas 200 200\nglyph T10000 1 1\n")


def test_parse_reports_line_numbers():
    with pytest.raises(TextSyntaxError) as err:
        parse_text("swt 1\ncanvas 200 200\nglyph S10000 1 1\nbogus\n")
    assert err.value.details.get("line") == 4


def test_round_trip_random_documents():
    rng = random.Random(99)
    for _ in range(200):
        doc = random_doc(rng)
        again = parse_text(serialize_text(doc))
        assert doc_shape(again) == doc_shape(doc)
        assert serialize_text(again) == serialize_text(doc)


@given(st.integers(1, 3000), st.integers(1, 3000))
def test_canvas_line_round_trips(w, h):
    doc = new_document(w, h)
    assert parse_text(serialize_text(doc)) == doc


# -- SVG ------------------------------------------------------------------------

def test_svg_empty(variant_catalog):
    svg = render_svg(new_document(300, 120), variant_catalog)
    assert svg == b'<svg xmlns="http://www.w3.org/2000/svg" width="300" height="120">\n</svg>\n'


def test_svg_single_placement(variant_catalog):
    doc, _ = build_doc((S10000, 10, 12))
    svg = render_svg(doc, variant_catalog).decode()
    assert svg.count("<image") == 1
    assert 'href="S10000.png"' in svg
    assert 'x="10" y="12" width="10" height="10"' in svg


def test_svg_is_deterministic(variant_catalog):
    doc, _ = build_doc((S10000, 10, 12), (S10100, 40, 50))
    assert render_svg(doc, variant_catalog) == render_svg(doc, variant_catalog)


def test_svg_element_order_matches_z_order(variant_catalog):
    rng = random.Random(5)
    codes = list(variant_catalog.records)
    for _ in range(20):
        doc = new_document(500, 500)
        for _ in range(rng.randint(0, 6)):
            doc, _ = add_glyph(doc, parse_code(rng.choice(codes)), rng.randint(0, 100), rng.randint(0, 100))
        lines = render_svg(doc, variant_catalog).decode().splitlines()
        hrefs = [line.split('href="')[1].split('"')[0] for line in lines if "<image" in line]
        assert hrefs == [f"{canonical(p.code)}.png" for p in doc.placements]


def test_svg_unknown_code(toy_catalog):
    doc, _ = build_doc((GlyphCode(900, 0, 0), 10, 10))
    with pytest.raises(UnknownCode):
        render_svg(doc, toy_catalog)
