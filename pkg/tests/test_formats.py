"""Drawing documents and SVG: round trips, rejects, golden stability."""

import json
from pathlib import Path

import pytest

from halindraw.drawing import LayeredDrawing
from halindraw.formats import (DocumentError, parse_drawing, render_svg,
                               serialize_drawing)
from halindraw.layout import close_cycle, draw_skirted
from halindraw.pipeline import transform_to_halin
from halindraw.rational import rat
from halindraw.straighten import ymonotone_to_straightline
from halindraw.trees import build_halin, parse_tree, reroot_at
from halindraw.width import best_leaf_root

GOLDEN = Path(__file__).parent / "golden"


def k4_drawing():
    star = parse_tree("(,,)")
    rooted = reroot_at(star, best_leaf_root(star)[0])
    return ymonotone_to_straightline(
        close_cycle(draw_skirted(rooted, "WWW"), rooted))


def test_round_trip_equal():
    d = k4_drawing()
    text = serialize_drawing(d)
    d2 = parse_drawing(text)
    assert d2.points == d.points
    assert d2.routes == d.routes
    assert serialize_drawing(d2) == text


def test_rational_x_preserved():
    t = parse_tree("(a,(c,),b)")
    td = draw_skirted(t, "WWE")  # the ray turn introduces half-integer bends
    text = serialize_drawing(td.drawing)
    d2 = parse_drawing(text)
    assert d2.routes == td.drawing.routes
    assert "1/2" in text or "/2" in text


def test_non_integer_layer_rejected():
    d = k4_drawing()
    text = serialize_drawing(d)
    doc = json.loads(text)
    name = next(iter(doc["vertexPos"]))
    doc["vertexPos"][name][1] = 2.5
    with pytest.raises(DocumentError):
        parse_drawing(json.dumps(doc))


def test_malformed_rational_rejected():
    d = k4_drawing()
    doc = json.loads(serialize_drawing(d))
    name = next(iter(doc["vertexPos"]))
    doc["vertexPos"][name][0] = "1.5"
    with pytest.raises(ValueError):
        parse_drawing(json.dumps(doc))


def test_schema_mismatch_rejected():
    doc = json.loads(serialize_drawing(k4_drawing()))
    doc["schema"] = "something-else"
    with pytest.raises(DocumentError):
        parse_drawing(json.dumps(doc))
    with pytest.raises(DocumentError):
        parse_drawing("not json at all")


def test_svg_element_counts():
    svg = render_svg(k4_drawing())
    assert svg.count("<circle") == 4
    assert svg.count("<polyline") == 6
    assert svg.count("<line") == 3  # one guide per layer
    assert svg.count("stroke-dasharray") == 3  # cycle edges dashed


def test_svg_empty_drawing():
    d = LayeredDrawing({0: (0, 1)}, {}, parse_tree("a"))
    svg = render_svg(d)
    assert svg.startswith("<?xml") and svg.rstrip().endswith("</svg>")


def _golden(name: str, text: str):
    path = GOLDEN / name
    if not path.exists():  # pragma: no cover - first run only
        path.parent.mkdir(exist_ok=True)
        path.write_text(text)
    assert path.read_text() == text


def test_golden_k4():
    d = k4_drawing()
    _golden("k4.json", serialize_drawing(d))
    _golden("k4.svg", render_svg(d))


def test_golden_c1_skirted():
    from halindraw.families import FamilyParams, gen_C
    c1 = gen_C(FamilyParams(1))
    td = draw_skirted(c1, "WWW")
    _golden("c1_skirted.json", serialize_drawing(td.drawing))


def test_golden_rpw3():
    t = parse_tree("((,,),(,,),(,,))")
    rooted = reroot_at(t, best_leaf_root(t)[0])
    d = ymonotone_to_straightline(
        close_cycle(draw_skirted(rooted, "WWW"), rooted))
    _golden("rpw3_straight.json", serialize_drawing(d))
    _golden("rpw3_straight.svg", render_svg(d))


def test_golden_transform():
    out = transform_to_halin(build_halin(parse_tree("((a,b),(c,d),e)")))
    _golden("transform_small.json", serialize_drawing(out))
