import io
import json
import xml.etree.ElementTree as ET
from fractions import Fraction
from pathlib import Path

import pytest

from tropgeom.cli import run
from tropgeom.errors import EmptyView
from tropgeom.render import fmt, parse_scene, render, render_document
from tropgeom.serialize import MalformedInput

DATA = Path(__file__).parent / "data"
SCENES = sorted((DATA / "scenes").glob("*.json"))
NS = {"s": "http://www.w3.org/2000/svg"}


def load(path):
    return json.loads(path.read_text(encoding="utf-8"))


def segments(svg, group="lines"):
    root = ET.fromstring(svg)
    g = root.find(f"s:g[@id='{group}']", NS)
    return [tuple(Fraction(e.get(k)) for k in ("x1", "y1", "x2", "y2")) + (e.get("stroke-dasharray"),)
            for e in g.findall("s:line", NS)]


def test_six_reference_scenes():
    assert len(SCENES) == 6


@pytest.mark.parametrize("scene", SCENES, ids=[s.stem for s in SCENES])
def test_golden_byte_identical(scene):
    golden = (DATA / "golden" / f"{scene.stem}.svg").read_bytes()
    doc = load(scene)
    assert render_document(doc).encode("utf-8") == golden
    assert render_document(load(scene)) == render_document(doc)


@pytest.mark.parametrize("scene", SCENES, ids=[s.stem for s in SCENES])
def test_cli_render_matches_golden(scene):
    out = io.StringIO()
    assert run(["render", "--input", str(scene)], io.StringIO(""), out) == 0
    assert out.getvalue().encode("utf-8") == (DATA / "golden" / f"{scene.stem}.svg").read_bytes()


def test_single_line_three_rays():
    doc = {"view": {"xmin": "-5", "xmax": "5", "ymin": "-5", "ymax": "5", "ray_extension": "1", "scale": "10"},
           "objects": [{"type": "line", "vertex": [0, 0]}]}
    segs = segments(render_document(doc))
    assert len(segs) == 3
    # canvas [-6,6]^2 at scale 10: the vertex maps to (60, 60); svg y grows downward
    directions = set()
    for x1, y1, x2, y2, _ in segs:
        assert (x1, y1) == (60, 60)
        dx, dy = x2 - x1, -(y2 - y1)
        g = max(abs(dx), abs(dy))
        directions.add((dx / g, dy / g))
    assert directions == {(-1, 0), (0, -1), (1, 1)}


def test_dotted_lines_and_labels():
    doc = load(DATA / "scenes" / "coaxial_points.json")
    svg = render_document(doc)
    dashes = [s[4] for s in segments(svg)]
    assert dashes.count(None) == 9 and dashes.count("2 3") == 3
    assert ">p1</text>" in svg and ">p2</text>" in svg


def test_empty_scene():
    svg = render_document({"schema": 1, "objects": []})
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert len(root.find("s:g[@id='axes']", NS).findall("s:line", NS)) == 2
    assert segments(svg) == []


def test_empty_view():
    for view in ({"xmin": 1, "xmax": 1, "ymin": 0, "ymax": 2}, {"xmin": 3, "xmax": 1, "ymin": 0, "ymax": 2}):
        with pytest.raises(EmptyView):
            render_document({"view": view, "objects": []})
    with pytest.raises(MalformedInput):
        render_document({"view": {"xmin": 0}, "objects": []})


def test_auto_view_contains_everything():
    scene = parse_scene({"objects": [{"type": "point", "at": [10, -10]}, {"type": "line", "vertex": [-4, 3]}]})
    v = scene.view
    assert v.xmin < -4 and v.xmax > 10 and v.ymin < -10 and v.ymax > 3


def test_fmt_round_half_even():
    assert fmt(Fraction(1, 2 * 10 ** 6)) == "0.000000"
    assert fmt(Fraction(3, 2 * 10 ** 6)) == "0.000002"
    assert fmt(Fraction(-1, 3)) == "-0.333333"
    assert fmt(Fraction(2, 3)) == "0.666667"
    assert fmt(7) == "7.000000"


def test_references():
    doc = {"objects": [
        {"type": "line", "id": "l", "vertex": [0, 0]},
        {"type": "point", "id": "A", "at": [-2, 0]},
        {"type": "pencil", "line": "l", "points": ["A", [0, -1]], "labels": ["A", "B"]},
    ]}
    scene = parse_scene(doc)
    assert len(scene.lines) == 1 and [d.label for d in scene.dots] == ["A", "A", "B"]
    with pytest.raises(MalformedInput):
        parse_scene({"objects": [{"type": "pencil", "line": "nope"}]})
    with pytest.raises(MalformedInput):
        parse_scene({"objects": [{"type": "point", "id": "x", "at": [0, 0]}, {"type": "line", "id": "x", "vertex": [0, 0]}]})


def test_undrawn_objects_are_checked():
    scene = parse_scene({"objects": [{"type": "quadruple", "vectors": [[0, 0]] * 4},
                                     {"type": "matrix", "rows": [[0, 1], [1, 0]]}]})
    assert [k for k, _ in scene.extras] == ["quadruple", "matrix"]
    with pytest.raises(MalformedInput):
        parse_scene({"objects": [{"type": "quadruple", "vectors": [[0, 0]] * 3}]})


def test_render_is_pure():
    scene = parse_scene(load(SCENES[-1]))
    assert render(scene) == render(scene)
