"""Scenes and their SVG drawings.

A scene is a JSON document::

    {"schema": 1, "convention": "max",
     "view": {"xmin": "-5", "xmax": "5", "ymin": "-5", "ymax": "5",
              "ray_extension": "1", "scale": "40"},
     "objects": [...]}

Objects are tagged by ``"type"``: ``line``, ``point``, ``pencil``,
``perspectivity``, ``projectivity``, ``quadruple`` and ``matrix``.  An
object with an ``"id"`` can be referred to by that string wherever a
line, point or pencil is expected.  Quadruples and matrices are checked
but not drawn.

All geometry stays exact; coordinates are only turned into decimals when
the SVG text is written (6 places, round half to even).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from xml.sax.saxutils import escape, quoteattr

from .arith import semiring
from .errors import EmptyView
from .pencils import Perspectivity, concurrent, construct_from_pencils, make_pencil
from .plane import RAYS, PlanePoint, TropLine, common_line
from .serialize import (
    SCHEMA,
    MalformedInput,
    dec_fraction,
    dec_line,
    dec_matrix,
    dec_point,
    dec_vector,
)

DEFAULT_VIEW = {"xmin": -5, "xmax": 5, "ymin": -5, "ymax": 5}
DEFAULT_EXTENSION = Fraction(1)
_DEFAULTS = {"ray_extension": "1", "scale": "40"}
DEFAULT_SCALE = Fraction(40)
AUTO_MARGIN = 2
DOTTED = "2 3"


@dataclass(frozen=True)
class View:
    xmin: Fraction
    xmax: Fraction
    ymin: Fraction
    ymax: Fraction
    ray_extension: Fraction = DEFAULT_EXTENSION
    scale: Fraction = DEFAULT_SCALE

    def __post_init__(self):
        if self.xmin >= self.xmax or self.ymin >= self.ymax:
            raise EmptyView(f"view [{self.xmin}, {self.xmax}] x [{self.ymin}, {self.ymax}] is empty")
        if self.ray_extension < 0 or self.scale <= 0:
            raise EmptyView("ray_extension must be nonnegative and scale positive")

    @property
    def canvas(self):
        e = self.ray_extension
        return (self.xmin - e, self.xmax + e, self.ymin - e, self.ymax + e)


@dataclass(frozen=True)
class Dot:
    p: PlanePoint
    label: str = ""
    color: str = "black"


@dataclass
class Scene:
    convention: str = "max"
    view: View | None = None
    lines: list = field(default_factory=list)      # (TropLine, dotted, color, label)
    dots: list = field(default_factory=list)
    extras: list = field(default_factory=list)     # parsed but undrawn objects


def ray_end(L: TropLine, label, canvas) -> PlanePoint:
    """Where the ray ``label`` of ``L`` leaves the canvas (or its vertex)."""
    x0, x1, y0, y1 = canvas
    v = L.vertex
    dx, dy = label.direction
    if dx < 0:
        t = v.x - x0
    elif dy < 0:
        t = v.y - y0
    else:
        t = min(x1 - v.x, y1 - v.y)
    return L.point_on(label, max(t, 0))


class _Resolver:
    def __init__(self, objects):
        self.by_id = {}
        for obj in objects:
            if isinstance(obj, dict) and "id" in obj:
                if obj["id"] in self.by_id:
                    raise MalformedInput(f"duplicate id {obj['id']!r}")
                self.by_id[obj["id"]] = obj

    def ref(self, value, kind):
        if isinstance(value, str):
            if value not in self.by_id:
                raise MalformedInput(f"unresolved reference {value!r}")
            obj = self.by_id[value]
            if obj.get("type") != kind:
                raise MalformedInput(f"{value!r} is a {obj.get('type')}, not a {kind}")
            return obj
        return value

    def point(self, value) -> PlanePoint:
        v = self.ref(value, "point")
        return dec_point(v["at"] if isinstance(v, dict) else v)

    def line(self, value) -> TropLine:
        return dec_line(self.ref(value, "line"))

    def pencil(self, value):
        v = self.ref(value, "pencil")
        if not isinstance(v, dict) or "line" not in v:
            raise MalformedInput(f"bad pencil {value!r}")
        return make_pencil(self.line(v["line"]), [self.point(p) for p in v.get("points", [])])


def _label(obj, default=""):
    label = obj.get("label", default)
    if not isinstance(label, str):
        raise MalformedInput(f"labels are strings: {label!r}")
    return label


def _color(obj, default="black"):
    color = obj.get("color", default)
    if not isinstance(color, str) or not color.replace("#", "").isalnum():
        raise MalformedInput(f"bad color {color!r}")
    return color


def _auxiliary(center, X, Y):
    """The dotted line joining a centre with a corresponding pair."""
    L = common_line([center, X, Y])
    return L if L is not None else common_line([center, X])


def parse_scene(doc) -> Scene:
    if not isinstance(doc, dict):
        raise MalformedInput("a scene is a JSON object")
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise MalformedInput(f"unsupported schema {doc.get('schema')!r}")
    scene = Scene(convention=semiring(doc.get("convention", "max")).flavor.value)
    objects = doc.get("objects", [])
    if not isinstance(objects, list):
        raise MalformedInput("objects must be a list")
    res = _Resolver(objects)
    for obj in objects:
        if not isinstance(obj, dict) or "type" not in obj:
            raise MalformedInput(f"untagged object {obj!r}")
        kind = obj["type"]
        dotted = obj.get("style", "solid") == "dotted"
        color = _color(obj)
        if kind == "line":
            scene.lines.append((dec_line(obj), dotted, color, _label(obj)))
        elif kind == "point":
            scene.dots.append(Dot(res.point(obj), _label(obj, obj.get("id", "")), color))
        elif kind == "pencil":
            P = res.pencil(obj)
            if not isinstance(obj.get("line"), str):
                scene.lines.append((P.line, dotted, color, _label(obj)))
            names = obj.get("labels", [])
            for i, p in enumerate(P.points):
                scene.dots.append(Dot(p, names[i] if i < len(names) else "", _color(obj, "black")))
        elif kind == "perspectivity":
            s = Perspectivity(res.point(obj["center"]), res.line(obj["source"]), res.line(obj["target"]),
                              tuple((res.point(x), res.point(y)) for x, y in obj.get("marks", [])))
            _draw_stage(scene, s, obj, res)
        elif kind == "projectivity":
            P1, P2 = res.pencil(obj["source"]), res.pencil(obj["target"])
            f = construct_from_pencils(P1, P2, obj.get("choice", 0))
            for k, s in enumerate(f.stages):
                if k > 0:
                    scene.lines.append((s.source, True, "gray", "l" + chr(0x2032) * k))
                scene.dots.append(Dot(s.center, f"p{chr(0x2032) * (k + 1)}", "black"))
                for X, Y in s.marks:
                    L = _auxiliary(s.center, X, Y)
                    scene.lines.append((L, True, "gray", ""))
        elif kind == "quadruple":
            vs = obj.get("vectors")
            if not isinstance(vs, list) or len(vs) != 4:
                raise MalformedInput("a quadruple has four vectors")
            scene.extras.append(("quadruple", tuple(dec_vector(v) for v in vs)))
        elif kind == "matrix":
            scene.extras.append(("matrix", dec_matrix(obj.get("rows"))))
        else:
            raise MalformedInput(f"unknown object type {kind!r}")
    scene.view = _view(doc.get("view"), scene)
    return scene


def _draw_stage(scene, s: Perspectivity, obj, res):
    if not isinstance(obj["source"], str):
        scene.lines.append((s.source, False, _color(obj), ""))
    if not isinstance(obj["target"], str):
        scene.lines.append((s.target, False, _color(obj), ""))
    if not isinstance(obj["center"], str):
        scene.dots.append(Dot(s.center, _label(obj, "P"), _color(obj)))
    for X, Y in s.marks:
        assert concurrent(s.center, X, Y)
        scene.lines.append((_auxiliary(s.center, X, Y), True, "gray", ""))


def _scene_points(scene):
    pts = [d.p for d in scene.dots] + [L.vertex for L, *_ in scene.lines]
    return pts


def _view(spec, scene) -> View:
    if spec is None:
        pts = _scene_points(scene)
        if not pts:
            box = {k: Fraction(v) for k, v in DEFAULT_VIEW.items()}
        else:
            box = {
                "xmin": min(p.x for p in pts) - AUTO_MARGIN, "xmax": max(p.x for p in pts) + AUTO_MARGIN,
                "ymin": min(p.y for p in pts) - AUTO_MARGIN, "ymax": max(p.y for p in pts) + AUTO_MARGIN,
            }
        return View(**{k: Fraction(v) for k, v in box.items()})
    if not isinstance(spec, dict):
        raise MalformedInput("view must be an object")
    try:
        box = {k: dec_fraction(spec[k]) for k in ("xmin", "xmax", "ymin", "ymax")}
    except KeyError as exc:
        raise MalformedInput(f"view is missing {exc}") from exc
    ext = dec_fraction(spec.get("ray_extension", _DEFAULTS["ray_extension"]))
    scale = dec_fraction(spec.get("scale", _DEFAULTS["scale"]))
    return View(**box, ray_extension=ext, scale=scale)


def fmt(q) -> str:
    """Exact rational to a 6-place decimal, rounding half to even."""
    n = round(Fraction(q) * 10 ** 6)
    sign = "-" if n < 0 else ""
    whole, frac = divmod(abs(n), 10 ** 6)
    return f"{sign}{whole}.{frac:06d}"


def render(scene: Scene) -> str:
    view = scene.view or _view(None, scene)
    x0, x1, y0, y1 = view.canvas
    k = view.scale

    def sx(x):
        return fmt((x - x0) * k)

    def sy(y):
        return fmt((y1 - y) * k)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt((x1 - x0) * k)}" height="{fmt((y1 - y0) * k)}" '
        f'viewBox="0 0 {fmt((x1 - x0) * k)} {fmt((y1 - y0) * k)}">',
        f'<rect x="0" y="0" width="{fmt((x1 - x0) * k)}" height="{fmt((y1 - y0) * k)}" fill="white"/>',
        '<g id="axes" stroke="#cccccc" stroke-width="0.5">',
    ]
    if x0 <= 0 <= x1:
        out.append(f'<line x1="{sx(0)}" y1="{sy(y0)}" x2="{sx(0)}" y2="{sy(y1)}"/>')
    if y0 <= 0 <= y1:
        out.append(f'<line x1="{sx(x0)}" y1="{sy(0)}" x2="{sx(x1)}" y2="{sy(0)}"/>')
    out.append("</g>")

    out.append('<g id="lines" fill="none" stroke-width="1.5">')
    for L, dotted, color, label in scene.lines:
        dash = f' stroke-dasharray="{DOTTED}"' if dotted else ""
        for ray in RAYS:
            q = ray_end(L, ray, view.canvas)
            out.append(f'<line x1="{sx(L.vertex.x)}" y1="{sy(L.vertex.y)}" x2="{sx(q.x)}" y2="{sy(q.y)}" '
                       f'stroke={quoteattr(color)}{dash}/>')
        if label:
            out.append(f'<text x="{sx(L.vertex.x)}" y="{sy(L.vertex.y)}" dx="6" dy="14" font-size="12" '
                       f'fill={quoteattr(color)}>{escape(label)}</text>')
    out.append("</g>")

    out.append('<g id="points" font-family="serif" font-size="12">')
    for d in scene.dots:
        out.append(f'<circle cx="{sx(d.p.x)}" cy="{sy(d.p.y)}" r="3" fill={quoteattr(d.color)}/>')
        if d.label:
            out.append(f'<text x="{sx(d.p.x)}" y="{sy(d.p.y)}" dx="5" dy="-5" fill={quoteattr(d.color)}>'
                       f'{escape(d.label)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_document(doc) -> str:
    return render(parse_scene(doc))
