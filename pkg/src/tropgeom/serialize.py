"""JSON encodings for exact scalars and geometric objects.

Scalars travel as strings (``"5"``, ``"-7/2"``, ``"-inf"``) or JSON
integers.  JSON floats are refused: they cannot be read back exactly.
"""
from __future__ import annotations

from fractions import Fraction

from .arith import Infinity, scalar
from .pencils import Pencil, Perspectivity, Projectivity, make_pencil
from .plane import PlanePoint, RayLabel, TropLine, point

SCHEMA = 1


class MalformedInput(ValueError):
    """Input that does not follow the JSON schema."""


def enc_scalar(x) -> str:
    if isinstance(x, Infinity):
        return str(x)
    x = scalar(x)
    return str(x) if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def dec_scalar(value):
    if isinstance(value, float):
        raise MalformedInput(f"floating point value {value!r}; write it as a string such as \"1/2\"")
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise MalformedInput(f"not a scalar: {value!r}")
    try:
        return scalar(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"not a scalar: {value!r}") from exc


def enc_vector(v) -> list:
    return [enc_scalar(x) for x in v]


def dec_vector(value) -> tuple:
    if not isinstance(value, list):
        raise MalformedInput(f"expected a list of scalars, got {value!r}")
    return tuple(dec_scalar(x) for x in value)


def enc_matrix(M) -> list:
    return [enc_vector(row) for row in M]


def dec_matrix(value) -> tuple:
    if not isinstance(value, list) or not value:
        raise MalformedInput(f"expected a list of rows, got {value!r}")
    return tuple(dec_vector(row) for row in value)


def enc_point(p: PlanePoint) -> dict:
    return {"x": enc_scalar(p.x), "y": enc_scalar(p.y)}


def dec_point(value) -> PlanePoint:
    """A point from ``{"x": .., "y": ..}`` or a two-element list."""
    if isinstance(value, dict):
        if set(value) != {"x", "y"}:
            raise MalformedInput(f"a point object has exactly the keys x and y: {value!r}")
        value = [value["x"], value["y"]]
    v = dec_vector(value)
    if len(v) != 2:
        raise MalformedInput(f"a plane point needs two coordinates, got {value!r}")
    try:
        return point(*v)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc


def enc_line(L: TropLine) -> dict:
    return {"a": enc_scalar(L.a), "b": enc_scalar(L.b), "c": enc_scalar(L.c), "vertex": enc_point(L.vertex)}


def dec_line(value) -> TropLine:
    """A line from ``{"a","b","c"}`` or ``{"vertex": [x, y]}``."""
    if not isinstance(value, dict):
        raise MalformedInput(f"expected a line object, got {value!r}")
    if all(k in value for k in "abc"):
        return TropLine(*(dec_scalar(value[k]) for k in "abc"))
    if "vertex" in value:
        return TropLine.through_vertex(dec_point(value["vertex"]))
    raise MalformedInput(f"a line needs a, b, c or a vertex: {value!r}")


def enc_label(label: RayLabel | None):
    return None if label is None else label.value


def enc_pencil(P: Pencil) -> dict:
    return {"line": enc_line(P.line), "points": [enc_point(p) for p in P.points]}


def dec_pencil(value) -> Pencil:
    if not isinstance(value, dict) or "line" not in value:
        raise MalformedInput(f"a pencil needs a line: {value!r}")
    pts = value.get("points", [])
    if not isinstance(pts, list):
        raise MalformedInput("pencil points must be a list")
    return make_pencil(dec_line(value["line"]), [dec_point(p) for p in pts])


def enc_perspectivity(s: Perspectivity) -> dict:
    return {
        "center": enc_point(s.center),
        "source": enc_line(s.source),
        "target": enc_line(s.target),
        "marks": [[enc_point(x), enc_point(y)] for x, y in s.marks],
    }


def dec_perspectivity(value) -> Perspectivity:
    try:
        marks = tuple((dec_point(x), dec_point(y)) for x, y in value.get("marks", []))
        return Perspectivity(dec_point(value["center"]), dec_line(value["source"]), dec_line(value["target"]), marks)
    except (KeyError, TypeError, AttributeError) as exc:
        raise MalformedInput(f"bad perspectivity: {value!r}") from exc


def _enc_choice_value(v):
    if isinstance(v, PlanePoint):
        return enc_point(v)
    if isinstance(v, TropLine):
        return enc_line(v)
    if isinstance(v, tuple):
        return list(v)
    return v


def enc_projectivity(f: Projectivity) -> dict:
    return {
        "stages": [enc_perspectivity(s) for s in f.stages],
        "choice": {k: _enc_choice_value(v) for k, v in f.choice.items()},
    }


def dec_projectivity(value) -> Projectivity:
    if not isinstance(value, dict) or not isinstance(value.get("stages"), list):
        raise MalformedInput(f"a projectivity needs a list of stages: {value!r}")
    return Projectivity(tuple(dec_perspectivity(s) for s in value["stages"]))


def dec_fraction(value) -> Fraction:
    x = dec_scalar(value)
    if isinstance(x, Infinity):
        raise MalformedInput(f"expected a finite number, got {value!r}")
    return Fraction(x)
