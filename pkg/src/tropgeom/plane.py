"""Tropical lines in the plane (max-plus).

A line ``a*x + b*y + c`` is the corner locus of ``max(a+x, b+y, c)``:
three half rays from the vertex ``(c-a, c-b)`` in directions ``(-1,0)``,
``(0,-1)`` and ``(1,1)``.  Stable lines and stable intersections are both
computed with the same tropical cross product of homogeneous triples.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .arith import Infinity, scalar
from .errors import DegenerateLine, IdenticalLines, IdenticalPoints, NotIncident


class PlanePoint(NamedTuple):
    x: Fraction | int
    y: Fraction | int

    @classmethod
    def of(cls, x, y) -> "PlanePoint":
        x, y = scalar(x), scalar(y)
        if isinstance(x, Infinity) or isinstance(y, Infinity):
            raise ValueError("plane points have finite coordinates")
        return cls(x, y)

    def shift(self, dx, dy) -> "PlanePoint":
        return PlanePoint.of(self.x + dx, self.y + dy)

    def __str__(self):
        return f"({self.x}, {self.y})"


def point(x, y) -> PlanePoint:
    return PlanePoint.of(x, y)


class RayLabel(enum.Enum):
    VERTEX = "vertex"
    LEFT = "left"  # direction (-1, 0)
    DOWN = "down"  # direction (0, -1)
    DIAG = "diag"  # direction (1, 1)

    @property
    def direction(self) -> tuple[int, int] | None:
        return _DIRECTIONS.get(self)


_DIRECTIONS = {RayLabel.LEFT: (-1, 0), RayLabel.DOWN: (0, -1), RayLabel.DIAG: (1, 1)}
RAYS = (RayLabel.LEFT, RayLabel.DOWN, RayLabel.DIAG)


class TropLine:
    """A plane tropical line with finite coefficients.

    The given coefficients are kept for display; equality and hashing use
    the canonical form (largest coefficient ``0``), which is determined by
    the vertex.
    """

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        a, b, c = scalar(a), scalar(b), scalar(c)
        if any(isinstance(t, Infinity) for t in (a, b, c)):
            raise DegenerateLine(f"coefficients ({a}, {b}, {c}) must all be finite")
        self.a, self.b, self.c = a, b, c

    @classmethod
    def through_vertex(cls, v: PlanePoint) -> "TropLine":
        # c - a = vx, c - b = vy with c = 0
        return cls(-v.x, -v.y, 0)

    @property
    def vertex(self) -> PlanePoint:
        return PlanePoint(self.c - self.a, self.c - self.b)

    @property
    def coeffs(self) -> tuple:
        return (self.a, self.b, self.c)

    def canonical(self) -> tuple:
        m = max(self.coeffs)
        return (self.a - m, self.b - m, self.c - m)

    def __eq__(self, other):
        return isinstance(other, TropLine) and self.vertex == other.vertex

    def __hash__(self):
        return hash(("TropLine", self.vertex))

    def __repr__(self):
        return f"TropLine({self.a}, {self.b}, {self.c})"

    def terms(self, p: PlanePoint) -> tuple:
        return (self.a + p.x, self.b + p.y, self.c)

    def point_on(self, label: RayLabel, t) -> PlanePoint:
        """The point at parameter ``t >= 0`` along ray ``label``."""
        v = self.vertex
        if label is RayLabel.VERTEX:
            return v
        dx, dy = label.direction
        return PlanePoint.of(v.x + dx * t, v.y + dy * t)


def line_from_coeffs(a, b, c) -> TropLine:
    return TropLine(a, b, c)


def ray_label(p: PlanePoint, L: TropLine) -> RayLabel | None:
    """Classify ``p`` relative to ``L``; ``None`` when ``p`` is off the line."""
    v = L.vertex
    dx, dy = p.x - v.x, p.y - v.y
    if dx == 0 and dy == 0:
        return RayLabel.VERTEX
    if dy == 0 and dx < 0:
        return RayLabel.LEFT
    if dx == 0 and dy < 0:
        return RayLabel.DOWN
    if dx == dy and dx > 0:
        return RayLabel.DIAG
    return None


class Incidence(NamedTuple):
    on: bool
    label: RayLabel | None

    def __bool__(self):
        return self.on


def incidence(p: PlanePoint, L: TropLine) -> Incidence:
    terms = L.terms(p)
    top = max(terms)
    on = sum(1 for t in terms if t == top) >= 2
    label = ray_label(p, L)
    assert on == (label is not None)
    return Incidence(on, label)


def distance_from_vertex(p: PlanePoint, L: TropLine):
    """Ray parameter of an incident point (lattice length along its ray)."""
    v = L.vertex
    return max(abs(p.x - v.x), abs(p.y - v.y))


def _cross(u, v):
    """Tropical cross product of homogeneous triples."""
    return (
        max(u[1] + v[2], u[2] + v[1]),
        max(u[0] + v[2], u[2] + v[0]),
        max(u[0] + v[1], u[1] + v[0]),
    )


def stable_line(p: PlanePoint, q: PlanePoint) -> TropLine:
    """The stable tropical line through two distinct points.

    For a non-coaxial pair this is the unique line through both.  For a
    coaxial pair the vertex lands on one of the points: the lower-left
    one of a diagonal pair, the right one of a horizontal pair and the
    upper one of a vertical pair.
    """
    if p == q:
        raise IdenticalPoints(f"{p} twice")
    return TropLine(*_cross((p.x, p.y, 0), (q.x, q.y, 0)))


def stable_intersect(L1: TropLine, L2: TropLine) -> PlanePoint:
    """Stable intersection of two distinct lines (tropical Cramer point)."""
    if L1 == L2:
        raise IdenticalLines(f"{L1} and {L2} are the same line")
    X = _cross(L1.coeffs, L2.coeffs)
    return PlanePoint(X[0] - X[2], X[1] - X[2])


def axis_direction(p: PlanePoint, q: PlanePoint) -> tuple[int, int] | None:
    """The primitive axis direction of ``q - p`` when the pair is coaxial."""
    dx, dy = q.x - p.x, q.y - p.y
    if dy == 0 and dx != 0:
        return (1, 0)
    if dx == 0 and dy != 0:
        return (0, 1)
    if dx == dy and dx != 0:
        return (1, 1)
    return None


def is_coaxial_points(p: PlanePoint, q: PlanePoint) -> bool:
    if p == q:
        raise IdenticalPoints(f"{p} twice")
    return axis_direction(p, q) is not None


def is_coaxial_lines(L1: TropLine, L2: TropLine) -> bool:
    """Coaxiality of the vertices; lines sharing a vertex count as coaxial."""
    v1, v2 = L1.vertex, L2.vertex
    if v1 == v2:
        return True
    return is_coaxial_points(v1, v2)


def lines_through_coaxial(p: PlanePoint, q: PlanePoint, count: int = 3, step=1) -> list[TropLine]:
    """Distinct lines through a coaxial pair, made by sliding the vertex
    away from the pair along their shared axis.  The first one is the
    stable line."""
    d = axis_direction(p, q)
    if d is None:
        raise ValueError(f"{p} and {q} are not coaxial")
    forward = (q.x - p.x) * d[0] + (q.y - p.y) * d[1] > 0
    lo, hi = (p, q) if forward else (q, p)
    if d == (1, 1):
        anchor, sx, sy = lo, -1, -1
    else:
        anchor, sx, sy = hi, d[0], d[1]
    out = []
    for k in range(count):
        s = k * step
        out.append(TropLine.through_vertex(anchor.shift(sx * s, sy * s)))
    return out


@dataclass(frozen=True)
class LineMeet:
    """Set-theoretic intersection of two tropical lines.

    ``points`` lists isolated points and ``rays`` lists shared half rays as
    ``(start, direction)`` pairs.
    """

    points: tuple
    rays: tuple

    @property
    def is_single_point(self) -> bool:
        return not self.rays and len(self.points) == 1


def _ray_meet(v1, d1, v2, d2):
    """Intersection of closed rays ``v1 + t d1`` and ``v2 + s d2``."""
    det = d1[0] * (-d2[1]) - d1[1] * (-d2[0])
    rx, ry = v2.x - v1.x, v2.y - v1.y
    if det != 0:
        t = Fraction(rx * (-d2[1]) - ry * (-d2[0]), det)
        s = Fraction(d1[0] * ry - d1[1] * rx, det)
        if t >= 0 and s >= 0:
            return ("point", PlanePoint.of(v1.x + t * d1[0], v1.y + t * d1[1]))
        return None
    # parallel directions (always equal within the three primitive ones)
    if rx * d1[1] - ry * d1[0] != 0:
        return None
    if d1 != d2:
        # opposite directions never occur among (-1,0), (0,-1), (1,1)
        raise AssertionError("unexpected opposite ray directions")
    t2 = rx * d1[0] + ry * d1[1]  # sign tells which start is further along
    start = v2 if t2 >= 0 else v1
    return ("ray", (start, d1))


def line_intersection(L1: TropLine, L2: TropLine) -> LineMeet:
    v1, v2 = L1.vertex, L2.vertex
    points, rays = set(), set()
    for r1 in RAYS:
        for r2 in RAYS:
            hit = _ray_meet(v1, r1.direction, v2, r2.direction)
            if hit is None:
                continue
            kind, val = hit
            (points if kind == "point" else rays).add(val)
    # drop isolated points already covered by a shared ray
    loose = []
    for p in points:
        covered = False
        for start, d in rays:
            dx, dy = p.x - start.x, p.y - start.y
            if dx * d[1] - dy * d[0] == 0 and dx * d[0] + dy * d[1] >= 0:
                covered = True
        if not covered:
            loose.append(p)
    return LineMeet(tuple(sorted(loose)), tuple(sorted(rays)))


def general_position(L1: TropLine, L2: TropLine) -> bool:
    if L1 == L2:
        raise IdenticalLines(f"{L1} and {L2} are the same line")
    return line_intersection(L1, L2).is_single_point


def is_stable_marked_line(L: TropLine, pts: Iterable[PlanePoint]) -> bool:
    pts = list(pts)
    if len(pts) < 2:
        raise ValueError("a marked line needs at least two points")
    for p in pts:
        if not incidence(p, L):
            raise NotIncident(f"{p} is not on {L}")
    if any(p == L.vertex for p in pts):
        return True
    # distinct incident points on different rays are never coaxial
    return any(p != q and not is_coaxial_points(p, q) for i, p in enumerate(pts) for q in pts[i + 1:])


def _meet_sets(s1, s2):
    """Intersect two convex pieces, each ``("point", p)`` or ``("ray", (start, d))``."""
    k1, v1 = s1
    k2, v2 = s2
    if k1 == "point" and k2 == "point":
        return s1 if v1 == v2 else None
    if k1 == "point":
        s1, s2, k1, v1, k2, v2 = s2, s1, k2, v2, k1, v1
    start, d = v1
    if k2 == "point":
        dx, dy = v2.x - start.x, v2.y - start.y
        if dx * d[1] - dy * d[0] == 0 and dx * d[0] + dy * d[1] >= 0:
            return s2
        return None
    return _ray_meet(start, d, *v2)


def common_line(points: Iterable[PlanePoint]) -> TropLine | None:
    """A tropical line through all ``points``, or ``None`` if none exists.

    The vertex of any such line lies, for every point, on one of the three
    backward rays ``p - t*d`` (``t >= 0``); intersecting those exactly over
    all ray assignments decides existence.
    """
    pts = list(dict.fromkeys(points))
    if not pts:
        return None
    if len(pts) == 1:
        return TropLine.through_vertex(pts[0])
    back = [(-r.direction[0], -r.direction[1]) for r in RAYS]
    for choice in itertools.product(back, repeat=len(pts)):
        piece = ("ray", (pts[0], choice[0]))
        for p, d in zip(pts[1:], choice[1:]):
            piece = _meet_sets(piece, ("ray", (p, d)))
            if piece is None:
                break
        if piece is None:
            continue
        v = piece[1] if piece[0] == "point" else piece[1][0]
        L = TropLine.through_vertex(v)
        if all(incidence(p, L) for p in pts):
            return L
    return None
