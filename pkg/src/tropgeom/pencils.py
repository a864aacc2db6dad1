"""Tropical pencils, perspectivities and projectivities.

A perspectivity with centre ``P`` pairs points ``X`` and ``X'`` of two
lines so that some tropical line passes through ``P``, ``X`` and ``X'``.
On unmarked points it acts by the stable image: the stable intersection
of the stable line ``PX`` with the target line.
:func:`construct_projectivity` builds the two-stage chain that carries a
marked triple ``A, B, C`` on one line to ``A', B', C'`` on another.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    CenterOnLine,
    CoaxialLines,
    DegenerateConfiguration,
    IdenticalLines,
    IdenticalPoints,
    Incompatible,
    NotIncident,
    PreconditionViolated,
    VertexPoint,
)
from .plane import (
    RAYS,
    PlanePoint,
    RayLabel,
    TropLine,
    distance_from_vertex,
    incidence,
    is_coaxial_lines,
    common_line,
    line_intersection,
    ray_label,
    stable_intersect,
    stable_line,
)


@dataclass(frozen=True)
class Pencil:
    line: TropLine
    points: tuple

    def bucket(self, label: RayLabel) -> tuple:
        return tuple(p for p in self.points if ray_label(p, self.line) is label)

    @property
    def p(self) -> int:
        return len(self.bucket(RayLabel.DIAG))

    @property
    def q(self) -> int:
        return len(self.bucket(RayLabel.LEFT))

    @property
    def r(self) -> int:
        return len(self.bucket(RayLabel.DOWN))

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)


@dataclass(frozen=True)
class ReducedPencil:
    line: TropLine
    reps: dict = field(hash=False)

    def __post_init__(self):
        for label, pt in self.reps.items():
            if label not in RAYS:
                raise ValueError(f"representative keyed by {label}")
            if ray_label(pt, self.line) is not label:
                raise NotIncident(f"{pt} is not on the {label.value} ray of {self.line}")

    def triple(self, order: Sequence[RayLabel] = RAYS) -> tuple:
        return tuple(self.reps[label] for label in order)


def make_pencil(L: TropLine, pts: Iterable[PlanePoint]) -> Pencil:
    pts = tuple(pts)
    for p in pts:
        inc = incidence(p, L)
        if not inc:
            raise NotIncident(f"{p} is not on {L}")
        if inc.label is RayLabel.VERTEX:
            raise VertexPoint(f"{p} is the vertex of {L}")
    return Pencil(L, pts)


def reduce_pencil(P: Pencil) -> ReducedPencil:
    reps = {}
    for label in RAYS:
        bucket = P.bucket(label)
        if bucket:
            reps[label] = min(bucket, key=lambda pt: distance_from_vertex(pt, P.line))
    return ReducedPencil(P.line, reps)


def reduced_from_points(L: TropLine, pts: Iterable[PlanePoint]) -> ReducedPencil:
    return reduce_pencil(make_pencil(L, pts))


def is_compatible(P1: Pencil, P2: Pencil) -> bool:
    return not is_coaxial_lines(P1.line, P2.line) and P1.counts == P2.counts


def perspectivity_apply(center: PlanePoint, src: TropLine, dst: TropLine, X: PlanePoint) -> PlanePoint:
    if not incidence(X, src):
        raise NotIncident(f"{X} is not on {src}")
    if incidence(center, src) or incidence(center, dst):
        raise CenterOnLine(f"centre {center} lies on a pencil line")
    if is_coaxial_lines(src, dst):
        raise CoaxialLines(f"{src} and {dst} are coaxial")
    return stable_intersect(stable_line(center, X), dst)


def concurrent(center: PlanePoint, X: PlanePoint, Y: PlanePoint) -> bool:
    """Whether some tropical line passes through ``X``, ``Y`` and ``center``."""
    return common_line([center, X, Y]) is not None


def same_class(X: PlanePoint, Y: PlanePoint, L: TropLine) -> bool:
    """Equal, or coaxial on one ray of ``L`` (the reduced-pencil classes)."""
    if X == Y:
        return True
    lx = ray_label(X, L)
    return lx is not None and lx is not RayLabel.VERTEX and lx is ray_label(Y, L)


@dataclass(frozen=True)
class Perspectivity:
    """One perspectivity stage between two non-coaxial lines.

    ``marks`` pairs representatives of the source with their images; each
    pair must be concurrent with the centre.  A point in the class of a
    marked representative goes to that representative's image; any other
    point goes to the stable image :func:`perspectivity_apply`.
    """

    center: PlanePoint
    source: TropLine
    target: TropLine
    marks: tuple = ()

    def __post_init__(self):
        if incidence(self.center, self.source) or incidence(self.center, self.target):
            raise CenterOnLine(f"centre {self.center} lies on a pencil line")
        if is_coaxial_lines(self.source, self.target):
            raise CoaxialLines(f"{self.source} and {self.target} are coaxial")
        for X, Y in self.marks:
            if not incidence(X, self.source):
                raise NotIncident(f"{X} is not on the source line {self.source}")
            if not incidence(Y, self.target):
                raise NotIncident(f"{Y} is not on the target line {self.target}")
            if not concurrent(self.center, X, Y):
                raise DegenerateConfiguration(f"no line through {X}, {Y} and centre {self.center}")

    def __call__(self, X: PlanePoint) -> PlanePoint:
        for rep, image in self.marks:
            if same_class(X, rep, self.source):
                return image
        return perspectivity_apply(self.center, self.source, self.target, X)


@dataclass(frozen=True)
class Projectivity:
    stages: tuple
    # how the construction was chosen; informational only
    choice: dict = field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self):
        if len(self.stages) < 2:
            raise PreconditionViolated("a projectivity chains at least two perspectivities")
        for s, t in zip(self.stages, self.stages[1:]):
            if s.target != t.source:
                raise PreconditionViolated(f"stage target {s.target} does not feed {t.source}")

    @property
    def source(self) -> TropLine:
        return self.stages[0].source

    @property
    def target(self) -> TropLine:
        return self.stages[-1].target

    def __call__(self, X: PlanePoint) -> PlanePoint:
        return apply_projectivity(self, X)


def apply_projectivity(f: Projectivity, X: PlanePoint) -> PlanePoint:
    if not incidence(X, f.source):
        raise NotIncident(f"{X} is not on {f.source}")
    for stage in f.stages:
        X = stage(X)
    return X


# ray parameters tried for the first centre
DYADIC = tuple(2 ** k for k in range(11))


def _center_candidates(A: PlanePoint, A2: PlanePoint) -> Iterator[PlanePoint]:
    # a fixed A leaves the line AA' free; use the line with vertex A
    L = stable_line(A, A2) if A != A2 else TropLine.through_vertex(A)
    for t in DYADIC:
        for label in RAYS:
            yield L.point_on(label, t)


def _intermediate_candidates(A2: PlanePoint, C: PlanePoint) -> Iterator[TropLine]:
    """Lines through ``A'``: the line through ``A'`` and ``C`` first (it keeps
    ``C`` fixed in the first stage), then the line with vertex ``A'``, then
    lines carrying ``A'`` on one of their rays at dyadic distance."""
    cands = []
    if A2 != C:
        cands.append(stable_line(A2, C))
    cands.append(TropLine.through_vertex(A2))
    for t in DYADIC[:4]:
        for label in RAYS:
            dx, dy = label.direction
            cands.append(TropLine.through_vertex(A2.shift(-dx * t, -dy * t)))
    yield from dict.fromkeys(cands)


def _second_centers(B1, B2, C1, C2) -> Iterator[PlanePoint]:
    """Points on both lines ``C1C'`` and ``B1B'``, stable intersection first."""
    L1, L2 = stable_line(C1, C2), stable_line(B1, B2)
    yield stable_intersect(L1, L2)
    meet = line_intersection(L1, L2)
    yield from meet.points
    for start, d in meet.rays:
        for t in DYADIC[:4]:
            yield start.shift(d[0] * t, d[1] * t)


def _distinct_classes(pts, L: TropLine) -> bool:
    labels = [ray_label(p, L) for p in pts]
    return RayLabel.VERTEX not in labels and None not in labels and len(set(labels)) == len(labels)


_BUILD_ERRORS = (CenterOnLine, CoaxialLines, DegenerateConfiguration, IdenticalLines, IdenticalPoints, NotIncident)


def _try_build(src, dst, A, B, C, A2, B2, C2, p1, l_mid):
    """The two stages ``ABC -> A'B1C1`` (centre ``p1``) and
    ``A'B1C1 -> A'B'C'`` (centre ``p2`` on both ``C1C'`` and ``B1B'``),
    or ``None``."""
    if not incidence(A2, l_mid):
        return None
    try:
        if incidence(p1, src) or incidence(p1, l_mid):
            return None
        B1 = perspectivity_apply(p1, src, l_mid, B)
        C1 = C if incidence(C, l_mid) else perspectivity_apply(p1, src, l_mid, C)
        if not _distinct_classes((A2, B1, C1), l_mid):
            return None
        stage1 = Perspectivity(p1, src, l_mid, ((A, A2), (B, B1), (C, C1)))
        centers = list(_second_centers(B1, B2, C1, C2))
    except _BUILD_ERRORS:
        return None
    for p2 in dict.fromkeys(centers):
        try:
            stage2 = Perspectivity(p2, l_mid, dst, ((A2, A2), (B1, B2), (C1, C2)))
        except _BUILD_ERRORS:
            continue
        return stage1, stage2, B1
    return None


def iter_projectivities(src: TropLine, triple, dst: TropLine, triple2) -> Iterator[Projectivity]:
    """All valid two-stage constructions, in deterministic candidate order.

    Candidates vary the role assignment of the three pairs, the
    intermediate line through ``A'`` and the first centre (dyadic points
    on the stable line ``AA'``).
    """
    if src == dst and tuple(triple) == tuple(triple2):
        yield from _identity_projectivities(src, tuple(triple))
        return
    pairs = list(zip(triple, triple2))
    for order in itertools.permutations(range(3)):
        (A, A2), (B, B2), (C, C2) = (pairs[i] for i in order)
        for l_mid in _intermediate_candidates(A2, C):
            if is_coaxial_lines(src, l_mid) or is_coaxial_lines(l_mid, dst):
                continue
            for p1 in _center_candidates(A, A2):
                built = _try_build(src, dst, A, B, C, A2, B2, C2, p1, l_mid)
                if built is None:
                    continue
                s1, s2, B1 = built
                f = Projectivity((s1, s2), {"roles": order, "p1": p1, "intermediate": l_mid, "B1": B1})
                if tuple(f(X) for X in triple) == tuple(triple2):
                    yield f


def _concurrent_images(p: PlanePoint, L: TropLine, triple, reach) -> Iterator[tuple]:
    """Points of ``L`` on pairwise distinct rays, each concurrent with ``p``
    and the corresponding point of ``triple``."""
    params = [Fraction(k, 2) for k in range(1, 4 * reach + 1)]
    for labels in itertools.permutations(RAYS):
        images = []
        for X, label in zip(triple, labels):
            Y = next((L.point_on(label, t) for t in params if concurrent(p, X, L.point_on(label, t))), None)
            if Y is None:
                break
            images.append(Y)
        else:
            yield tuple(images)


def _identity_projectivities(L: TropLine, triple) -> Iterator[Projectivity]:
    """Out to an auxiliary line and back through the same centre, which is
    searched on an integer grid around the vertex."""
    v = L.vertex
    reach = int(max(distance_from_vertex(X, L) for X in triple)) + 2
    offsets = sorted(itertools.product(range(-2 * reach, 2 * reach + 1), repeat=2),
                     key=lambda o: (abs(o[0]) + abs(o[1]), o))
    l_mid = TropLine.through_vertex(v.shift(1, -2))
    for ox, oy in offsets:
        p = v.shift(ox, oy)
        if incidence(p, L) or incidence(p, l_mid):
            continue
        for images in _concurrent_images(p, l_mid, triple, reach):
            try:
                s1 = Perspectivity(p, L, l_mid, tuple(zip(triple, images)))
                s2 = Perspectivity(p, l_mid, L, tuple(zip(images, triple)))
            except _BUILD_ERRORS:
                continue
            f = Projectivity((s1, s2), {"roles": (0, 1, 2), "p1": p, "intermediate": l_mid, "B1": images[1]})
            if tuple(f(X) for X in triple) == triple:
                yield f


def construct_projectivity(rp1: ReducedPencil, rp2: ReducedPencil, choice: int = 0,
                           order: Sequence[RayLabel] = RAYS) -> Projectivity:
    """Two perspectivities carrying ``rp1``'s representatives onto ``rp2``'s.

    Representatives are matched ray by ray.  ``choice`` selects the n-th
    valid construction, giving independent choices of the first centre.
    Raises :class:`DegenerateConfiguration` if no candidate works.
    """
    if set(rp1.reps) != set(rp2.reps):
        raise Incompatible("the reduced pencils occupy different rays")
    if len(rp1.reps) != 3:
        raise Incompatible("the construction needs one representative on each ray")
    if rp1.line != rp2.line and is_coaxial_lines(rp1.line, rp2.line):
        raise Incompatible("the pencil lines are coaxial")
    return construct_between(rp1.line, rp1.triple(order), rp2.line, rp2.triple(order), choice)


def construct_between(src: TropLine, triple, dst: TropLine, triple2, choice: int = 0) -> Projectivity:
    """Like :func:`construct_projectivity` for explicit, arbitrarily paired triples."""
    if src != dst and is_coaxial_lines(src, dst):
        raise Incompatible("the pencil lines are coaxial")
    for k, f in enumerate(iter_projectivities(src, tuple(triple), dst, tuple(triple2))):
        if k == choice:
            return f
    raise DegenerateConfiguration(f"no valid construction #{choice} for {tuple(triple)} -> {tuple(triple2)}")


def construct_from_pencils(P1: Pencil, P2: Pencil, choice: int = 0) -> Projectivity:
    if not is_compatible(P1, P2):
        raise Incompatible(f"pencils with counts {P1.counts} and {P2.counts} on "
                           f"{'coaxial' if is_coaxial_lines(P1.line, P2.line) else 'non-coaxial'} lines")
    return construct_projectivity(reduce_pencil(P1), reduce_pencil(P2), choice)


def projectivities_equivalent(f: Projectivity, g: Projectivity, P: Pencil) -> bool:
    """Images agree pointwise up to coaxiality on a common ray of the target."""
    if f.source != P.line or g.source != P.line:
        raise NotIncident("both projectivities must start on the pencil line")
    if f.target != g.target:
        return False
    return all(same_class(f(X), g(X), f.target) for X in P.points)


def is_perspective(center: PlanePoint, pairs) -> bool:
    """Whether every corresponding pair is concurrent with ``center``."""
    return all(concurrent(center, X, Y) for X, Y in pairs)
