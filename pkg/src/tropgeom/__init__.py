"""Exact tropical (max-plus) geometry: linear algebra over the tropical
semiring, plane tropical lines, pencils and projectivities, the tropical
cross-ratio and semilinear collineations."""
from .arith import MAXPLUS, MINPLUS, NEG_INF, POS_INF, Semiring, scalar, semiring
from .errors import TropicalError
from .linalg import is_tropically_singular, span_membership, tdet
from .plane import TropLine, incidence, point, stable_intersect, stable_line

__all__ = [
    "MAXPLUS",
    "MINPLUS",
    "NEG_INF",
    "POS_INF",
    "Semiring",
    "TropLine",
    "TropicalError",
    "incidence",
    "is_tropically_singular",
    "point",
    "scalar",
    "semiring",
    "span_membership",
    "stable_intersect",
    "stable_line",
    "tdet",
]
