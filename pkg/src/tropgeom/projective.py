"""Points of tropical projective space ``TP^{d-1}``.

A point is stored by its canonical representative: the vector shifted so
that its largest finite coordinate is ``0``, under either convention.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arith import MAXPLUS, Semiring, is_finite
from .errors import DimensionMismatch, ZeroVector
from .linalg import vec, vscale


@dataclass(frozen=True)
class ProjPoint:
    rep: tuple

    @property
    def dim(self) -> int:
        return len(self.rep)

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, x in enumerate(self.rep) if is_finite(x))

    def __iter__(self):
        return iter(self.rep)

    def __len__(self):
        return len(self.rep)

    def __getitem__(self, i):
        return self.rep[i]


def canonicalize(v, sr: Semiring = MAXPLUS) -> ProjPoint:
    v = vec(v)
    finite = [x for x in v if is_finite(x)]
    if not finite:
        raise ZeroVector("the zero vector has no projective class")
    for x in v:
        sr.check(x)
    m = max(finite)
    return ProjPoint(vscale(-m, v, sr))


def proj_eq(p: ProjPoint, q: ProjPoint) -> bool:
    if len(p.rep) != len(q.rep):
        raise DimensionMismatch(f"TP^{len(p.rep) - 1} vs TP^{len(q.rep) - 1}")
    return p.rep == q.rep


def same_class(u, v, sr: Semiring = MAXPLUS) -> bool:
    """Whether two nonzero vectors represent the same projective point."""
    return proj_eq(canonicalize(u, sr), canonicalize(v, sr))
