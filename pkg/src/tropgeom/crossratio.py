"""Tropical brackets and the tropical cross-ratio of four vectors in T^2.

The cross-ratio ``(a,b;c,d) = [a,c][b,d] - [a,d][b,c]`` uses 2x2 tropical
determinants as brackets; the outer subtraction is tropical division, so
the value is itself an exact scalar.  It is unchanged by rescaling the
four vectors but a tropical matrix acting on all four can change it.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .arith import MAXPLUS, NEG_INF, Semiring, is_finite, scalar
from .errors import BudgetExhausted, DimensionMismatch, SingularMatrix, ZeroDenominator
from .linalg import is_tropically_singular, mat, matvec, tdet, vec, vscale


def _pair(v):
    v = vec(v)
    if len(v) != 2:
        raise DimensionMismatch(f"expected a vector in T^2, got {len(v)} coordinates")
    return v


def bracket2(a, b, sr: Semiring = MAXPLUS):
    """``tdet`` of the 2x2 matrix with columns ``a`` and ``b``."""
    a, b = _pair(a), _pair(b)
    return sr.add(sr.mul(a[0], b[1]), sr.mul(a[1], b[0]))


@dataclass(frozen=True)
class CrossRatioResult:
    value: object
    numer: object
    denom: object


def cross_ratio(a, b, c, d, sr: Semiring = MAXPLUS) -> CrossRatioResult:
    ad, bc = bracket2(a, d, sr), bracket2(b, c, sr)
    if not is_finite(ad) or not is_finite(bc):
        raise ZeroDenominator(f"[a,d] = {ad}, [b,c] = {bc}")
    numer = sr.mul(bracket2(a, c, sr), bracket2(b, d, sr))
    denom = sr.mul(ad, bc)
    return CrossRatioResult(sr.div(numer, denom), numer, denom)


def check_scalar_invariance(a, b, c, d, scalings, sr: Semiring = MAXPLUS):
    """Return ``(holds, before, after)`` for the rescaled quadruple."""
    scalings = [scalar(t) for t in scalings]
    if len(scalings) != 4 or not all(is_finite(t) for t in scalings):
        raise ValueError("need four finite scalings")
    quad = (a, b, c, d)
    before = cross_ratio(*quad, sr=sr).value
    after = cross_ratio(*(vscale(t, v, sr) for t, v in zip(scalings, quad)), sr=sr).value
    return before == after, before, after


def matrix_transform(M, v, sr: Semiring = MAXPLUS):
    M = mat(M)
    if len(M) != 2 or len(M[0]) != 2:
        raise DimensionMismatch("expected a 2x2 matrix")
    if is_tropically_singular(M, sr):
        raise SingularMatrix(f"{M} is tropically singular")
    return matvec(M, _pair(v), sr)


def expansion_rhs(M, a, b, sr: Semiring = MAXPLUS):
    """``tdet(M)[a,b] + m1 m3 a1 b1 + m2 m4 a2 b2`` with ``M = [[m1,m2],[m3,m4]]``,
    the expanded form of ``[Ma, Mb]``."""
    (m1, m2), (m3, m4) = M
    return sr.sum([
        sr.mul(tdet(M, sr), bracket2(a, b, sr)),
        sr.prod([m1, m3, a[0], b[0]]),
        sr.prod([m2, m4, a[1], b[1]]),
    ])


@dataclass(frozen=True)
class Witness:
    M: tuple
    quadruple: tuple
    value_before: object
    value_after: object
    tried: int


ENTRIES = (NEG_INF, 0, 1, 2)


def find_noninvariance_witness(seed: int = 1, budget: int = 10 ** 5, entries=ENTRIES,
                               coord_range=(-3, 3), sr: Semiring = MAXPLUS) -> Witness:
    """First seeded case where a nonsingular ``M`` changes the cross-ratio.

    Each case draws ``M`` from ``entries`` and a quadruple with integer
    coordinates in ``coord_range``; singular matrices and undefined
    cross-ratios count against the budget but are skipped.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    rng = random.Random(seed)
    lo, hi = coord_range
    for tried in range(1, budget + 1):
        M = tuple(tuple(rng.choice(entries) for _ in range(2)) for _ in range(2))
        quad = tuple((rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(4))
        if is_tropically_singular(M, sr):
            continue
        try:
            before = cross_ratio(*quad, sr=sr).value
            after = cross_ratio(*(matvec(M, v, sr) for v in quad), sr=sr).value
        except ZeroDenominator:
            continue
        if before != after:
            return Witness(M, quad, before, after, tried)
    raise BudgetExhausted(f"no witness within {budget} cases (seed {seed})")


def all_small_matrices(entries=ENTRIES):
    """Every 2x2 matrix over ``entries``, in lexicographic order."""
    for m in itertools.product(entries, repeat=4):
        yield ((m[0], m[1]), (m[2], m[3]))
