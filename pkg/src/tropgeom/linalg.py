"""Tropical vectors and matrices: span membership, independence, tdet.

Vectors are tuples of scalars and matrices are tuples of row tuples.
Span membership is decided by residuation: the principal (greatest)
coefficient vector is computed coordinatewise and then evaluated.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .arith import MAXPLUS, Flavor, Infinity, Scalar, Semiring, is_finite, scalar
from .errors import DimensionMismatch, NotSquare

Vector = tuple
Matrix = tuple

# n at or below which tdet and singularity use permutation enumeration
ENUMERATION_LIMIT = 8


def vec(coords) -> Vector:
    coords = tuple(coords)
    if not coords:
        raise DimensionMismatch("vectors need at least one coordinate")
    return tuple(scalar(c) for c in coords)


def mat(rows) -> Matrix:
    out = tuple(tuple(scalar(x) for x in row) for row in rows)
    if not out or not out[0]:
        raise DimensionMismatch("matrices need at least one row and column")
    if any(len(r) != len(out[0]) for r in out):
        raise DimensionMismatch("ragged matrix")
    return out


def zero_vector(d: int, sr: Semiring = MAXPLUS) -> Vector:
    return (sr.zero,) * d


def unit_vector(d: int, i: int, sr: Semiring = MAXPLUS) -> Vector:
    return tuple(sr.one if j == i else sr.zero for j in range(d))


def is_zero_vector(v: Sequence[Scalar]) -> bool:
    return all(isinstance(x, Infinity) for x in v)


def vadd(x, y, sr: Semiring = MAXPLUS) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"{len(x)} != {len(y)}")
    return tuple(sr.add(a, b) for a, b in zip(x, y))


def vscale(t, x, sr: Semiring = MAXPLUS) -> Vector:
    return tuple(sr.mul(t, a) for a in x)


def combine(coeffs, gens, sr: Semiring = MAXPLUS) -> Vector:
    """Evaluate the tropical linear combination ``sum_i coeffs[i] * gens[i]``."""
    d = len(gens[0])
    acc = [sr.zero] * d
    for lam, g in zip(coeffs, gens):
        for j in range(d):
            acc[j] = sr.add(acc[j], sr.mul(lam, g[j]))
    return tuple(acc)


def matvec(M, v, sr: Semiring = MAXPLUS) -> Vector:
    if len(M[0]) != len(v):
        raise DimensionMismatch(f"matrix has {len(M[0])} columns, vector has {len(v)} entries")
    return tuple(sr.sum(sr.mul(m, x) for m, x in zip(row, v)) for row in M)


def matmul(A, B, sr: Semiring = MAXPLUS) -> Matrix:
    if len(A[0]) != len(B):
        raise DimensionMismatch("inner dimensions differ")
    cols = list(zip(*B))
    return tuple(tuple(sr.sum(sr.mul(a, b) for a, b in zip(row, col)) for col in cols) for row in A)


def columns(M) -> list[Vector]:
    return [tuple(c) for c in zip(*M)]


def from_columns(cols) -> Matrix:
    return tuple(zip(*cols))


@dataclass(frozen=True)
class SpanCertificate:
    member: bool
    coefficients: tuple

    def __bool__(self):
        return self.member


def _check_dims(vectors):
    dims = {len(v) for v in vectors}
    if len(dims) > 1:
        raise DimensionMismatch(f"vectors of mixed dimensions {sorted(dims)}")


def principal_solution(x, gens, sr: Semiring = MAXPLUS) -> tuple:
    """Greatest coefficients ``lam`` with ``sum_i lam_i * g_i <= x``.

    A generator equal to the semimodule zero gets coefficient ``one``; it
    contributes nothing, so any value would do.
    """
    coeffs = []
    for g in gens:
        lam = None
        for xj, gj in zip(x, g):
            if not is_finite(gj):
                continue
            r = sr.residual(xj, gj)
            lam = r if lam is None else sr.dual_add(lam, r)
        coeffs.append(sr.one if lam is None else lam)
    return tuple(coeffs)


def span_membership(x, gens, sr: Semiring = MAXPLUS) -> SpanCertificate:
    if not gens:
        raise ValueError("need at least one generator")
    _check_dims([x, *gens])
    lam = principal_solution(x, gens, sr)
    return SpanCertificate(combine(lam, gens, sr) == tuple(x), lam)


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    dependent_index: int | None = None
    certificate: SpanCertificate | None = None

    def __bool__(self):
        return self.independent


def is_linearly_independent(S, sr: Semiring = MAXPLUS) -> IndependenceResult:
    if not S:
        raise ValueError("need a nonempty set")
    _check_dims(S)
    if len(S) == 1:
        return IndependenceResult(True)
    for i, s in enumerate(S):
        cert = span_membership(s, [t for j, t in enumerate(S) if j != i], sr)
        if cert.member:
            return IndependenceResult(False, i, cert)
    return IndependenceResult(True)


def minimal_generating_set(gens, sr: Semiring = MAXPLUS) -> list[Vector]:
    """Drop generators lying in the span of the remaining ones.

    For tropical cones the survivors are the extremal rays, which are
    unique up to scaling, so the greedy order does not matter.
    """
    if not gens:
        raise ValueError("need at least one generator")
    _check_dims(gens)
    keep = [tuple(g) for g in gens]
    i = 0
    while i < len(keep) and len(keep) > 1:
        others = keep[:i] + keep[i + 1:]
        if span_membership(keep[i], others, sr).member:
            keep.pop(i)
        else:
            i += 1
    return keep


def spans_equal(G, H, sr: Semiring = MAXPLUS) -> bool:
    return all(span_membership(g, H, sr) for g in G) and all(span_membership(h, G, sr) for h in H)


def _square(M) -> int:
    n = len(M)
    if n == 0 or any(len(row) != n for row in M):
        raise NotSquare(f"{n}x{len(M[0]) if M else 0} matrix")
    return n


def permutation_weight(M, perm, sr: Semiring = MAXPLUS):
    return sr.prod(M[i][perm[i]] for i in range(len(perm)))


def _finite_weights(M, sr: Semiring):
    """Yield ``(perm, weight)`` for every permutation with a finite weight."""
    n = _square(M)
    rows = [[sr.check(x) if is_finite(x) else None for x in row] for row in M]
    for p in itertools.permutations(range(n)):
        w = 0
        for i, j in enumerate(p):
            x = rows[i][j]
            if x is None:
                break
            w += x
        else:
            yield p, w


def tdet_enumerate(M, sr: Semiring = MAXPLUS):
    """tdet by brute force over all ``n!`` permutations."""
    return sr.sum(w for _, w in _finite_weights(M, sr))


def optimal_permutations(M, sr: Semiring = MAXPLUS) -> tuple[Scalar, list[tuple]]:
    best, arg = sr.zero, []
    for p, w in _finite_weights(M, sr):
        if sr.better(w, best):
            best, arg = w, [p]
        elif w == best:
            arg.append(p)
    return best, arg


def solve_assignment(M, sr: Semiring = MAXPLUS, forbidden=frozenset()) -> tuple[Scalar, tuple | None]:
    """Exact Hungarian algorithm; returns ``(tdet, optimal permutation)``.

    Entries equal to the semiring zero and cells listed in ``forbidden``
    are unusable.  Costs are exact rationals, so ties are detected exactly.
    The permutation is ``None`` when no finite assignment exists.
    """
    n = _square(M)
    sign = 1 if sr.flavor is Flavor.MAX_PLUS else -1
    finite = [abs(x) for row in M for x in row if is_finite(x)]
    big = (sum(finite) + 1) * (n + 1) * 2 + 1
    # minimisation cost, row/col 1-based as in the classic potentials formulation
    cost = [[0] * (n + 1)]
    for i in range(n):
        row = [0]
        for j in range(n):
            x = M[i][j]
            if not is_finite(x) or (i, j) in forbidden:
                row.append(big)
            else:
                row.append(-sign * x)
        cost.append(row)

    u = [0] * (n + 1)
    v = [0] * (n + 1)
    match = [0] * (n + 1)  # match[j] = row assigned to column j
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        minv = [None] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta, j1 = None, 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0][j] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta, j1 = minv[j], j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1

    perm = [0] * n
    for j in range(1, n + 1):
        perm[match[j] - 1] = j - 1
    for i, j in enumerate(perm):
        if cost[i + 1][j + 1] == big:
            return sr.zero, None
    perm = tuple(perm)
    return permutation_weight(M, perm, sr), perm


def tdet(M, sr: Semiring = MAXPLUS, method: str = "auto"):
    """Tropical determinant.

    ``method`` is ``"enumerate"``, ``"assignment"`` or ``"auto"``
    (enumeration up to ``ENUMERATION_LIMIT``, the assignment solver beyond).
    """
    n = _square(M)
    if method == "enumerate" or (method == "auto" and n <= ENUMERATION_LIMIT):
        return tdet_enumerate(M, sr)
    if method not in ("assignment", "auto"):
        raise ValueError(f"unknown method {method!r}")
    return solve_assignment(M, sr)[0]


def is_tropically_singular(M, sr: Semiring = MAXPLUS, method: str = "auto") -> bool:
    """True iff tdet is the semiring zero or its optimum is attained twice."""
    n = _square(M)
    if method == "enumerate" or (method == "auto" and n <= ENUMERATION_LIMIT):
        best, arg = optimal_permutations(M, sr)
        return not is_finite(best) or len(arg) >= 2
    best, perm = solve_assignment(M, sr)
    if perm is None:
        return True
    # a second optimum must avoid at least one edge of the first
    for i, j in enumerate(perm):
        other, p2 = solve_assignment(M, sr, forbidden=frozenset({(i, j)}))
        if p2 is not None and other == best:
            return True
    return False
