"""Semilinear maps of tropical semimodules and the collineations they induce.

A :class:`SemilinearMap` on ``T^n`` is ``X -> M (s X)`` where ``s X``
multiplies every finite coordinate classically by a positive rational
``s``.  It is additive and satisfies ``f(a X) = mu(a) f(X)`` with
``mu(c) = s c``, the order preserving automorphisms of ``T`` that stay
exact over the rationals.

:func:`reconstruct_semilinear` goes the other way: from a collineation,
given only as an oracle on projective points, it rebuilds basis images
``v'_i`` and the automorphism ``mu``, following the standard proof of the
fundamental theorem, and records every check it makes.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .arith import MAXPLUS, NEG_INF, Semiring, is_finite, random_rational, scalar
from .errors import (
    AmbiguousSolution,
    DimensionMismatch,
    NoSolution,
    NotInvertible,
    PreconditionViolated,
)
from .linalg import from_columns, mat, matvec, span_membership, unit_vector, vadd, vec, vscale
from .projective import ProjPoint, canonicalize


def mu_scale_apply(s, c):
    return c if not is_finite(c) else scalar(Fraction(s) * c)


@dataclass(frozen=True)
class SemilinearMap:
    """``X -> M (s X)``; ``action_scale`` defaults to ``mu_scale``.

    Giving a different ``action_scale`` describes a map whose declared
    ``mu`` does not match its action, which is not semilinear.
    """

    matrix: tuple
    mu_scale: Fraction | int = 1
    action_scale: Fraction | int | None = None

    def __post_init__(self):
        object.__setattr__(self, "matrix", mat(self.matrix))
        if scalar(self.mu_scale) <= 0:
            raise ValueError("the automorphism scale must be positive")

    @property
    def n_in(self) -> int:
        return len(self.matrix[0])

    @property
    def n_out(self) -> int:
        return len(self.matrix)

    def mu(self, c):
        return mu_scale_apply(self.mu_scale, c)

    def apply(self, X, sr: Semiring = MAXPLUS):
        X = vec(X)
        if len(X) != self.n_in:
            raise DimensionMismatch(f"map takes {self.n_in} coordinates, got {len(X)}")
        s = self.mu_scale if self.action_scale is None else self.action_scale
        return matvec(self.matrix, tuple(mu_scale_apply(s, x) for x in X), sr)

    __call__ = apply


def is_semilinear(f, probes, sr: Semiring = MAXPLUS) -> bool:
    """Check additivity and ``mu``-homogeneity on every ``(X, Y, alpha)``."""
    for X, Y, alpha in probes:
        X, Y, alpha = vec(X), vec(Y), scalar(alpha)
        if len(X) != len(Y):
            raise DimensionMismatch(f"{len(X)} != {len(Y)}")
        if f.apply(vadd(X, Y, sr), sr) != vadd(f.apply(X, sr), f.apply(Y, sr), sr):
            return False
        if f.apply(vscale(alpha, X, sr), sr) != vscale(f.mu(alpha), f.apply(X, sr), sr):
            return False
    return True


class CollineationOracle:
    """A map of projective points queried one point at a time.

    ``fn`` receives a canonical :class:`ProjPoint` and returns a vector or
    a ProjPoint; answers are canonicalised.  Queries are pure, so an oracle
    can be shared between threads.
    """

    def __init__(self, fn: Callable, n: int, n_out: int | None = None, sr: Semiring = MAXPLUS):
        self.fn = fn
        self.n = n
        self.n_out = n if n_out is None else n_out
        self.sr = sr

    def __call__(self, x) -> ProjPoint:
        p = x if isinstance(x, ProjPoint) else canonicalize(x, self.sr)
        if p.dim != self.n:
            raise DimensionMismatch(f"oracle acts on T^{self.n}, got {p.dim} coordinates")
        out = self.fn(p)
        out = out if isinstance(out, ProjPoint) else canonicalize(out, self.sr)
        if out.dim != self.n_out:
            raise DimensionMismatch(f"oracle returned {out.dim} coordinates, expected {self.n_out}")
        return out

    @classmethod
    def from_table(cls, table: dict, n: int, default: Callable | None = None, sr: Semiring = MAXPLUS):
        """Oracle given by a dict of canonical points, with an optional fallback."""
        canon = {canonicalize(k, sr): canonicalize(v, sr) for k, v in table.items()}

        def fn(p):
            if p in canon:
                return canon[p]
            if default is None:
                raise KeyError(p)
            return default(p)

        return cls(fn, n, sr=sr)


def coordinate_permutation(perm, sr: Semiring = MAXPLUS) -> CollineationOracle:
    """``sigma(x)_{perm[i]} = x_i``."""
    n = len(perm)

    def fn(p):
        out = [None] * n
        for i, j in enumerate(perm):
            out[j] = p[i]
        return out

    return CollineationOracle(fn, n, sr=sr)


def is_monomial(M) -> bool:
    rows_ok = all(sum(1 for x in row if is_finite(x)) == 1 for row in M)
    cols_ok = all(sum(1 for x in col if is_finite(x)) == 1 for col in zip(*M))
    return len(M) == len(M[0]) and rows_ok and cols_ok


def induced_collineation(f: SemilinearMap, sr: Semiring = MAXPLUS) -> CollineationOracle:
    if not is_monomial(f.matrix):
        raise NotInvertible(f"{f.matrix} is not monomial, so it has no tropical inverse")
    return CollineationOracle(lambda p: f.apply(p.rep, sr), f.n_in, f.n_out, sr)


def is_coaxial_triple(L1, L2, L3, sr: Semiring = MAXPLUS) -> bool:
    """``L1`` lies in the tropical span of ``L2`` and ``L3``."""
    return span_membership(tuple(L1), [tuple(L2), tuple(L3)], sr).member


def preserves_coaxiality(sigma: CollineationOracle, triples, sr: Semiring = MAXPLUS) -> bool:
    for L1, L2, L3 in triples:
        if not is_coaxial_triple(L1, L2, L3, sr):
            raise PreconditionViolated(f"{L1} is not in the span of {L2} and {L3}")
        if not is_coaxial_triple(sigma(L1), sigma(L2), sigma(L3), sr):
            return False
    return True


def _match_pair(y, u, w, sr: Semiring):
    """Solve ``y ~ beta u + gamma w`` projectively; return ``gamma - beta``.

    The principal solution is the only candidate.  Both coefficients must
    be attained strictly somewhere; otherwise lowering one leaves the
    combination unchanged and the answer is not unique.
    """
    cert = span_membership(y, [u, w], sr)
    if not cert.member:
        raise NoSolution(f"{y} is not in the span of {u} and {w}")
    beta, gamma = cert.coefficients
    if not (is_finite(beta) and is_finite(gamma)):
        raise NoSolution(f"{y} needs a zero coefficient against {u}, {w}")
    bu, gw = vscale(beta, u, sr), vscale(gamma, w, sr)
    if not any(sr.better(a, b) for a, b in zip(bu, gw)) or not any(sr.better(b, a) for a, b in zip(bu, gw)):
        raise AmbiguousSolution(f"{y} does not pin down its coefficients against {u}, {w}")
    return sr.div(gamma, beta)


@dataclass
class Reconstruction:
    basis_images: list
    gammas: list
    mu_table: list
    mu_by_index: dict
    checks: dict = field(default_factory=dict)
    fitted_scale: Fraction | int | None = None
    queries: int = 0

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def as_map(self) -> SemilinearMap:
        return SemilinearMap(from_columns(self.basis_images), 1 if self.fitted_scale is None else self.fitted_scale)


DEFAULT_SAMPLES = (NEG_INF, 0, 1, -1, 2, Fraction(1, 2), -3)


def reconstruct_semilinear(sigma: CollineationOracle, n: int | None = None, scalar_samples=DEFAULT_SAMPLES,
                           v1_offset=0, sr: Semiring = MAXPLUS) -> Reconstruction:
    """Rebuild ``(v'_i, mu)`` from a collineation of ``T^n``, ``n >= 3``.

    ``v'_1`` is the canonical representative of ``sigma<e_1>`` shifted by
    ``v1_offset`` (the one free choice).  Each ``v'_i`` is fixed by
    ``sigma<e_1 + e_i> = <v'_1 + v'_i>`` and ``mu_i(c)`` is read off
    ``sigma<e_1 + c e_i> = <v'_1 + mu_i(c) v'_i>``.
    """
    n = sigma.n if n is None else n
    if n < 3:
        raise PreconditionViolated("reconstruction needs dimension at least 3")
    if n != sigma.n:
        raise DimensionMismatch(f"oracle acts on T^{sigma.n}, not T^{n}")
    samples = [scalar(c) for c in scalar_samples]
    queries = 0

    def ask(x):
        nonlocal queries
        queries += 1
        return sigma(x).rep

    e = [unit_vector(n, i, sr) for i in range(n)]
    v1 = vscale(scalar(v1_offset), ask(e[0]), sr)
    basis, gammas = [v1], [sr.one]
    for i in range(1, n):
        w = ask(e[i])
        g = _match_pair(ask(vadd(e[0], e[i], sr)), v1, w, sr)
        gammas.append(g)
        basis.append(vscale(g, w, sr))

    cache = {}

    def mu(i, c):
        if (i, c) not in cache:
            if not is_finite(c):
                # e_1 + 0 e_i = e_1 must map to <v'_1>
                if canonicalize(ask(e[0]), sr) != canonicalize(v1, sr):
                    raise NoSolution("sigma<e_1> is not stable")
                cache[i, c] = sr.zero
            else:
                cache[i, c] = _match_pair(ask(vadd(e[0], vscale(c, e[i], sr), sr)), v1, basis[i], sr)
        return cache[i, c]

    mu_by_index = {i: [(c, mu(i, c)) for c in samples] for i in range(1, n)}
    checks = {
        "mu_zero": all(mu(i, sr.zero) == sr.zero for i in range(1, n)),
        "mu_one": all(mu(i, sr.one) == sr.one for i in range(1, n)),
        "additive": all(mu(i, sr.add(c, d)) == sr.add(mu(i, c), mu(i, d))
                        for i in range(1, n) for c in samples for d in samples),
        "multiplicative": all(mu(i, sr.mul(c, d)) == sr.mul(mu(i, c), mu(i, d))
                              for i in range(1, n) for c in samples for d in samples),
        "index_consistent": all(mu(i, c) == mu(1, c) for i in range(2, n) for c in samples),
    }
    mu_table = [(c, mu(1, c)) for c in samples]
    ratios = {Fraction(m) / c for c, m in mu_table if is_finite(c) and c != 0}
    fitted = None
    if len(ratios) == 1 and next(iter(ratios)) > 0 and all(mu_scale_apply(next(iter(ratios)), c) == m for c, m in mu_table):
        fitted = scalar(next(iter(ratios)))
    elif not ratios and all(m == c for c, m in mu_table):
        fitted = 1
    checks["mu_scaling"] = fitted is not None
    rec = Reconstruction(basis, gammas, mu_table, mu_by_index, checks, fitted, 0)
    rec.queries = queries
    return rec


def global_scalar_between(A, B, sr: Semiring = MAXPLUS):
    """The single ``alpha`` with ``B = alpha A`` entrywise, or ``None``."""
    alpha = None
    for ra, rb in zip(A, B):
        for x, y in zip(ra, rb):
            if is_finite(x) != is_finite(y):
                return None
            if not is_finite(x):
                continue
            d = y - x
            if alpha is None:
                alpha = d
            elif d != alpha:
                return None
    return alpha


def random_probe(rng: random.Random, n: int, p_zero: float = 0.15):
    """A random nonzero vector with small rational entries and some zeros."""
    while True:
        v = tuple(NEG_INF if rng.random() < p_zero else random_rational(rng, -6, 6, 4) for _ in range(n))
        if any(is_finite(x) for x in v):
            return v


def random_monomial_map(rng: random.Random, n: int, scales=(1,)) -> SemilinearMap:
    perm = list(range(n))
    rng.shuffle(perm)
    M = [[NEG_INF] * n for _ in range(n)]
    for j, i in enumerate(perm):
        M[i][j] = random_rational(rng, -5, 5, 3)
    return SemilinearMap(M, rng.choice(scales))


def agree_on_probes(sigma: CollineationOracle, tau: CollineationOracle, probes) -> bool:
    return all(sigma(p) == tau(p) for p in probes)


def grid_classes(n: int = 3, lo: int = -2, hi: int = 2, sr: Semiring = MAXPLUS) -> list[ProjPoint]:
    """Distinct projective classes of the integer grid ``[lo, hi]^n``."""
    return sorted({canonicalize(v, sr) for v in itertools.product(range(lo, hi + 1), repeat=n)},
                  key=lambda p: p.rep)


def coaxial_triples(points, sr: Semiring = MAXPLUS) -> list[tuple]:
    """Triples of distinct points with the first in the span of the other two."""
    out = []
    for L2, L3 in itertools.combinations(points, 2):
        for L1 in points:
            if L1 != L2 and L1 != L3 and is_coaxial_triple(L1, L2, L3, sr):
                out.append((L1, L2, L3))
    return out


@dataclass(frozen=True)
class PermutationReport:
    perm: tuple
    preserves: bool
    reconstructed_monomial: bool
    mu_identity: bool
    reconstruction_ok: bool

    @property
    def passed(self) -> bool:
        return self.preserves and self.reconstructed_monomial and self.mu_identity and self.reconstruction_ok


@dataclass(frozen=True)
class TP2Report:
    classes: int
    triples: int
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def tp2_automorphism_suite(lo: int = -2, hi: int = 2, sr: Semiring = MAXPLUS) -> TP2Report:
    """Check every coordinate permutation of TP^2 on an exhaustive grid."""
    pts = grid_classes(3, lo, hi, sr)
    triples = coaxial_triples(pts, sr)
    results = []
    for perm in itertools.permutations(range(3)):
        sigma = coordinate_permutation(perm, sr)
        rec = reconstruct_semilinear(sigma, 3, sr=sr)
        M = from_columns(rec.basis_images)
        expected = tuple(tuple(sr.one if perm[j] == i else sr.zero for j in range(3)) for i in range(3))
        results.append(PermutationReport(
            perm,
            preserves_coaxiality(sigma, triples, sr),
            global_scalar_between(expected, M, sr) is not None,
            rec.fitted_scale == 1,
            rec.ok,
        ))
    return TP2Report(len(pts), len(triples), tuple(results))
