import pytest
from hypothesis import given

from conftest import rationals, vectors
from tropgeom.arith import MINPLUS, NEG_INF, POS_INF
from tropgeom.errors import DimensionMismatch, ZeroVector
from tropgeom.linalg import vscale
from tropgeom.projective import canonicalize, proj_eq, same_class


def test_canonicalize_examples():
    assert canonicalize((3, 1, 2)).rep == (0, -2, -1)
    assert canonicalize((NEG_INF, 0, NEG_INF)).rep == (NEG_INF, 0, NEG_INF)
    assert canonicalize((0, 0, 0)).rep == (0, 0, 0)
    with pytest.raises(ZeroVector):
        canonicalize((NEG_INF, NEG_INF))


def test_minplus_unit_point():
    # under the min convention the missing coordinates are +inf
    assert canonicalize((POS_INF, 0, POS_INF), MINPLUS).rep == (POS_INF, 0, POS_INF)
    with pytest.raises(ZeroVector):
        canonicalize((POS_INF, POS_INF), MINPLUS)


def test_proj_eq_examples():
    assert proj_eq(canonicalize((0, 1)), canonicalize((5, 6)))
    assert not proj_eq(canonicalize((0, 1)), canonicalize((1, 0)))
    assert not proj_eq(canonicalize((0, NEG_INF)), canonicalize((0, 0)))
    with pytest.raises(DimensionMismatch):
        proj_eq(canonicalize((0, 1)), canonicalize((0, 1, 2)))


@given(vectors(4), rationals)
def test_scaling_invariance(v, lam):
    if all(x is NEG_INF for x in v):
        return
    p = canonicalize(v)
    assert canonicalize(vscale(lam, v)) == p
    assert canonicalize(p.rep) == p
    assert max(x for x in p.rep if x is not NEG_INF) == 0
    assert p.support == canonicalize(vscale(lam, v)).support
    assert same_class(v, vscale(lam, v))
