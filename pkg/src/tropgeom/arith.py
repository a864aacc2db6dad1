"""Exact tropical scalar arithmetic.

Finite scalars are plain Python ``int`` or :class:`fractions.Fraction`
values; the two infinities are the singletons :data:`NEG_INF` and
:data:`POS_INF`.  No floats are accepted anywhere.

The max-plus semiring ``(Q u {-inf}, max, +)`` is the default
(:data:`MAXPLUS`); :data:`MINPLUS` is its order dual with zero ``+inf``.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import ConventionMismatch, DivisionByZero, PreconditionViolated


class Infinity:
    """One of the two signed infinities; compares against any rational."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self):
        return "NEG_INF" if self.sign < 0 else "POS_INF"

    def __str__(self):
        return "-inf" if self.sign < 0 else "inf"

    def __hash__(self):
        return hash(("tropgeom.Infinity", self.sign))

    def __eq__(self, other):
        return isinstance(other, Infinity) and other.sign == self.sign

    def __ne__(self, other):
        return not self == other

    def _key(self, other):
        if isinstance(other, Infinity):
            return other.sign
        if isinstance(other, Rational):
            return 0
        return NotImplemented

    def __lt__(self, other):
        k = self._key(other)
        return k if k is NotImplemented else self.sign < k

    def __le__(self, other):
        k = self._key(other)
        return k if k is NotImplemented else self.sign <= k

    def __gt__(self, other):
        k = self._key(other)
        return k if k is NotImplemented else self.sign > k

    def __ge__(self, other):
        k = self._key(other)
        return k if k is NotImplemented else self.sign >= k

    def __neg__(self):
        return POS_INF if self.sign < 0 else NEG_INF

    def __reduce__(self):
        return (_infinity, (self.sign,))


def _infinity(sign):
    return NEG_INF if sign < 0 else POS_INF


NEG_INF = Infinity(-1)
POS_INF = Infinity(+1)

Scalar = Union[int, Fraction, Infinity]


def is_finite(x) -> bool:
    return not isinstance(x, Infinity)


def scalar(value) -> Scalar:
    """Coerce ``value`` to an exact tropical scalar.

    Accepts ints, Fractions, the infinity singletons and strings such as
    ``"3"``, ``"-7/2"``, ``"0.25"``, ``"-inf"`` and ``"inf"``.  Floats are
    rejected because they would make tie-detection unreliable.
    """
    if isinstance(value, Infinity):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not tropical scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return scalar(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        text = value.strip()
        low = text.lower()
        if low in ("-inf", "-infinity", "neg_inf"):
            return NEG_INF
        if low in ("inf", "+inf", "infinity", "pos_inf"):
            return POS_INF
        return scalar(Fraction(text))
    raise TypeError(f"cannot use {type(value).__name__} {value!r} as an exact tropical scalar")


class Flavor(enum.Enum):
    MAX_PLUS = "max"
    MIN_PLUS = "min"


@dataclass(frozen=True)
class Semiring:
    """A tropical convention: which of max/min is addition."""

    flavor: Flavor

    @property
    def zero(self) -> Infinity:
        return NEG_INF if self.flavor is Flavor.MAX_PLUS else POS_INF

    @property
    def one(self) -> int:
        return 0

    @property
    def foreign_zero(self) -> Infinity:
        return POS_INF if self.flavor is Flavor.MAX_PLUS else NEG_INF

    def check(self, x):
        if isinstance(x, Infinity) and x is self.foreign_zero:
            raise ConventionMismatch(f"{x} is not an element of the {self.flavor.value}-plus semiring")
        return x

    def better(self, x, y) -> bool:
        """True when ``x`` strictly dominates ``y`` under this ``add``."""
        return x > y if self.flavor is Flavor.MAX_PLUS else x < y

    def add(self, x, y):
        self.check(x)
        self.check(y)
        return y if self.better(y, x) else x

    def sum(self, xs):
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def mul(self, x, y):
        self.check(x)
        self.check(y)
        if isinstance(x, Infinity) or isinstance(y, Infinity):
            return self.zero
        return x + y

    def prod(self, xs):
        acc = self.one
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def div(self, x, y):
        self.check(x)
        self.check(y)
        if isinstance(y, Infinity):
            raise DivisionByZero(f"division by the tropical zero {y}")
        if isinstance(x, Infinity):
            return x
        return x - y

    def residual(self, x, y):
        """Dual-order quotient used by residuation: the largest ``t`` (for
        max-plus) with ``t * y <= x``.  ``y`` must be finite."""
        if isinstance(x, Infinity):
            return x
        return x - y

    def dual_add(self, x, y):
        """The lattice operation opposite to ``add`` (min for max-plus)."""
        return x if self.better(y, x) else y

    def negate(self, x):
        return -x


MAXPLUS = Semiring(Flavor.MAX_PLUS)
MINPLUS = Semiring(Flavor.MIN_PLUS)


def semiring(name: str | Semiring | Flavor = "max") -> Semiring:
    if isinstance(name, Semiring):
        return name
    if isinstance(name, Flavor):
        return Semiring(name)
    return Semiring(Flavor(name))


def trop_add(x, y, sr: Semiring = MAXPLUS):
    return sr.add(x, y)


def trop_mul(x, y, sr: Semiring = MAXPLUS):
    return sr.mul(x, y)


def trop_div(x, y, sr: Semiring = MAXPLUS):
    return sr.div(x, y)


@dataclass(frozen=True)
class UnitWitness:
    """Which summands of ``u + v = 1`` are units, with their inverses."""

    u_unit: bool
    v_unit: bool
    u_inverse: Scalar | None
    v_inverse: Scalar | None


def check_semilinear_condition(u, v, sr: Semiring = MAXPLUS) -> UnitWitness:
    """Certify that ``u + v = 1`` forces ``u`` or ``v`` to be a unit.

    Raises :class:`PreconditionViolated` if ``u + v`` is not the tropical
    one.  For the tropical semiring every finite element is a unit, and the
    sum equalling ``0`` forces at least one summand to be finite.
    """
    if sr.add(u, v) != sr.one:
        raise PreconditionViolated(f"{u} + {v} = {sr.add(u, v)}, not the tropical one")
    u_unit, v_unit = is_finite(u), is_finite(v)
    witness = UnitWitness(
        u_unit,
        v_unit,
        sr.div(sr.one, u) if u_unit else None,
        sr.div(sr.one, v) if v_unit else None,
    )
    assert witness.u_unit or witness.v_unit
    if u_unit:
        assert sr.mul(u, witness.u_inverse) == sr.one
    if v_unit:
        assert sr.mul(v, witness.v_inverse) == sr.one
    return witness


def random_rational(rng: random.Random, lo: int = -10, hi: int = 10, max_den: int = 6) -> Fraction:
    """A random exact rational in ``[lo, hi]`` with small denominator."""
    den = rng.randint(1, max_den)
    return scalar(Fraction(rng.randint(lo * den, hi * den), den))
