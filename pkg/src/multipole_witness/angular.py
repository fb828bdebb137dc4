"""Exact angular-momentum coupling coefficients.

Clebsch-Gordan coefficients use the real Condon-Shortley convention
(Rose; Varshalovich-Moskalev-Khersonskii), 6j and 9j symbols the standard
Racah/recoupling conventions of the same books.  Every coefficient is
evaluated with big-integer factorials and ``fractions.Fraction``, so CG and
6j values are exact sign*sqrt(rational) objects.  The 9j symbol is a sum of
unlike radicals and is therefore accumulated from 128-bit-precision rational
approximations of its terms before the single final conversion to float.

All quantum numbers are stored as doubled integers (``HalfInt``), which keeps
half-integer arithmetic exact and hashable for memoization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt

__all__ = [
    "HalfInt",
    "SignedSqrtRational",
    "triangle_ok",
    "clebsch_gordan",
    "wigner6j",
    "wigner9j",
]

# Bits of precision used when a sqrt(rational) has to become a number.
_SQRT_BITS = 128


@dataclass(frozen=True, order=True)
class HalfInt:
    """An integer or half-integer quantum number, stored as twice its value."""

    twice: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + _twice(other))

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - _twice(other))

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __float__(self) -> float:
        return self.twice / 2

    def __repr__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def _twice(x) -> int:
    """Doubled integer for a half-integer-like value; rejects anything else."""
    if isinstance(x, HalfInt):
        return x.twice
    if isinstance(x, int):
        return 2 * x
    if isinstance(x, Fraction):
        doubled = 2 * x
        if doubled.denominator != 1:
            raise ValueError(f"{x} is not an integer or half-integer")
        return int(doubled)
    if isinstance(x, float):
        doubled = 2 * x
        if doubled != int(doubled):
            raise ValueError(f"{x} is not an integer or half-integer")
        return int(doubled)
    raise TypeError(f"cannot interpret {x!r} as a half-integer")


def _sqrt_fraction(square: Fraction, bits: int = _SQRT_BITS) -> Fraction:
    """Rational approximation of sqrt(square), accurate to ~2**-bits relative."""
    if square < 0:
        raise ValueError("square must be nonnegative")
    n = square.numerator * square.denominator
    return Fraction(isqrt(n << (2 * bits)), square.denominator << bits)


@dataclass(frozen=True)
class SignedSqrtRational:
    """Exact value sign*sqrt(square) with square a nonnegative rational.

    This is closed under multiplication and is the natural carrier for CG
    coefficients and 6j symbols, whose Racah forms are a rational sum times
    the square root of a rational.
    """

    sign: int
    square: Fraction

    def __post_init__(self):
        if self.square < 0:
            raise ValueError("square must be nonnegative")
        if (self.sign == 0) != (self.square == 0):
            raise ValueError("sign must be 0 exactly when square is 0")
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other: "SignedSqrtRational") -> "SignedSqrtRational":
        return SignedSqrtRational(self.sign * other.sign, self.square * other.square)

    def __neg__(self) -> "SignedSqrtRational":
        return SignedSqrtRational(-self.sign, self.square)

    def scaled(self, rational) -> "SignedSqrtRational":
        """Value times sqrt(rational), for exact positive rational factors."""
        factor = Fraction(rational)
        if factor < 0:
            raise ValueError("scale factor must be nonnegative")
        if factor == 0:
            return ZERO
        return SignedSqrtRational(self.sign, self.square * factor)

    def to_fraction(self, bits: int = _SQRT_BITS) -> Fraction:
        return self.sign * _sqrt_fraction(self.square, bits)

    def __float__(self) -> float:
        return float(self.to_fraction())


ZERO = SignedSqrtRational(0, Fraction(0))


def _triangle_twice(ta: int, tb: int, tc: int) -> bool:
    return abs(ta - tb) <= tc <= ta + tb and (ta + tb + tc) % 2 == 0


def triangle_ok(a, b, c) -> bool:
    """Triangle rule: |a-b| <= c <= a+b with integer perimeter."""
    ta, tb, tc = _twice(a), _twice(b), _twice(c)
    if ta < 0 or tb < 0 or tc < 0:
        raise ValueError("triangle arguments must be nonnegative")
    return _triangle_twice(ta, tb, tc)


def clebsch_gordan(j1, j2, j, m1, m2, m) -> SignedSqrtRational:
    """Clebsch-Gordan coefficient C(j1 j2 j; m1 m2 m) = <j1 m1 j2 m2 | j m>.

    Exact via the Racah sum.  Returns zero when m1+m2 != m, when the triangle
    rule fails, or when a projection exceeds its magnitude.  Raises for pairs
    where j-m is not an integer.
    """
    return _cg(_twice(j1), _twice(j2), _twice(j), _twice(m1), _twice(m2), _twice(m))


@lru_cache(maxsize=200_000)
def _cg(tj1: int, tj2: int, tj: int, tm1: int, tm2: int, tm: int) -> SignedSqrtRational:
    for tjx, tmx in ((tj1, tm1), (tj2, tm2), (tj, tm)):
        if tjx < 0:
            raise ValueError("angular momentum magnitude must be nonnegative")
        if (tjx + tmx) % 2 != 0:
            raise ValueError(f"j={Fraction(tjx,2)}, m={Fraction(tmx,2)}: j-m is not an integer")
    if tm1 + tm2 != tm or not _triangle_twice(tj1, tj2, tj):
        return ZERO
    if abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tm) > tj:
        return ZERO

    # Integer building blocks of the Racah formula.
    a = (tj1 + tj2 - tj) // 2
    j1_m1 = (tj1 - tm1) // 2
    j2_p2 = (tj2 + tm2) // 2
    b = (tj - tj2 + tm1) // 2
    c = (tj - tj1 - tm2) // 2
    kmin = max(0, -b, -c)
    kmax = min(a, j1_m1, j2_p2)
    if kmin > kmax:
        return ZERO

    total = Fraction(0)
    for k in range(kmin, kmax + 1):
        denom = (
            factorial(k)
            * factorial(a - k)
            * factorial(j1_m1 - k)
            * factorial(j2_p2 - k)
            * factorial(b + k)
            * factorial(c + k)
        )
        total += Fraction(-1 if k % 2 else 1, denom)
    if total == 0:
        return ZERO

    prefactor = Fraction(
        (tj + 1)
        * factorial(a)
        * factorial((tj1 - tj2 + tj) // 2)
        * factorial((-tj1 + tj2 + tj) // 2),
        factorial((tj1 + tj2 + tj) // 2 + 1),
    ) * (
        factorial((tj1 + tm1) // 2)
        * factorial(j1_m1)
        * factorial(j2_p2)
        * factorial((tj2 - tm2) // 2)
        * factorial((tj + tm) // 2)
        * factorial((tj - tm) // 2)
    )
    return SignedSqrtRational(1 if total > 0 else -1, total * total * prefactor)


def _delta_square(ta: int, tb: int, tc: int) -> Fraction:
    """Square of the triangle factor Delta(a b c)."""
    return Fraction(
        factorial((ta + tb - tc) // 2)
        * factorial((ta - tb + tc) // 2)
        * factorial((-ta + tb + tc) // 2),
        factorial((ta + tb + tc) // 2 + 1),
    )


def wigner6j(a, b, c, d, e, f) -> SignedSqrtRational:
    """Wigner 6j symbol {a b c; d e f}, exact via the single Racah sum.

    Zero whenever one of the four triads (abc), (aef), (dbf), (dec) violates
    the triangle rule.
    """
    return _w6j(_twice(a), _twice(b), _twice(c), _twice(d), _twice(e), _twice(f))


@lru_cache(maxsize=100_000)
def _w6j(ta: int, tb: int, tc: int, td: int, te: int, tf: int) -> SignedSqrtRational:
    if min(ta, tb, tc, td, te, tf) < 0:
        raise ValueError("6j arguments must be nonnegative")
    triads = ((ta, tb, tc), (ta, te, tf), (td, tb, tf), (td, te, tc))
    if any(not _triangle_twice(*t) for t in triads):
        return ZERO

    t_abc = (ta + tb + tc) // 2
    t_aef = (ta + te + tf) // 2
    t_dbf = (td + tb + tf) // 2
    t_dec = (td + te + tc) // 2
    q_abde = (ta + tb + td + te) // 2
    q_bcef = (tb + tc + te + tf) // 2
    q_acdf = (ta + tc + td + tf) // 2

    total = Fraction(0)
    for z in range(max(t_abc, t_aef, t_dbf, t_dec), min(q_abde, q_bcef, q_acdf) + 1):
        denom = (
            factorial(z - t_abc)
            * factorial(z - t_aef)
            * factorial(z - t_dbf)
            * factorial(z - t_dec)
            * factorial(q_abde - z)
            * factorial(q_bcef - z)
            * factorial(q_acdf - z)
        )
        total += Fraction((-1 if z % 2 else 1) * factorial(z + 1), denom)
    if total == 0:
        return ZERO

    square = (
        total
        * total
        * _delta_square(ta, tb, tc)
        * _delta_square(ta, te, tf)
        * _delta_square(td, tb, tf)
        * _delta_square(td, te, tc)
    )
    return SignedSqrtRational(1 if total > 0 else -1, square)


def wigner9j(j1, j2, j3, j4, j5, j6, j7, j8, j9) -> float:
    """Wigner 9j symbol for the rows (j1 j2 j3), (j4 j5 j6), (j7 j8 j9).

    Computed by the standard single sum over products of three 6j symbols;
    the exact sqrt-rational terms are accumulated at 128-bit precision and
    converted to float once at the end.  Zero when any row or column triad
    violates the triangle rule.
    """
    return _w9j(
        _twice(j1), _twice(j2), _twice(j3),
        _twice(j4), _twice(j5), _twice(j6),
        _twice(j7), _twice(j8), _twice(j9),
    )


@lru_cache(maxsize=50_000)
def _w9j(t1: int, t2: int, t3: int, t4: int, t5: int, t6: int,
         t7: int, t8: int, t9: int) -> float:
    rows = ((t1, t2, t3), (t4, t5, t6), (t7, t8, t9))
    cols = ((t1, t4, t7), (t2, t5, t8), (t3, t6, t9))
    if any(not _triangle_twice(*t) for t in rows + cols):
        return 0.0

    tx_min = max(abs(t1 - t9), abs(t2 - t6), abs(t4 - t8))
    tx_max = min(t1 + t9, t2 + t6, t4 + t8)
    acc = Fraction(0)
    for tx in range(tx_min, tx_max + 1, 2):
        s1 = _w6j(t1, t4, t7, t8, t9, tx)
        if s1.is_zero:
            continue
        s2 = _w6j(t2, t5, t8, t4, tx, t6)
        if s2.is_zero:
            continue
        s3 = _w6j(t3, t6, t9, tx, t1, t2)
        if s3.is_zero:
            continue
        term = s1 * s2 * s3
        weight = (tx + 1) * (-1 if tx % 2 else 1)
        acc += weight * term.sign * _sqrt_fraction(term.square)
    return float(acc)
