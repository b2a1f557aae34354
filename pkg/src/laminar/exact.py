"""Exact arithmetic over rationals and real quadratic irrationals.

Everything here is decidable: sign questions about Q-linear combinations
of square roots of distinct square-free integers terminate because such
roots are linearly independent over Q.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

ZERO = Fraction(0)
ONE = Fraction(1)


def squarefree_decompose(n: int) -> Tuple[int, int]:
    """Return (m, s) with n = m*m*s and s square-free. n must be >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1):
        return 1, n
    m = 1
    s = n
    f = 2
    while f * f <= s:
        if s % (f * f) == 0:
            while s % (f * f) == 0:
                s //= f * f
                m *= f
        f += 1
    return m, s


def _sqrt_interval(d: int, bits: int) -> Tuple[Fraction, Fraction]:
    """Rational interval of width 2^-bits containing sqrt(d)."""
    scale = 1 << bits
    lo = math.isqrt(d * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


def radical_sign(terms: Mapping[int, Fraction]) -> int:
    """Sign of sum(coeff * sqrt(d) for d, coeff in terms.items()).

    Keys must be square-free non-negative integers (1 means a rational
    term, 0 contributes nothing). Exact: returns -1, 0 or 1.
    """
    cleaned: Dict[int, Fraction] = {}
    for d, c in terms.items():
        if c == 0 or d == 0:
            continue
        m, s = squarefree_decompose(d)
        cleaned[s] = cleaned.get(s, ZERO) + c * m
    cleaned = {d: c for d, c in cleaned.items() if c != 0}
    if not cleaned:
        return 0
    if len(cleaned) == 1:
        ((_, c),) = cleaned.items()
        return 1 if c > 0 else -1
    # Nonzero by linear independence of square roots of distinct
    # square-free integers; refine until the interval excludes zero.
    bits = 16
    while True:
        lo_sum = ZERO
        hi_sum = ZERO
        for d, c in cleaned.items():
            lo, hi = _sqrt_interval(d, bits)
            if c > 0:
                lo_sum += c * lo
                hi_sum += c * hi
            else:
                lo_sum += c * hi
                hi_sum += c * lo
        if lo_sum > 0:
            return 1
        if hi_sum < 0:
            return -1
        bits *= 2


def _sign_rational_plus_root(a: Fraction, b: Fraction, d: int) -> int:
    """Sign of a + b*sqrt(d) by the squaring method (d square-free >= 0)."""
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)
    sb = 1 if b > 0 else -1
    if a == 0:
        return sb
    sa = 1 if a > 0 else -1
    if sa == sb:
        return sa
    # Opposite signs: compare a^2 against b^2 d.
    diff = a * a - b * b * d
    if diff == 0:
        return 0
    return sa if diff > 0 else sb


def sign_two_roots(a: Fraction, b: Fraction, s: int, c: Fraction, t: int) -> int:
    """Sign of a + b*sqrt(s) + c*sqrt(t) via repeated squaring with sign tracking."""
    if c == 0 or t == 0:
        return _sign_rational_plus_root(a, b, s)
    if b == 0 or s == 0:
        return _sign_rational_plus_root(a, c, t)
    ms, s0 = squarefree_decompose(s)
    mt, t0 = squarefree_decompose(t)
    b, s = b * ms, s0
    c, t = c * mt, t0
    if s == t:
        return _sign_rational_plus_root(a, b + c, s)
    if s == 1:
        return _sign_rational_plus_root(a + b, c, t)
    if t == 1:
        return _sign_rational_plus_root(a + c, b, s)
    # Compare u = a + b*sqrt(s) against w = -c*sqrt(t).
    su = _sign_rational_plus_root(a, b, s)
    sw = -(1 if c > 0 else -1)
    if su != sw:
        if su == 0:
            return -sw
        if sw == 0:
            return su
        return su
    # Same strict sign: sign(u - w) = sign(u^2 - w^2) * su.
    sq = _sign_rational_plus_root(a * a + b * b * s - c * c * t, 2 * a * b, s)
    return sq * su


class QuadraticReal:
    """a + b*sqrt(d) with rational a, b and square-free integer d >= 0.

    Normal form: d square-free; b == 0 forces d == 0. Total order and
    equality are exact; hash agrees with the normal form so structural
    equality is semantic equality.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=ZERO, d: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if d < 0:
            raise ValueError("negative radicand")
        if b != 0 and d > 1:
            m, s = squarefree_decompose(d)
            b *= m
            d = s
        if d <= 1:
            a += b * d  # sqrt(1) == 1, sqrt(0) == 0
            b = ZERO
            d = 0
        if b == 0:
            d = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *args):
        raise AttributeError("QuadraticReal is immutable")

    # -- queries ---------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        return _sign_rational_plus_root(self.a, self.b, self.d)

    def conjugate(self) -> "QuadraticReal":
        return QuadraticReal(self.a, -self.b, self.d)

    def floor(self) -> int:
        est = math.floor(float(self))
        for n in (est - 1, est, est + 1):
            if (
                _sign_rational_plus_root(self.a - n, self.b, self.d) >= 0
                and _sign_rational_plus_root(self.a - (n + 1), self.b, self.d) < 0
            ):
                return n
        raise AssertionError("floor estimate off by more than one")

    # -- arithmetic (closed within one quadratic field) -------------------
    def _coerce(self, other):
        if isinstance(other, QuadraticReal):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticReal(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.b != 0 and o.b != 0 and self.d != o.d:
            raise ValueError("sum leaves the quadratic field")
        d = self.d if self.b != 0 else o.d
        return QuadraticReal(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticReal(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.b != 0 and o.b != 0 and self.d != o.d:
            raise ValueError("product leaves the quadratic field")
        d = self.d if self.b != 0 else o.d
        return QuadraticReal(
            self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.sign() == 0:
            raise ZeroDivisionError("division by zero quadratic real")
        if o.b == 0:
            return QuadraticReal(self.a / o.a, self.b / o.a, self.d)
        norm = o.a * o.a - o.b * o.b * o.d
        return self * QuadraticReal(o.a / norm, -o.b / norm, o.d)

    def __rtruediv__(self, other):
        return QuadraticReal(other) / self

    # -- comparisons -------------------------------------------------------
    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare QuadraticReal with {type(other)}")
        return sign_two_roots(self.a - o.a, self.b, self.d, -o.b, o.d)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadraticReal)):
            o = self._coerce(other)
            return self.a == o.a and self.b == o.b and self.d == o.d
        return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        if self.is_rational:
            return f"QuadraticReal({self.a})"
        return f"QuadraticReal({self.a} + {self.b}*sqrt({self.d}))"

    def terms(self) -> Dict[int, Fraction]:
        """Radical-term dictionary {d: coeff} suitable for radical_sign."""
        out: Dict[int, Fraction] = {}
        if self.a:
            out[1] = self.a
        if self.b:
            out[self.d] = self.b
        return out


def terms_add(*term_dicts: Mapping[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for td in term_dicts:
        for d, c in td.items():
            out[d] = out.get(d, ZERO) + c
    return {d: c for d, c in out.items() if c != 0}


def terms_neg(td: Mapping[int, Fraction]) -> Dict[int, Fraction]:
    return {d: -c for d, c in td.items()}


def rational_in(lo: QuadraticReal, hi: QuadraticReal) -> Fraction:
    """Some rational strictly between lo and hi (lo < hi required)."""
    if not lo < hi:
        raise ValueError("empty interval")
    # Dyadic bisection: denominators 2^k until one fits strictly inside.
    k = 0
    while True:
        scale = 1 << k
        n = (lo * scale).floor() + 1
        cand = Fraction(n, scale)
        if lo < cand < hi:
            return cand
        k += 1
