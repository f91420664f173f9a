"""Exact arithmetic in the field Q(i, sqrt2).

A :class:`RealScalar` is ``a + b*sqrt2`` with rational ``a``, ``b``; a
:class:`Scalar` is ``re + i*im`` with real parts in Q(sqrt2).  Both are stored
as integer numerators over one common positive denominator, reduced by the
gcd after every operation, so equal values always have equal representations.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "RealScalar",
    "Scalar",
    "as_scalar",
    "as_real",
    "real_sign",
    "to_float",
    "ZERO",
    "ONE",
    "I",
    "SQRT2",
    "HALF",
]

_SQRT2_FLOAT = math.sqrt(2.0)


def _reduce(nums, d):
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        nums = [-n for n in nums]
        d = -d
    g = d
    for n in nums:
        if n:
            g = math.gcd(g, n)
            if g == 1:
                break
    if g != 1:
        nums = [n // g for n in nums]
        d //= g
    if not any(nums):
        d = 1
    return nums, d


def _qsqrt2_sign(p: int, q: int) -> int:
    """Sign of p + q*sqrt2 for integers p, q."""
    if p >= 0 and q >= 0:
        return 1 if (p or q) else 0
    if p <= 0 and q <= 0:
        return -1
    # opposite signs: compare p^2 with 2 q^2
    diff = p * p - 2 * q * q
    if p > 0:
        return 1 if diff > 0 else -1
    return 1 if diff < 0 else -1


def _qsqrt2_float(p: int, q: int, d: int) -> float:
    if p == 0 or q == 0 or (p > 0) == (q > 0):
        return float(Fraction(p, d)) + float(Fraction(q, d)) * _SQRT2_FLOAT
    # avoid cancellation: p + q r = (p^2 - 2q^2) / (p - q r)
    num = float(Fraction(p * p - 2 * q * q, d))
    den = float(p) - float(q) * _SQRT2_FLOAT
    return num / den


class RealScalar:
    """Element ``a + b*sqrt2`` of the real subfield Q(sqrt2)."""

    __slots__ = ("_p", "_q", "_d", "_hash")

    def __init__(self, a=0, b=0):
        a = Fraction(a)
        b = Fraction(b)
        d = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        (p, q), d = _reduce([a.numerator * (d // a.denominator), b.numerator * (d // b.denominator)], d)
        self._p, self._q, self._d = p, q, d
        self._hash = None

    @classmethod
    def _raw(cls, p: int, q: int, d: int) -> "RealScalar":
        (p, q), d = _reduce([p, q], d)
        obj = object.__new__(cls)
        obj._p, obj._q, obj._d = p, q, d
        obj._hash = None
        return obj

    @property
    def a(self) -> Fraction:
        return Fraction(self._p, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._q, self._d)

    def sign(self) -> int:
        return _qsqrt2_sign(self._p, self._q)

    def is_zero(self) -> bool:
        return self._p == 0 and self._q == 0

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, RealScalar):
            return other
        if isinstance(other, (int, _RationalABC)):
            return RealScalar(other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, Scalar):
            return Scalar._from_real(self) + other
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d1, d2 = self._d, o._d
        return RealScalar._raw(self._p * d2 + o._p * d1, self._q * d2 + o._q * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return RealScalar._raw(-self._p, -self._q, self._d)

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return Scalar._from_real(self) - other
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Scalar._from_real(self) * other
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p1, q1, p2, q2 = self._p, self._q, o._p, o._q
        return RealScalar._raw(p1 * p2 + 2 * q1 * q2, p1 * q2 + q1 * p2, self._d * o._d)

    __rmul__ = __mul__

    def inv(self) -> "RealScalar":
        p, q = self._p, self._q
        n = p * p - 2 * q * q
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        return RealScalar._raw(p * self._d, -q * self._d, n)

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return Scalar._from_real(self) / other
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def conj(self) -> "RealScalar":
        return self

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return other == self
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self._p == o._p and self._q == o._q and self._d == o._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("S", self._p, self._q, 0, 0, self._d)) if self._q else hash(Fraction(self._p, self._d))
        return self._hash

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return _qsqrt2_float(self._p, self._q, self._d)

    def __repr__(self):
        return f"RealScalar({self.a}, {self.b})"

    def __str__(self):
        return _fmt_real(self.a, self.b)


def _fmt_real(a: Fraction, b: Fraction) -> str:
    if b == 0:
        return str(a)
    rt = "√2" if b == 1 else ("-√2" if b == -1 else f"{b}√2")
    if a == 0:
        return rt
    return f"{a}{'+' if not rt.startswith('-') else ''}{rt}"


class Scalar:
    """Exact complex number ``re + i*im`` with ``re``, ``im`` in Q(sqrt2)."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, re=0, im=0):
        re = as_real(re)
        im = as_real(im)
        d = re._d * im._d // math.gcd(re._d, im._d)
        m1, m2 = d // re._d, d // im._d
        self._n, self._d = _reduce([re._p * m1, re._q * m1, im._p * m2, im._q * m2], d)
        self._hash = None

    @classmethod
    def _raw(cls, nums, d) -> "Scalar":
        nums, d = _reduce(nums, d)
        obj = object.__new__(cls)
        obj._n = nums
        obj._d = d
        obj._hash = None
        return obj

    @classmethod
    def _from_real(cls, r: RealScalar) -> "Scalar":
        return cls._raw([r._p, r._q, 0, 0], r._d)

    @classmethod
    def from_parts(cls, a=0, b=0, c=0, d=0) -> "Scalar":
        """Build ``(a + b*sqrt2) + i*(c + d*sqrt2)`` from rationals."""
        return cls(RealScalar(a, b), RealScalar(c, d))

    @property
    def re(self) -> RealScalar:
        n = self._n
        return RealScalar._raw(n[0], n[1], self._d)

    @property
    def im(self) -> RealScalar:
        n = self._n
        return RealScalar._raw(n[2], n[3], self._d)

    def is_zero(self) -> bool:
        n = self._n
        return not (n[0] or n[1] or n[2] or n[3])

    def is_real(self) -> bool:
        return self._n[2] == 0 and self._n[3] == 0

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._n, o._n
        d1, d2 = self._d, o._d
        if d1 == d2:
            return Scalar._raw([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]], d1)
        return Scalar._raw(
            [a[0] * d2 + b[0] * d1, a[1] * d2 + b[1] * d1, a[2] * d2 + b[2] * d1, a[3] * d2 + b[3] * d1],
            d1 * d2,
        )

    __radd__ = __add__

    def __neg__(self):
        n = self._n
        return Scalar._raw([-n[0], -n[1], -n[2], -n[3]], self._d)

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return Scalar._raw(_mul4(self._n, o._n), self._d * o._d)

    __rmul__ = __mul__

    def conj(self) -> "Scalar":
        n = self._n
        return Scalar._raw([n[0], n[1], -n[2], -n[3]], self._d)

    def abs2(self) -> RealScalar:
        """``|x|^2`` as an element of Q(sqrt2)."""
        n = _mul4(self._n, [self._n[0], self._n[1], -self._n[2], -self._n[3]])
        return RealScalar._raw(n[0], n[1], self._d * self._d)

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(i, sqrt2)")
        y = self._n
        cy = [y[0], y[1], -y[2], -y[3]]
        norm = _mul4(y, cy)  # P + Q sqrt2, real
        P, Q = norm[0], norm[1]
        num = _mul4(cy, [P, -Q, 0, 0])
        den = P * P - 2 * Q * Q
        d = self._d
        return Scalar._raw([n * d for n in num], den)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return False
        return self._d == o._d and self._n == o._n

    def __hash__(self):
        if self._hash is None:
            n = self._n
            if not (n[1] or n[2] or n[3]):
                self._hash = hash(Fraction(n[0], self._d))
            else:
                self._hash = hash(("S", *n, self._d))
        return self._hash

    def __complex__(self):
        return to_float(self)

    def __repr__(self):
        return f"Scalar({self.re!r}, {self.im!r})"

    def __str__(self):
        re, im = self.re, self.im
        if im.is_zero():
            return str(re)
        ims = str(im)
        if re.is_zero():
            return f"i({ims})" if ("+" in ims or "-" in ims[1:]) else f"{ims}i"
        return f"{re}+i({ims})"

    def to_json(self) -> dict:
        re, im = self.re, self.im
        enc = lambda f: [str(f.numerator), str(f.denominator)]  # noqa: E731
        return {"re": [enc(re.a), enc(re.b)], "im": [enc(im.a), enc(im.b)]}

    @classmethod
    def from_json(cls, obj) -> "Scalar":
        dec = lambda pair: Fraction(int(pair[0]), int(pair[1]))  # noqa: E731
        (a, b), (c, d) = obj["re"], obj["im"]
        return cls.from_parts(dec(a), dec(b), dec(c), dec(d))


def _mul4(x, y):
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return [
        x0 * y0 + 2 * x1 * y1 - x2 * y2 - 2 * x3 * y3,
        x0 * y1 + x1 * y0 - x2 * y3 - x3 * y2,
        x0 * y2 + 2 * x1 * y3 + x2 * y0 + 2 * x3 * y1,
        x0 * y3 + x1 * y2 + x2 * y1 + x3 * y0,
    ]


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, RealScalar):
        return Scalar._from_real(x)
    if isinstance(x, int):
        return Scalar._raw([x, 0, 0, 0], 1)
    if isinstance(x, _RationalABC):
        return Scalar._raw([x.numerator, 0, 0, 0], x.denominator)
    if isinstance(x, complex) and x.real.is_integer() and x.imag.is_integer():
        return Scalar._raw([int(x.real), 0, int(x.imag), 0], 1)
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Coerce ints, rationals, Gaussian-integer complexes and RealScalars."""
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot convert {x!r} to an exact Scalar")
    return s


def as_real(x) -> RealScalar:
    if isinstance(x, RealScalar):
        return x
    if isinstance(x, Scalar):
        if not x.is_real():
            raise ValueError(f"{x} is not real")
        return x.re
    if isinstance(x, (int, _RationalABC)):
        return RealScalar(x)
    raise TypeError(f"cannot convert {x!r} to RealScalar")


def real_sign(x) -> int:
    """Exact sign (-1, 0, +1) of an element of Q(sqrt2)."""
    return as_real(x).sign()


def to_float(x) -> complex:
    """Nearest complex double to an exact scalar."""
    s = as_scalar(x)
    n, d = s._n, s._d
    return complex(_qsqrt2_float(n[0], n[1], d), _qsqrt2_float(n[2], n[3], d))


ZERO = Scalar._raw([0, 0, 0, 0], 1)
ONE = Scalar._raw([1, 0, 0, 0], 1)
I = Scalar._raw([0, 0, 1, 0], 1)
SQRT2 = Scalar._raw([0, 1, 0, 0], 1)
HALF = Scalar._raw([1, 0, 0, 0], 2)
