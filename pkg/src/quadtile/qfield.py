"""
Exact arithmetic in the real quadratic field Q(sqrt p).

A value a + b*sqrt(p) is stored as three integers (A, B, D) with
a = A/D, b = B/D, D > 0 and gcd(A, B, D) = 1.  Because sqrt(p) is
irrational that triple is unique, so equality and hashing are plain
tuple operations.  Nothing in this module touches floating point.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, NonPositive, PerfectSquare, RadicandMismatch

RationalLike = Union[int, Fraction]


def _square_free_split(n: int) -> tuple[int, int]:
    """Return (s, q) with n == s*s*q and q square-free."""
    s, q = 1, 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        s *= d ** (e // 2)
        if e % 2:
            q *= d
        d += 1 if d == 2 else 2
    return s, q * n


def normalize_radicand(p_in: RationalLike | str) -> tuple[int, Fraction]:
    """Rewrite sqrt(p_in) as scale*sqrt(p) with p a square-free integer >= 2."""
    p_in = Fraction(p_in)
    if p_in <= 0:
        raise NonPositive(f"radicand must be positive, got {p_in}")
    # sqrt(n/d) = sqrt(n*d)/d
    n, d = p_in.numerator, p_in.denominator
    s, q = _square_free_split(n * d)
    if q == 1:
        raise PerfectSquare(f"sqrt({p_in}) is rational")
    return q, Fraction(s, d)


class QNum:
    """An element a + b*sqrt(p) of Q(sqrt p)."""

    __slots__ = ("_A", "_B", "_D", "_p")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, p: int = 2):
        a, b = Fraction(a), Fraction(b)
        D = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        self._A = a.numerator * (D // a.denominator)
        self._B = b.numerator * (D // b.denominator)
        self._D = D
        self._p = p

    @classmethod
    def _raw(cls, A: int, B: int, D: int, p: int) -> QNum:
        if D < 0:
            A, B, D = -A, -B, -D
        g = math.gcd(A, B, D)
        if g != 1:
            A //= g
            B //= g
            D //= g
        obj = object.__new__(cls)
        obj._A = A
        obj._B = B
        obj._D = D
        obj._p = p
        return obj

    @classmethod
    def rational(cls, q: RationalLike, p: int) -> QNum:
        q = Fraction(q)
        return cls._raw(q.numerator, 0, q.denominator, p)

    # -- accessors ---------------------------------------------------------

    @property
    def a(self) -> Fraction:
        return Fraction(self._A, self._D)

    @property
    def b(self) -> Fraction:
        return Fraction(self._B, self._D)

    @property
    def p(self) -> int:
        return self._p

    @property
    def parts(self) -> tuple[int, int, int]:
        """The reduced integer triple (A, B, D)."""
        return self._A, self._B, self._D

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> QNum:
        if type(other) is QNum and other._p == self._p:
            return other
        if isinstance(other, QNum):
            if other._p != self._p:
                raise RadicandMismatch(f"sqrt({self._p}) vs sqrt({other._p})")
            return other
        if isinstance(other, (int, Fraction)):
            return QNum.rational(other, self._p)
        return NotImplemented

    # -- field operations --------------------------------------------------

    def __add__(self, other) -> QNum:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        D1, D2 = self._D, o._D
        return QNum._raw(self._A * D2 + o._A * D1, self._B * D2 + o._B * D1, D1 * D2, self._p)

    __radd__ = __add__

    def __neg__(self) -> QNum:
        return QNum._raw(-self._A, -self._B, self._D, self._p)

    def __sub__(self, other) -> QNum:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        D1, D2 = self._D, o._D
        return QNum._raw(self._A * D2 - o._A * D1, self._B * D2 - o._B * D1, D1 * D2, self._p)

    def __rsub__(self, other) -> QNum:
        return -(self - other)

    def __mul__(self, other) -> QNum:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        A1, B1, A2, B2 = self._A, self._B, o._A, o._B
        return QNum._raw(A1 * A2 + self._p * B1 * B2, A1 * B2 + A2 * B1, self._D * o._D, self._p)

    __rmul__ = __mul__

    def reciprocal(self) -> QNum:
        # (A + B s)/D  ->  D (A - B s) / (A^2 - p B^2)
        A, B = self._A, self._B
        norm = A * A - self._p * B * B
        if norm == 0:
            raise DivisionByZero("division by zero in Q(sqrt p)")
        return QNum._raw(self._D * A, -self._D * B, norm, self._p)

    def __truediv__(self, other) -> QNum:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.reciprocal()

    def __rtruediv__(self, other) -> QNum:
        return self.reciprocal() * other

    def conj(self) -> QNum:
        return QNum._raw(self._A, -self._B, self._D, self._p)

    def norm(self) -> Fraction:
        """a^2 - p b^2, the product of the number and its conjugate."""
        return Fraction(self._A * self._A - self._p * self._B * self._B, self._D * self._D)

    # -- order -------------------------------------------------------------

    def sign(self) -> int:
        A, B = self._A, self._B
        if A >= 0 and B >= 0:
            return 1 if (A or B) else 0
        if A <= 0 and B <= 0:
            return -1
        sa = 1 if A > 0 else -1
        d = A * A - self._p * B * B
        return sa if d > 0 else -sa

    def __eq__(self, other) -> bool:
        if type(other) is QNum:
            return (self._A, self._B, self._D, self._p) == (other._A, other._B, other._D, other._p)
        if isinstance(other, (int, Fraction)):
            return self._B == 0 and Fraction(self._A, self._D) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._B == 0:
            # must agree with int and Fraction hashes
            return hash(self._A) if self._D == 1 else hash(Fraction(self._A, self._D))
        return hash((self._A, self._B, self._D, self._p))

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare QNum with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __bool__(self) -> bool:
        return bool(self._A or self._B)

    def __abs__(self) -> QNum:
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        A, B, D = self._A, self._B, self._D
        if B == 0:
            return A // D
        r = math.isqrt(B * B * self._p)
        # sqrt(B^2 p) is irrational, so floor(A - sqrt) = A - r - 1
        top = A + r if B > 0 else A - r - 1
        return top // D

    def __floor__(self) -> int:
        return self.floor()

    # -- conversions -------------------------------------------------------

    def as_rational(self) -> Fraction | None:
        return Fraction(self._A, self._D) if self._B == 0 else None

    def __repr__(self) -> str:
        return f"QNum({format_qnum(self)}, p={self._p})"

    def __str__(self) -> str:
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        rad = f"√{self._p}"
        coef = "" if abs(b) == 1 else f"{abs(b)}*"
        if a == 0:
            return f"{'-' if b < 0 else ''}{coef}{rad}"
        return f"{a} {'-' if b < 0 else '+'} {coef}{rad}"


# Functional spellings of the field operations.

def add(x: QNum, y: QNum) -> QNum:
    return x + y


def sub(x: QNum, y: QNum) -> QNum:
    return x - y


def mul(x: QNum, y: QNum) -> QNum:
    return x * y


def div(x: QNum, y: QNum) -> QNum:
    return x / y


_OPS = {"add": add, "sub": sub, "mul": mul, "div": div}


def arith(op: str, x: QNum, y: QNum) -> QNum:
    return _OPS[op](x, y)


def conj(x: QNum) -> QNum:
    return x.conj()


def sign(x: QNum) -> int:
    return x.sign()


def as_rational(x: QNum) -> Fraction | None:
    return x.as_rational()


def to_coprime_fraction(q: RationalLike) -> tuple[int, int]:
    q = Fraction(q)
    if q <= 0:
        raise NonPositive(f"expected a positive rational, got {q}")
    return q.numerator, q.denominator


# Canonical text form: "A/B+C/D*s", s standing for sqrt(p).

_QNUM_RE = re.compile(r"^(-?\d+)/(\d+)([+-]\d+)/(\d+)\*s$")


def format_qnum(x: QNum) -> str:
    a, b = x.a, x.b
    return f"{a.numerator}/{a.denominator}{'-' if b < 0 else '+'}{abs(b.numerator)}/{b.denominator}*s"


def parse_qnum(text: str, p: int) -> QNum:
    m = _QNUM_RE.match(text)
    if m is None:
        raise ValueError(f"not a canonical number: {text!r}")
    an, ad, bn, bd = (int(g) for g in m.groups())
    if ad == 0 or bd == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return QNum(Fraction(an, ad), Fraction(bn, bd), p)
