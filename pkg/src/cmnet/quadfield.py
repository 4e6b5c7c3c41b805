"""Exact arithmetic in an imaginary quadratic field K = Q(sqrt(N)).

Elements are written on the basis {1, w} of the working order Z[w], where
w^2 = A*w - D.  Internally an element is an integer triple (a, b, d) meaning
(a + b*w)/d with d > 0 and gcd(a, b, d) = 1, which keeps multiplication free
of per-coordinate gcd work.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from numbers import Rational

from .errors import DivisionByZero, ParamsMismatch, ParseError


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldParams:
    """The field Q(sqrt(N)) together with the order Z[w] of conductor f."""

    N: int
    f: int = 1

    def __post_init__(self):
        if self.N >= 0 or not is_squarefree(self.N):
            raise ValueError(f"N must be a negative squarefree integer, got {self.N}")
        if self.f < 1:
            raise ValueError(f"conductor must be positive, got {self.f}")

    @property
    def one_mod_four(self) -> bool:
        return self.N % 4 == 1

    @cached_property
    def A(self) -> int:
        return self.f if self.one_mod_four else 0

    @cached_property
    def D(self) -> int:
        if self.one_mod_four:
            return self.f * self.f * (1 - self.N) // 4
        return -self.f * self.f * self.N

    @property
    def disc(self) -> int:
        """Discriminant of the maximal order O_K."""
        return self.N if self.one_mod_four else 4 * self.N

    @property
    def max_A(self) -> int:
        """Minimal polynomial t^2 - max_A*t + max_D of the maximal-order generator."""
        return 1 if self.one_mod_four else 0

    @property
    def max_D(self) -> int:
        return (1 - self.N) // 4 if self.one_mod_four else -self.N

    def elem(self, a=0, b=0) -> "QFElem":
        return QFElem(a, b, self)

    @property
    def one(self) -> "QFElem":
        return QFElem(1, 0, self)

    @property
    def zero(self) -> "QFElem":
        return QFElem(0, 0, self)

    @property
    def omega(self) -> "QFElem":
        return QFElem(0, 1, self)

    @cached_property
    def units(self) -> tuple["QFElem", ...]:
        """Unit group of O_K, in a fixed order starting with 1."""
        gens = [(1, 0), (-1, 0)]
        if self.N == -1:
            gens += [(0, 1), (0, -1)]
        elif self.N == -3:
            # w_K = (1 + sqrt(-3))/2 is a primitive sixth root of unity
            gens += [(0, 1), (0, -1), (-1, 1), (1, -1)]
        return tuple(QFElem.from_maximal_coords(c, e, self) for c, e in gens)

    def __str__(self):
        return f"Q(sqrt({self.N})), conductor {self.f}"


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    raise TypeError(f"expected a rational, got {type(v).__name__}")


class QFElem:
    """An element (a + b*w)/d of K, immutable."""

    __slots__ = ("_a", "_b", "_d", "params")

    def __init__(self, a=0, b=0, params: FieldParams | None = None):
        if params is None:
            raise TypeError("QFElem needs FieldParams")
        fa, fb = _as_fraction(a), _as_fraction(b)
        d = fa.denominator * fb.denominator // gcd(fa.denominator, fb.denominator)
        self._set(fa.numerator * (d // fa.denominator), fb.numerator * (d // fb.denominator), d, params)

    def _set(self, a: int, b: int, d: int, params: FieldParams):
        g = gcd(gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)
        object.__setattr__(self, "params", params)

    @classmethod
    def _raw(cls, a: int, b: int, d: int, params: FieldParams) -> "QFElem":
        if d < 0:
            a, b, d = -a, -b, -d
        obj = cls.__new__(cls)
        obj._set(a, b, d, params)
        return obj

    @classmethod
    def from_maximal_coords(cls, c, e, params: FieldParams) -> "QFElem":
        """Build c + e*w_K, where w_K generates O_K and w = f*w_K."""
        return cls(c, _as_fraction(e) / params.f, params)

    def __setattr__(self, name, value):
        raise AttributeError("QFElem is immutable")

    # -- coordinates ------------------------------------------------------
    @property
    def a(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def triple(self) -> tuple[int, int, int]:
        return self._a, self._b, self._d

    def maximal_coords(self) -> tuple[Fraction, Fraction]:
        return self.a, self.b * self.params.f

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self._b == 0

    def is_integral(self) -> bool:
        """True iff the element lies in the maximal order O_K."""
        return self._a % self._d == 0 and (self._b * self.params.f) % self._d == 0

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "QFElem":
        if isinstance(other, QFElem):
            if other.params is not self.params and other.params != self.params:
                raise ParamsMismatch(f"{self.params} vs {other.params}")
            return other
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return QFElem._raw(other.numerator, 0, other.denominator, self.params)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self._d == o._d:
            return QFElem._raw(self._a + o._a, self._b + o._b, self._d, self.params)
        return QFElem._raw(self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d,
                           self._d * o._d, self.params)

    __radd__ = __add__

    def __neg__(self):
        return QFElem._raw(-self._a, -self._b, self._d, self.params)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.params
        a, b, c, e = self._a, self._b, o._a, o._b
        bd = b * e
        return QFElem._raw(a * c - bd * p.D, a * e + b * c + bd * p.A, self._d * o._d, p)

    __rmul__ = __mul__

    def conj(self) -> "QFElem":
        return QFElem._raw(self._a + self._b * self.params.A, -self._b, self._d, self.params)

    def norm(self) -> Fraction:
        p = self.params
        a, b = self._a, self._b
        return Fraction(a * a + a * b * p.A + b * b * p.D, self._d * self._d)

    def inverse(self) -> "QFElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        p = self.params
        a, b, d = self._a, self._b, self._d
        n = a * a + a * b * p.A + b * b * p.D
        # 1/x = conj(x)/norm(x) with norm(x) = n/d^2
        return QFElem._raw((a + b * p.A) * d, -b * d, n, p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QFElem._raw(1, 0, 1, self.params)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, QFElem):
            return (self._a == other._a and self._b == other._b and self._d == other._d
                    and (self.params is other.params or self.params == other.params))
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return self._b == 0 and self._a == other.numerator and self._d == other.denominator
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d, self.params))

    def __str__(self):
        return format_elem(self)

    def __repr__(self):
        return f"QFElem({format_elem(self)!r}, N={self.params.N})"


def qf_arith(x: QFElem, y: QFElem, op: str) -> QFElem:
    """Dispatch add/sub/mul/div by name."""
    if x.params != y.params:
        raise ParamsMismatch(f"{x.params} vs {y.params}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y.is_zero():
            raise DivisionByZero("division by zero element")
        return x / y
    raise ValueError(f"unknown op {op!r}")


def _fmt_rat(n: int, d: int) -> str:
    g = gcd(n, d)
    n, d = n // g, d // g
    return str(n) if d == 1 else f"{n}/{d}"


def format_elem(x: QFElem) -> str:
    a, b, d = x.triple
    if b == 0:
        return _fmt_rat(a, d)
    sign = "-" if b < 0 else "+"
    return f"{_fmt_rat(a, d)}{sign}{_fmt_rat(abs(b), d)}*w"


_RAT = r"[+-]?\d+(?:/\d+)?"
_ELEM_RE = re.compile(rf"^({_RAT})(?:([+-])({_RAT})\*w)?$")


def _parse_rat(text: str) -> Fraction:
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(text)


def parse_elem(text: str, params: FieldParams) -> QFElem:
    """Parse the textual grammar ``RAT | RAT SIGN RAT "*w"``."""
    m = _ELEM_RE.match(text.replace(" ", ""))
    if not m:
        raise ParseError(f"not a field element: {text!r}")
    a = _parse_rat(m.group(1))
    b = Fraction(0)
    if m.group(2):
        b = _parse_rat(m.group(3))
        if m.group(2) == "-":
            b = -b
    return QFElem(a, b, params)
