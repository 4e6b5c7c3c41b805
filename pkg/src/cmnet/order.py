"""The order Z[w] used to index nets: products, multiplication matrices and
exact divisibility."""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import isqrt

from .errors import ParamsMismatch, ParseError, ZeroDivisor
from .quadfield import FieldParams, QFElem


@dataclass(frozen=True)
class OrderElem:
    """a + b*w in Z[w]."""

    a: int
    b: int
    params: FieldParams

    @property
    def vector(self) -> tuple[int, int]:
        return (self.a, self.b)

    def _check(self, other: "OrderElem"):
        if other.params != self.params:
            raise ParamsMismatch(f"{self.params} vs {other.params}")

    def __add__(self, other: "OrderElem") -> "OrderElem":
        self._check(other)
        return OrderElem(self.a + other.a, self.b + other.b, self.params)

    def __sub__(self, other: "OrderElem") -> "OrderElem":
        self._check(other)
        return OrderElem(self.a - other.a, self.b - other.b, self.params)

    def __neg__(self) -> "OrderElem":
        return OrderElem(-self.a, -self.b, self.params)

    def __mul__(self, other):
        if isinstance(other, int):
            return OrderElem(self.a * other, self.b * other, self.params)
        return ord_mul(self, other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def norm(self) -> int:
        p = self.params
        return self.a * self.a + self.a * self.b * p.A + self.b * self.b * p.D

    def to_field(self) -> QFElem:
        return QFElem(self.a, self.b, self.params)

    def __str__(self):
        return format_order_elem(self)


def ord_mul(x: OrderElem, y: OrderElem) -> OrderElem:
    x._check(y)
    p = x.params
    a, b, c, d = x.a, x.b, y.a, y.b
    return OrderElem(a * c - b * d * p.D, a * d + b * c + b * d * p.A, p)


def mult_matrix(x: OrderElem) -> tuple[tuple[int, int], tuple[int, int]]:
    """Matrix of multiplication by x acting on coordinate column vectors."""
    p = x.params
    return ((x.a, -x.b * p.D), (x.b, x.a + x.b * p.A))


def ord_divides(m: OrderElem, x: OrderElem) -> OrderElem | None:
    """Return q with x = m*q in Z[w], or None when no such q exists."""
    if m.is_zero():
        raise ZeroDivisor("divisibility test by zero")
    m._check(x)
    (t11, t12), (t21, t22) = mult_matrix(m)
    det = t11 * t22 - t12 * t21
    # Cramer's rule on T q = x
    qa = t22 * x.a - t12 * x.b
    qb = -t21 * x.a + t11 * x.b
    if qa % det or qb % det:
        return None
    return OrderElem(qa // det, qb // det, m.params)


def _enum_key(x: OrderElem):
    return (x.norm(), abs(x.b), abs(x.a), -x.a, -x.b)


def ord_enumerate_by_norm(bound: int, params: FieldParams) -> list[OrderElem]:
    """All nonzero elements of norm <= bound in a fixed deterministic order.

    Within one norm, elements with smaller |b| come first, then smaller |a|,
    then positive before negative; so the units of Z[i] come out as
    1, -1, i, -i.
    """
    if bound < 1:
        return []
    A, D = params.A, params.D
    # norm = (a + A b/2)^2 + (D - A^2/4) b^2, with 4D - A^2 > 0
    bmax = isqrt(4 * bound // (4 * D - A * A)) + 1
    out = []
    for b in range(-bmax, bmax + 1):
        amax = isqrt(bound) + abs(A * b) + 1
        for a in range(-amax, amax + 1):
            if a == 0 and b == 0:
                continue
            x = OrderElem(a, b, params)
            if x.norm() <= bound:
                out.append(x)
    out.sort(key=_enum_key)
    return out


_ORD_RE = re.compile(r"^([+-]?\d+)(?:([+-])([+-]?\d+)\*w)?$")


def parse_order_elem(text: str, params: FieldParams) -> OrderElem:
    m = _ORD_RE.match(text.replace(" ", ""))
    if not m:
        raise ParseError(f"not an order element: {text!r}")
    a = int(m.group(1))
    b = 0
    if m.group(2):
        b = int(m.group(3)) * (-1 if m.group(2) == "-" else 1)
    return OrderElem(a, b, params)


def format_order_elem(x: OrderElem) -> str:
    sign = "-" if x.b < 0 else "+"
    return f"{x.a}{sign}{abs(x.b)}*w"
