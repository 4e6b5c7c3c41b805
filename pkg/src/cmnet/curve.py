"""Weierstrass curves over K, exact points, reduction modulo primes and the
E_0 / E_n filtration."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    BoundExceeded,
    InvalidBasePair,
    NonIntegralModel,
    NotOnCurve,
    SingularCurve,
    SingularPoint,
)
from .order import OrderElem, ord_enumerate_by_norm
from .primes import PrimeIdeal, factor_rational_prime, is_prime, reduce_mod, valuation
from .quadfield import FieldParams, QFElem


@dataclass(frozen=True)
class CurvePoint:
    """An affine point (x, y), or the point at infinity when x is None.

    Coordinates may be field elements or residue-field elements; the group
    law below only uses ring operations, division and ``is_zero``.
    """

    x: object = None
    y: object = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = CurvePoint()


def _add(coeffs, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    a1, a2, a3, a4, a6 = coeffs
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        den = 2 * y1 + a1 * x1 + a3
        if (y1 + y2 + a1 * x2 + a3).is_zero():
            return INFINITY
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) / den
    else:
        dx = x2 - x1
        lam = (y2 - y1) / dx
        nu = (y1 * x2 - y2 * x1) / dx
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(x3, y3)


def _neg(coeffs, P: CurvePoint) -> CurvePoint:
    if P.is_infinity:
        return P
    a1, _, a3, _, _ = coeffs
    return CurvePoint(P.x, -P.y - a1 * P.x - a3)


def _mul(coeffs, P: CurvePoint, n: int) -> CurvePoint:
    if n < 0:
        return _mul(coeffs, _neg(coeffs, P), -n)
    out = INFINITY
    base = P
    while n:
        if n & 1:
            out = _add(coeffs, out, base)
        n >>= 1
        if n:
            base = _add(coeffs, base, base)
    return out


def _equation(coeffs, x, y):
    a1, a2, a3, a4, a6 = coeffs
    return y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)


@dataclass(frozen=True)
class Curve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with integral coefficients."""

    a1: QFElem
    a2: QFElem
    a3: QFElem
    a4: QFElem
    a6: QFElem

    def __post_init__(self):
        ps = {c.params for c in self.coeffs}
        if len(ps) != 1:
            raise ValueError("curve coefficients live in different fields")
        if not all(c.is_integral() for c in self.coeffs):
            raise NonIntegralModel("Weierstrass coefficients must lie in O_K")
        if self.disc.is_zero():
            raise SingularCurve("discriminant is zero")

    @classmethod
    def from_coeffs(cls, params: FieldParams, a1=0, a2=0, a3=0, a4=0, a6=0) -> "Curve":
        def conv(c):
            return c if isinstance(c, QFElem) else QFElem(c, 0, params)
        return cls(conv(a1), conv(a2), conv(a3), conv(a4), conv(a6))

    @property
    def params(self) -> FieldParams:
        return self.a1.params

    @property
    def coeffs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @cached_property
    def b2(self) -> QFElem:
        return self.a1 * self.a1 + 4 * self.a2

    @cached_property
    def b4(self) -> QFElem:
        return 2 * self.a4 + self.a1 * self.a3

    @cached_property
    def b6(self) -> QFElem:
        return self.a3 * self.a3 + 4 * self.a6

    @cached_property
    def b8(self) -> QFElem:
        a1, a2, a3, a4, a6 = self.coeffs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @cached_property
    def disc(self) -> QFElem:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def contains(self, P: CurvePoint) -> bool:
        return P.is_infinity or _equation(self.coeffs, P.x, P.y).is_zero()

    def point(self, x, y) -> CurvePoint:
        P = CurvePoint(x, y)
        if not self.contains(P):
            raise NotOnCurve(f"{P} is not on the curve")
        return P

    def neg(self, P: CurvePoint) -> CurvePoint:
        return _neg(self.coeffs, P)

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        return point_add(self, P, Q)

    def mul(self, P: CurvePoint, n: int) -> CurvePoint:
        self._require(P)
        return _mul(self.coeffs, P, n)

    def _require(self, *pts):
        for P in pts:
            if not self.contains(P):
                raise NotOnCurve(f"{P} is not on the curve")

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def point_add(E: Curve, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    E._require(P, Q)
    return _add(E.coeffs, P, Q)


@dataclass(frozen=True)
class BasePair:
    """The pair (P, Q) where Q is the image of P under the endomorphism [w]."""

    P: CurvePoint
    Q: CurvePoint
    curve: Curve
    params: FieldParams

    def __post_init__(self):
        if self.params != self.curve.params:
            raise InvalidBasePair("field parameters differ from the curve's")
        if self.P.is_infinity or self.Q.is_infinity:
            raise InvalidBasePair("base points must be affine")
        self.curve._require(self.P, self.Q)
        if self.P.x == self.Q.x:
            raise InvalidBasePair("base points must have distinct x-coordinates")


def linear_combination(B: BasePair, v) -> CurvePoint:
    """a*P + b*Q for v = (a, b)."""
    a, b = v
    c = B.curve.coeffs
    return _add(c, _mul(c, B.P, a), _mul(c, B.Q, b))


# -- reduction -------------------------------------------------------------

def reduce_curve(E: Curve, prime: PrimeIdeal):
    out = []
    for c in E.coeffs:
        if not c.is_zero() and valuation(c, prime) < 0:
            raise NonIntegralModel(f"coefficient {c} is not integral at {prime}")
        out.append(reduce_mod(c, prime))
    return tuple(out)


def reduce_point(E: Curve, P: CurvePoint, prime: PrimeIdeal) -> CurvePoint:
    reduce_curve(E, prime)
    if P.is_infinity or (not P.x.is_zero() and valuation(P.x, prime) < 0):
        return INFINITY
    return CurvePoint(reduce_mod(P.x, prime), reduce_mod(P.y, prime))


def is_singular_reduction(E: Curve, P: CurvePoint, prime: PrimeIdeal) -> bool:
    R = reduce_point(E, P, prime)
    if R.is_infinity:
        return False
    a1, a2, a3, a4, _ = reduce_curve(E, prime)
    x, y = R.x, R.y
    fx = a1 * y - 3 * x * x - 2 * a2 * x - a4
    fy = 2 * y + a1 * x + a3
    return fx.is_zero() and fy.is_zero()


def filtration_level(E: Curve, P: CurvePoint, prime: PrimeIdeal) -> int:
    """Largest n >= 1 with v(x(P)) <= -2n, or 0 when x(P) is integral."""
    if P.is_infinity:
        raise ValueError("the point at infinity lies in every level")
    if is_singular_reduction(E, P, prime):
        raise SingularPoint(f"{P} is singular modulo {prime}")
    if P.x.is_zero():
        return 0
    v = valuation(P.x, prime)
    return max(0, -v // 2)


def annihilator_generator(B: BasePair, prime: PrimeIdeal, norm_bound: int) -> OrderElem:
    """First r, in enumeration order, with [r]P nonsingular modulo the prime."""
    for r in ord_enumerate_by_norm(norm_bound, B.params):
        R = linear_combination(B, r.vector)
        if R.is_infinity or not is_singular_reduction(B.curve, R, prime):
            return r
    raise BoundExceeded(f"no annihilator of norm <= {norm_bound} at {prime}")


# -- checking that Q really is [w]P -----------------------------------------

def _residue_order(coeffs, R: CurvePoint, q: int) -> int:
    bound = q + 2 * int(q**0.5) + 2
    S = R
    for m in range(1, bound + 1):
        if S.is_infinity:
            return m
        S = _add(coeffs, S, R)
    raise AssertionError("residue point order exceeds the Hasse bound")


def omega_check_prime(B: BasePair, start: int = 3) -> PrimeIdeal:
    """Smallest prime of good reduction, prime to 2*disc(K)*f, where both base points reduce nonsingularly."""
    E, params = B.curve, B.params
    p = start
    while True:
        if is_prime(p) and (2 * params.disc * params.f) % p:
            for prime in factor_rational_prime(p, params):
                if valuation(E.disc, prime) == 0:
                    return prime
        p += 1


def check_omega_action(B: BasePair, prime: PrimeIdeal | None = None) -> bool:
    """Necessary test that Q = [w]P for the normalised endomorphism [w].

    At a good prime, some multiple R = [m]P lies in the kernel of reduction,
    and there the formal group gives z([w]R) = w*z(R) + O(z(R)^2) with
    z = -x/y.  This also separates w from its conjugate.
    """
    if prime is None:
        prime = omega_check_prime(B)
    E = B.curve
    red = reduce_curve(E, prime)
    m = _residue_order(red, reduce_point(E, B.P, prime), prime.residue_size)
    R = E.mul(B.P, m)
    S = E.mul(B.Q, m)
    if R.is_infinity or S.is_infinity:
        # torsion base point, the test says nothing
        return True
    if not reduce_point(E, S, prime).is_infinity:
        return False
    zR = -R.x / R.y
    zS = -S.x / S.y
    k = valuation(zR, prime)
    diff = zS - B.params.omega * zR
    return diff.is_zero() or valuation(diff, prime) >= 2 * k
