"""Normalised local heights at nonsingular points and the height identities
they satisfy."""
from __future__ import annotations

from fractions import Fraction

from .curve import Curve, CurvePoint, is_singular_reduction
from .errors import NotAnnihilating, PreconditionError, SingularBase, SingularPoint
from .net import NetLattice
from .order import OrderElem, ord_mul
from .primes import PrimeIdeal, valuation
from .quadfield import QFElem

INF = float("inf")


def val(x: QFElem, prime: PrimeIdeal):
    """Valuation with v(0) = +infinity."""
    return INF if x.is_zero() else valuation(x, prime)


def lambda_tilde(E: Curve, P: CurvePoint, prime: PrimeIdeal) -> Fraction:
    if P.is_infinity:
        raise PreconditionError("height of the point at infinity")
    if is_singular_reduction(E, P, prime):
        raise SingularPoint(f"{P} is singular modulo {prime}")
    v = val(P.x, prime)
    return Fraction(max(-v, 0), 2) if v != INF else Fraction(0)


def _require_nonsingular(E: Curve, pts, prime: PrimeIdeal):
    for P in pts:
        if P.is_infinity:
            raise PreconditionError("a point in the identity is the point at infinity")
        if is_singular_reduction(E, P, prime):
            raise SingularBase(f"{P} is singular modulo {prime}")


def quasi_parallelogram_sides(E: Curve, P: CurvePoint, Q: CurvePoint, prime: PrimeIdeal):
    S, T = E.add(P, Q), E.add(P, E.neg(Q))
    _require_nonsingular(E, (P, Q, S, T), prime)
    lam = lambda R: lambda_tilde(E, R, prime)  # noqa: E731
    lhs = lam(S) + lam(T)
    rhs = 2 * lam(P) + 2 * lam(Q) + valuation(P.x - Q.x, prime)
    return lhs, rhs


def verify_quasi_parallelogram(E: Curve, P: CurvePoint, Q: CurvePoint, prime: PrimeIdeal) -> bool:
    lhs, rhs = quasi_parallelogram_sides(E, P, Q, prime)
    return lhs == rhs


def height_net_sides(L: NetLattice, v, prime: PrimeIdeal):
    E, B = L.base.curve, L.base
    a, b = v
    V = L.point(v)
    _require_nonsingular(E, (B.P, B.Q, L.point((1, 1)), V), prime)
    lam = lambda R: lambda_tilde(E, R, prime)  # noqa: E731
    lP, lQ, lPQ = lam(B.P), lam(B.Q), lam(L.point((1, 1)))
    lhs = lam(V)
    rhs = a * a * lP + b * b * lQ + a * b * (lPQ - lP - lQ) + valuation(L.psi(v), prime)
    return lhs, rhs


def verify_height_net_identity(L: NetLattice, v, prime: PrimeIdeal) -> bool:
    lhs, rhs = height_net_sides(L, v, prime)
    return lhs == rhs


def g_value(L: NetLattice, z, prime: PrimeIdeal) -> int:
    """min(2 v(Psi_z), v(Phi_z)), or 0 when [z]P = O."""
    v = z.vector if isinstance(z, OrderElem) else tuple(z)
    if L.point(v).is_infinity:
        return 0
    g = min(2 * val(L.psi(v), prime), val(L.phi(v), prime))
    return int(g)


def mu_triple(L: NetLattice, r: OrderElem, prime: PrimeIdeal) -> tuple[int, int, int]:
    """(g_r, g_{rw}, g_{r(1+w)}) for an annihilating r."""
    R = L.point(r.vector)
    if not R.is_infinity and is_singular_reduction(L.base.curve, R, prime):
        raise NotAnnihilating(f"[{r}]P is singular modulo {prime}")
    w = OrderElem(0, 1, r.params)
    return (g_value(L, r, prime),
            g_value(L, ord_mul(r, w), prime),
            g_value(L, ord_mul(r, OrderElem(1, 1, r.params)), prime))
