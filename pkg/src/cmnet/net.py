"""Rank-2 net polynomials for a base pair (P, [w]P)."""
from __future__ import annotations

import csv
import io

from .curve import INFINITY, BasePair, CurvePoint, _add, _neg, linear_combination
from .divpoly import divpoly_seq
from .errors import DegenerateTransformedPair, InvalidBasePair, TorsionCollision
from .order import OrderElem, ord_mul
from .quadfield import QFElem


class NetLattice:
    """Lazily filled table (a, b) -> Psi_(a,b), computed by a two-axis ladder.

    Row a = 1 is extended in b from the seeds Psi(1,0) = Psi(1,1) = 1 and
    Psi(1,-1) = x(Q) - x(P); columns are then extended in a using
    Psi(v+e) Psi(v-e) = -Psi(v)^2 (x(vP) - x(eP)) with e = (1,0).
    """

    def __init__(self, base: BasePair):
        self.base = base
        self._psi: dict[tuple[int, int], QFElem] = {}
        self._pts: dict[tuple[int, int], CurvePoint] = {(0, 0): INFINITY, (1, 0): base.P, (0, 1): base.Q}
        self._seqP = divpoly_seq(base.curve, base.P)
        self._seqQ = divpoly_seq(base.curve, base.Q)
        one = base.params.one
        self._psi[(1, 0)] = one
        self._psi[(1, 1)] = one
        self._psi[(1, -1)] = base.Q.x - base.P.x

    @property
    def params(self):
        return self.base.params

    # -- points --------------------------------------------------------------
    def point(self, v) -> CurvePoint:
        """v.P = aP + bQ, memoised along the same ladder as the net values."""
        v = tuple(v)
        pts = self._pts
        if v in pts:
            return pts[v]
        a, b = v
        c = self.base.curve.coeffs
        P, Q = self.base.P, self.base.Q
        for nb, shift in (((a - 1, b), P), ((a, b - 1), Q),
                          ((a + 1, b), _neg(c, P)), ((a, b + 1), _neg(c, Q))):
            if nb in pts:
                R = _add(c, pts[nb], shift)
                break
        else:
            R = linear_combination(self.base, v)
        pts[v] = R
        return R

    def x(self, v) -> QFElem:
        R = self.point(v)
        if R.is_infinity:
            raise TorsionCollision(f"{v}.P is the point at infinity")
        return R.x

    # -- net values ----------------------------------------------------------
    def _row_one(self, b: int) -> QFElem:
        memo = self._psi
        xQ = self.base.Q.x
        step = 1 if b > 0 else -1
        for k in range(step, b, step):
            if (1, k + step) in memo:
                continue
            # Psi(1,k+s) Psi(1,k-s) = -Psi(1,k)^2 (x((1,k)P) - x(Q))
            den = memo[(1, k - step)]
            if den.is_zero():
                raise TorsionCollision(f"zero divisor at (1, {k - step})")
            memo[(1, k + step)] = -memo[(1, k)] ** 2 * (self.x((1, k)) - xQ) / den
        return memo[(1, b)]

    def psi(self, v) -> QFElem:
        a, b = v
        if a < 0 or (a == 0 and b < 0):
            return -self.psi((-a, -b))
        if b == 0:
            return self._seqP.psi(a)
        if a == 0:
            return self._seqQ.psi(b)
        memo = self._psi
        if (a, b) in memo:
            return memo[(a, b)]
        self._row_one(b)
        xP = self.base.P.x
        k = 1
        while (k + 1, b) in memo:
            k += 1
        while k < a:
            # Psi(k+1, b) Psi(k-1, b) = -Psi(k, b)^2 (x((k,b)P) - x(P))
            prev = self.psi((k - 1, b))
            if prev.is_zero():
                raise TorsionCollision(f"zero divisor at {(k - 1, b)}")
            memo[(k + 1, b)] = -memo[(k, b)] ** 2 * (self.x((k, b)) - xP) / prev
            k += 1
        return memo[(a, b)]

    def phi(self, v) -> QFElem:
        a, b = v
        return self.psi(v) ** 2 * self.base.P.x - self.psi((a + 1, b)) * self.psi((a - 1, b))

    def dump_csv(self, box: int) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "b", "psi", "phi"])
        for a in range(-box, box + 1):
            for b in range(-box, box + 1):
                w.writerow([a, b, str(self.psi((a, b))), str(self.phi((a, b)))])
        return buf.getvalue()


def net_psi(L: NetLattice, v) -> QFElem:
    return L.psi(tuple(v))


def net_phi(L: NetLattice, v) -> QFElem:
    return L.phi(tuple(v))


def _add2(u, v):
    return (u[0] + v[0], u[1] + v[1])


def _sub2(u, v):
    return (u[0] - v[0], u[1] - v[1])


def net_axiom_terms(L: NetLattice, p, q, r, s):
    W = L.psi
    t1 = W(_add2(_add2(p, q), s)) * W(_sub2(p, q)) * W(_add2(r, s)) * W(r)
    t2 = W(_add2(_add2(q, r), s)) * W(_sub2(q, r)) * W(_add2(p, s)) * W(p)
    t3 = W(_add2(_add2(r, p), s)) * W(_sub2(r, p)) * W(_add2(q, s)) * W(q)
    return t1, t2, t3


def verify_net_axiom(L: NetLattice, p, q, r, s) -> bool:
    t1, t2, t3 = net_axiom_terms(L, p, q, r, s)
    return (t1 + t2 + t3).is_zero()


def transformed_lattice(L: NetLattice, alpha: OrderElem) -> NetLattice:
    """Net on the pair ([alpha]P, [alpha*w]P)."""
    w = OrderElem(0, 1, alpha.params)
    P2 = L.point(alpha.vector)
    Q2 = L.point(ord_mul(alpha, w).vector)
    try:
        B2 = BasePair(P2, Q2, L.base.curve, L.base.params)
    except InvalidBasePair as exc:
        raise DegenerateTransformedPair(str(exc)) from exc
    return NetLattice(B2)


def change_of_basis_sides(L: NetLattice, alpha: OrderElem, beta: OrderElem, L2: NetLattice | None = None):
    if L2 is None:
        L2 = transformed_lattice(L, alpha)
    c, d = beta.a, beta.b
    w = OrderElem(0, 1, alpha.params)
    one_w = OrderElem(1, 1, alpha.params)
    lhs = L.psi(ord_mul(alpha, beta).vector)
    rhs = (L2.psi(beta.vector)
           * L.psi(alpha.vector) ** (c * c - c * d)
           * L.psi(ord_mul(alpha, w).vector) ** (d * d - c * d)
           * L.psi(ord_mul(alpha, one_w).vector) ** (c * d))
    return lhs, rhs


def verify_change_of_basis(L: NetLattice, alpha: OrderElem, beta: OrderElem) -> bool:
    lhs, rhs = change_of_basis_sides(L, alpha, beta)
    return lhs == rhs
