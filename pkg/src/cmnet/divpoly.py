"""Division polynomials psi_n, phi_n evaluated at a point."""
from __future__ import annotations

from functools import lru_cache

from .curve import Curve, CurvePoint
from .errors import PreconditionError, TorsionCollision
from .quadfield import QFElem


class DivPolySeq:
    """Memoised psi_n(P) for one curve and one affine point."""

    def __init__(self, E: Curve, P: CurvePoint):
        if P.is_infinity:
            raise ValueError("division polynomials need an affine point")
        self.E, self.P = E, P
        x, y = P.x, P.y
        b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
        psi2 = 2 * y + E.a1 * x + E.a3
        psi3 = 3 * x**4 + b2 * x**3 + 3 * b4 * x * x + 3 * b6 * x + b8
        psi4 = psi2 * (2 * x**6 + b2 * x**5 + 5 * b4 * x**4 + 10 * b6 * x**3 + 10 * b8 * x * x
                       + (b2 * b8 - b4 * b6) * x + (b4 * b8 - b6 * b6))
        one = E.params.one
        self._memo: dict[int, QFElem] = {0: E.params.zero, 1: one, 2: psi2, 3: psi3, 4: psi4}

    def psi(self, n: int) -> QFElem:
        if n < 0:
            return -self.psi(-n)
        memo = self._memo
        if n in memo:
            return memo[n]
        # collect the indices the doubling recurrence needs, then fill bottom-up
        need, stack = set(), [n]
        while stack:
            k = stack.pop()
            if k in memo or k in need:
                continue
            need.add(k)
            m = k // 2
            deps = (m - 2, m - 1, m, m + 1, m + 2) if k % 2 == 0 else (m - 1, m, m + 1, m + 2)
            stack.extend(d for d in deps if d not in memo)
        for k in sorted(need):
            m = k // 2
            if k % 2:
                memo[k] = memo[m + 2] * memo[m] ** 3 - memo[m - 1] * memo[m + 1] ** 3
            else:
                psi2 = memo[2]
                if psi2.is_zero():
                    raise TorsionCollision("P is 2-torsion, the even recurrence divides by psi_2")
                memo[k] = memo[m] * (memo[m + 2] * memo[m - 1] ** 2 - memo[m - 2] * memo[m + 1] ** 2) / psi2
        return memo[n]

    def phi(self, n: int) -> QFElem:
        return self.P.x * self.psi(n) ** 2 - self.psi(n + 1) * self.psi(n - 1)


@lru_cache(maxsize=64)
def divpoly_seq(E: Curve, P: CurvePoint) -> DivPolySeq:
    return DivPolySeq(E, P)


def psi_n(E: Curve, P: CurvePoint, n: int) -> QFElem:
    return divpoly_seq(E, P).psi(n)


def phi_n(E: Curve, P: CurvePoint, n: int) -> QFElem:
    return divpoly_seq(E, P).phi(n)


def verify_eds_recurrence(seq: DivPolySeq, n: int, m: int, r: int) -> bool:
    if not n > m > r >= 1:
        raise PreconditionError(f"need n > m > r >= 1, got {(n, m, r)}")
    # W(n+m) W(n-m) W(r)^2 = W(n+r) W(n-r) W(m)^2 - W(m+r) W(m-r) W(n)^2
    p = seq.psi
    lhs = p(n + m) * p(n - m) * p(r) ** 2
    rhs = p(n + r) * p(n - r) * p(m) ** 2 - p(m + r) * p(m - r) * p(n) ** 2
    return lhs == rhs
