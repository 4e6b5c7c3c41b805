"""Prime ideals of O_K, valuations, factored ideals and residue fields.

Class number one is assumed wherever a principal generator is needed.
Integral elements are handled internally as integer pairs (c, e) standing for
c + e*w_K, where w_K generates the maximal order and satisfies
w_K^2 = max_A*w_K - max_D.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .errors import (
    GeneratorNotFound,
    IncompleteSupport,
    NegativeValuation,
    NotIntegral,
    ParseError,
    ZeroElement,
)
from .quadfield import FieldParams, QFElem, parse_elem

TRIAL_DIVISION_BOUND = 10**6


# -- integer helpers -----------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    k = 17
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def padic_val(n: int, p: int) -> int:
    if n == 0:
        raise ZeroElement("p-adic valuation of 0")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def trial_factor(n: int, bound: int = TRIAL_DIVISION_BOUND) -> dict[int, int]:
    """Factor |n| by trial division; the cofactor left above ``bound`` must be prime."""
    n = abs(n)
    if n == 0:
        raise ZeroElement("cannot factor 0")
    out: dict[int, int] = {}
    k = 2
    while k * k <= n and k <= bound:
        while n % k == 0:
            out[k] = out.get(k, 0) + 1
            n //= k
        k += 1 if k == 2 else 2
    if n > 1:
        if k * k <= n:
            raise IncompleteSupport(f"cofactor {n} not factored below bound {bound}")
        out[n] = out.get(n, 0) + 1
    return out


def kronecker(d: int, p: int) -> int:
    """Kronecker symbol (d/p) for a prime p."""
    if p == 2:
        if d % 2 == 0:
            return 0
        return 1 if d % 8 in (1, 7) else -1
    r = pow(d % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


# -- maximal-order integer pairs ------------------------------------------

def _mul(x, y, params: FieldParams):
    c, e = x
    g, h = y
    eh = e * h
    return (c * g - eh * params.max_D, c * h + e * g + eh * params.max_A)


def _conj(x, params: FieldParams):
    return (x[0] + x[1] * params.max_A, -x[1])


def _norm(x, params: FieldParams) -> int:
    c, e = x
    return c * c + c * e * params.max_A + e * e * params.max_D


def _to_pair(x: QFElem) -> tuple[tuple[int, int], int]:
    """Write x = (c + e*w_K)/d with integers c, e and d > 0."""
    a, b, d = x.triple
    return (a, b * x.params.f), d


def _from_pair(pair, params: FieldParams, d: int = 1) -> QFElem:
    return QFElem.from_maximal_coords(Fraction(pair[0], d), Fraction(pair[1], d), params)


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _assoc_key(pair):
    c, e = pair
    return (_sign(c), _sign(e), c, e)


@lru_cache(maxsize=None)
def _unit_pairs(params: FieldParams):
    return tuple(_to_pair(u)[0] for u in params.units)


def _canonical_pair(pair, params: FieldParams):
    return max((_mul(u, pair, params) for u in _unit_pairs(params)), key=_assoc_key)


def canonical_associate(x: QFElem) -> QFElem:
    """Fixed representative of x modulo units of O_K.

    Among the associates u*x, written c + e*w_K on the maximal-order basis,
    pick the one maximising (sign c, sign e, c, e) lexicographically.
    """
    if x.is_zero():
        raise ZeroElement("canonical associate of 0")
    if not x.is_integral():
        raise NotIntegral(f"{x} is not in O_K")
    pair, d = _to_pair(x)
    assert d == 1 or (pair[0] % d == 0 and pair[1] % d == 0)
    pair = (pair[0] // d, pair[1] // d)
    return _from_pair(_canonical_pair(pair, x.params), x.params)


def associated(x: QFElem, y: QFElem) -> bool:
    """True iff x = u*y for a unit u of O_K (x, y nonzero, any field elements)."""
    q = x / y
    return any(q == u for u in x.params.units)


# -- prime ideals ---------------------------------------------------------

@dataclass(frozen=True)
class PrimeIdeal:
    p: int
    kind: str  # "split" | "inert" | "ramified"
    gen: QFElem
    residue_degree: int
    root: int | None = field(default=None, compare=False)  # image of w_K in O_K/P (degree 1)

    @property
    def params(self) -> FieldParams:
        return self.gen.params

    @property
    def ramification(self) -> int:
        return 2 if self.kind == "ramified" else 1

    @property
    def gen_pair(self):
        return _to_pair(self.gen)[0]

    @property
    def residue_size(self) -> int:
        return self.p ** self.residue_degree

    def __str__(self):
        return f"p={self.p};kind={self.kind};gen={self.gen}"

    def __repr__(self):
        return f"PrimeIdeal({self})"

    def sort_key(self):
        return (self.p, tuple(-t for t in _assoc_key(self.gen_pair)))


def _find_root(pair, p: int, params: FieldParams) -> int:
    c, e = pair
    for rho in range(p):
        if (rho * rho - params.max_A * rho + params.max_D) % p == 0 and (c + e * rho) % p == 0:
            return rho
    raise AssertionError(f"no residue root for {pair} mod {p}")


def _make_prime(p: int, kind: str, pair, params: FieldParams) -> PrimeIdeal:
    gen = _from_pair(pair, params)
    if kind == "inert":
        return PrimeIdeal(p, kind, gen, 2, None)
    return PrimeIdeal(p, kind, gen, 1, _find_root(pair, p, params))


@lru_cache(maxsize=None)
def factor_rational_prime(p: int, params: FieldParams, search_bound: int | None = None) -> tuple[PrimeIdeal, ...]:
    """The primes of O_K above p, each with a canonical principal generator."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    k = kronecker(params.disc, p)
    if k == -1:
        return (_make_prime(p, "inert", (p, 0), params),)
    bound = search_bound if search_bound is not None else isqrt(4 * p) + 2
    found = set()
    for e in range(-bound, bound + 1):
        for c in range(-bound, bound + 1):
            if _norm((c, e), params) == p:
                found.add(_canonical_pair((c, e), params))
    if not found:
        raise GeneratorNotFound(f"no element of norm {p} with coordinates below {bound}")
    gens = sorted(found, key=_assoc_key, reverse=True)
    if k == 0:
        return (_make_prime(p, "ramified", gens[0], params),)
    if len(gens) < 2:
        raise GeneratorNotFound(f"only one generator found above split prime {p}")
    return tuple(_make_prime(p, "split", g, params) for g in gens[:2])


def prime_above(p: int, params: FieldParams, gen: QFElem | str | None = None) -> PrimeIdeal:
    """Pick the prime above p, optionally the one generated by ``gen`` (up to units)."""
    primes = factor_rational_prime(p, params)
    if gen is None:
        if len(primes) != 1:
            raise ValueError(f"{p} splits; a generator is needed to choose a prime")
        return primes[0]
    if isinstance(gen, str):
        gen = parse_elem(gen, params)
    for P in primes:
        if associated(gen, P.gen):
            return P
    raise ValueError(f"{gen} does not generate a prime above {p}")


def parse_prime(text: str, params: FieldParams) -> PrimeIdeal:
    """Parse ``p=<int>;kind=<kind>;gen=<ELEM>`` (kind optional, gen optional if unique)."""
    fields = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ParseError(f"bad prime spec component {part!r}")
        k, v = part.split("=", 1)
        fields[k.strip()] = v.strip()
    if "p" not in fields:
        raise ParseError(f"prime spec needs p=...: {text!r}")
    P = prime_above(int(fields["p"]), params, fields.get("gen"))
    if "kind" in fields and fields["kind"] != P.kind:
        raise ParseError(f"prime above {P.p} is {P.kind}, not {fields['kind']}")
    return P


# -- valuations -------------------------------------------------------------

def _val_integral(pair, P: PrimeIdeal) -> int:
    """Valuation of a nonzero integral element given as a maximal-order pair."""
    params = P.params
    p = P.p
    c, e = pair
    g = gcd(c, e)
    v = 0
    if g % p == 0:
        k = padic_val(g, p)
        v += k * P.ramification
        c //= p**k
        e //= p**k
    if P.kind == "inert":
        return v
    pc = _conj(P.gen_pair, params)
    x = (c, e)
    while True:
        t = _mul(x, pc, params)
        if t[0] % p or t[1] % p:
            return v
        x = (t[0] // p, t[1] // p)
        v += 1


def valuation(x: QFElem, P: PrimeIdeal) -> int:
    if x.is_zero():
        raise ZeroElement("valuation of 0")
    pair, d = _to_pair(x)
    vd = padic_val(d, P.p) * P.ramification if d % P.p == 0 else 0
    return _val_integral(pair, P) - vd


# -- factored ideals --------------------------------------------------------

class FactoredIdeal:
    """A fractional ideal as a finite map prime -> nonzero exponent."""

    __slots__ = ("_exps",)

    def __init__(self, exps=None):
        items = {}
        for P, e in (exps.items() if isinstance(exps, dict) else (exps or ())):
            if e:
                items[P] = items.get(P, 0) + e
        self._exps = {P: e for P, e in items.items() if e}

    @classmethod
    def unit(cls) -> "FactoredIdeal":
        return cls()

    def items(self):
        return sorted(self._exps.items(), key=lambda t: t[0].sort_key())

    def d_p(self, P: PrimeIdeal) -> int:
        return self._exps.get(P, 0)

    def is_unit(self) -> bool:
        return not self._exps

    def is_integral(self) -> bool:
        return all(e > 0 for e in self._exps.values())

    def __mul__(self, other: "FactoredIdeal") -> "FactoredIdeal":
        out = dict(self._exps)
        for P, e in other._exps.items():
            out[P] = out.get(P, 0) + e
        return FactoredIdeal(out)

    def __truediv__(self, other: "FactoredIdeal") -> "FactoredIdeal":
        return self * other ** -1

    def __pow__(self, n: int) -> "FactoredIdeal":
        return FactoredIdeal({P: e * n for P, e in self._exps.items()})

    def __eq__(self, other):
        if not isinstance(other, FactoredIdeal):
            return NotImplemented
        return self._exps == other._exps

    def __hash__(self):
        return hash(frozenset(self._exps.items()))

    def generator(self, params: FieldParams) -> QFElem:
        """Product of the prime generators raised to their exponents."""
        out = params.one
        for P, e in self.items():
            out = out * P.gen**e
        return out

    def __str__(self):
        if not self._exps:
            return "(1)"
        return "*".join(f"({P.gen})^{e}" if e != 1 else f"({P.gen})" for P, e in self.items())

    def __repr__(self):
        return f"FactoredIdeal({self})"


def d_p(I: FactoredIdeal, P: PrimeIdeal) -> int:
    return I.d_p(P)


def primes_over(support_hint, params: FieldParams) -> list[PrimeIdeal]:
    out = []
    for p in sorted(set(support_hint)):
        out.extend(factor_rational_prime(p, params))
    return out


def element_ideal(x: QFElem, support_hint) -> FactoredIdeal:
    """Factor x*O_K, given every rational prime dividing its norm."""
    if x.is_zero():
        raise ZeroElement("ideal of 0")
    n = x.norm()
    num, den = n.numerator, n.denominator
    exps = {}
    for P in primes_over(support_hint, x.params):
        v = valuation(x, P)
        if v:
            exps[P] = v
    for p in set(support_hint):
        while num % p == 0:
            num //= p
        while den % p == 0:
            den //= p
    if num != 1 or den != 1:
        raise IncompleteSupport(f"norm of {x} has prime factors outside {sorted(set(support_hint))}")
    return FactoredIdeal(exps)


def norm_support(x: QFElem, bound: int = TRIAL_DIVISION_BOUND) -> set[int]:
    """Rational primes dividing the norm of x (desk-scale trial division)."""
    n = x.norm()
    out = set()
    for m in (n.numerator, n.denominator):
        if m != 1:
            out |= set(trial_factor(m, bound))
    return out


# -- residue fields --------------------------------------------------------

@dataclass(frozen=True)
class ResidueElem:
    """Element of O_K/P: u (degree 1) or u + v*t with t^2 = A t - D (degree 2)."""

    p: int
    u: int
    v: int = 0
    degree: int = 1
    A: int = 0
    D: int = 0

    def _new(self, u, v):
        return ResidueElem(self.p, u % self.p, v % self.p, self.degree, self.A, self.D)

    def _coerce(self, o):
        if isinstance(o, ResidueElem):
            return o
        if isinstance(o, int):
            return self._new(o, 0)
        return NotImplemented

    def __add__(self, o):
        o = self._coerce(o)
        return self._new(self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.u, -self.v)

    def __sub__(self, o):
        o = self._coerce(o)
        return self._new(self.u - o.u, self.v - o.v)

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        vv = self.v * o.v
        return self._new(self.u * o.u - vv * self.D, self.u * o.v + self.v * o.u + vv * self.A)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def __bool__(self):
        return not self.is_zero()

    def __pow__(self, n: int):
        out = self._new(1, 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in residue field")
        return self ** (self.p**self.degree - 2)

    def __truediv__(self, o):
        return self * self._coerce(o).inverse()

    def __rtruediv__(self, o):
        return self._coerce(o) * self.inverse()

    def __eq__(self, o):
        if isinstance(o, int):
            o = self._new(o, 0)
        if not isinstance(o, ResidueElem):
            return NotImplemented
        return (self.p, self.u, self.v, self.degree) == (o.p, o.u, o.v, o.degree)

    def __hash__(self):
        return hash((self.p, self.u, self.v, self.degree))

    def __str__(self):
        return str(self.u) if self.degree == 1 else f"{self.u}+{self.v}t"


def _residue_of_pair(pair, P: PrimeIdeal) -> ResidueElem:
    c, e = pair
    if P.residue_degree == 1:
        return ResidueElem(P.p, (c + e * P.root) % P.p)
    params = P.params
    return ResidueElem(P.p, c % P.p, e % P.p, 2, params.max_A, params.max_D)


def _divide_by_gen_power(pair, P: PrimeIdeal, k: int):
    params = P.params
    pc = _conj(P.gen_pair, params)
    n = _norm(P.gen_pair, params)
    for _ in range(k):
        t = _mul(pair, pc, params)
        assert t[0] % n == 0 and t[1] % n == 0
        pair = (t[0] // n, t[1] // n)
    return pair


def reduce_mod(x: QFElem, P: PrimeIdeal) -> ResidueElem:
    """Image of a P-integral element in the residue field O_K/P."""
    if not x.is_zero() and valuation(x, P) < 0:
        raise NegativeValuation(f"{x} has negative valuation at {P}")
    pair, d = _to_pair(x)
    k = padic_val(d, P.p) * P.ramification if d % P.p == 0 else 0
    num = _divide_by_gen_power(pair, P, k) if not x.is_zero() else (0, 0)
    den = _divide_by_gen_power((d, 0), P, k)
    return _residue_of_pair(num, P) / _residue_of_pair(den, P)


def residue_const(n: int, P: PrimeIdeal) -> ResidueElem:
    return _residue_of_pair((n, 0), P)


# -- principal generators of fractional ideals ---------------------------------

def _lattice_basis(vecs):
    """Basis (g, y), (0, h) of the Z-span of integer pairs."""
    b1, h = (0, 0), 0
    for c, d in vecs:
        a, b = b1
        if c == 0:
            h = gcd(h, d)
            continue
        if a == 0:
            h = gcd(h, b)
            b1 = (c, d)
            continue
        g, s, t = _ext_gcd(a, c)
        leftover = (c // g) * b - (a // g) * d
        h = gcd(h, leftover)
        b1 = (g, s * b + t * d)
    return b1, (0, h)


def _ext_gcd(a: int, b: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _shortest(b1, b2, params: FieldParams):
    """Lagrange reduction under the norm form; returns a shortest nonzero vector."""
    def q(v):
        return _norm(v, params)

    def bil2(u, v):  # twice the bilinear form
        return q((u[0] + v[0], u[1] + v[1])) - q(u) - q(v)

    if q(b1) == 0:
        return b2
    if q(b2) == 0:
        return b1
    while True:
        if q(b1) > q(b2):
            b1, b2 = b2, b1
        m = round(Fraction(bil2(b1, b2), 2 * q(b1)))
        if m == 0:
            return b1
        b2 = (b2[0] - m * b1[0], b2[1] - m * b1[1])


def ideal_generator(gens) -> QFElem:
    """A generator of the fractional ideal spanned by ``gens`` (class number one)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ZeroElement("the zero ideal has no generator")
    params = gens[0].params
    wk = (0, 1)
    pairs, dens = [], []
    for g in gens:
        pair, d = _to_pair(g)
        pairs += [pair, _mul(pair, wk, params)]
        dens += [d, d]
    L = 1
    for d in dens:
        L = L * d // gcd(L, d)
    vecs = [(c * (L // d), e * (L // d)) for (c, e), d in zip(pairs, dens)]
    b1, b2 = _lattice_basis(vecs)
    return _from_pair(_shortest(b1, b2, params), params, L)
