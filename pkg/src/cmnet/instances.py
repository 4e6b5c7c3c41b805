"""Loading a configured instance: field, curve, base pair, support and the
derived objects every command needs."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from importlib import resources

from .config import Entry, convert, parse_config_text, read_config
from .curve import BasePair, Curve, CurvePoint, annihilator_generator, check_omega_action
from .errors import CMNetError, ConfigError
from .net import NetLattice
from .order import OrderElem
from .primes import PrimeIdeal, is_prime, primes_over
from .quadfield import FieldParams, QFElem, parse_elem
from .theorems import M_ideal, bad_primes, base_singular


@dataclass(frozen=True, eq=False)
class Instance:
    name: str
    base: BasePair
    support: tuple[int, ...]
    box: int = 3
    norm_bound: int = 20

    @property
    def params(self) -> FieldParams:
        return self.base.params

    @property
    def curve(self) -> Curve:
        return self.base.curve

    @cached_property
    def lattice(self) -> NetLattice:
        return NetLattice(self.base)

    @cached_property
    def primes(self) -> list[PrimeIdeal]:
        return primes_over(self.support, self.params)

    @cached_property
    def bad(self) -> list[PrimeIdeal]:
        return bad_primes(self.base, self.support)

    @cached_property
    def good_for_base(self) -> list[PrimeIdeal]:
        """Support primes at which P and [w]P are both nonsingular."""
        return [p for p in self.primes if not base_singular(self.base, p)]

    @cached_property
    def singular_primes(self) -> list[PrimeIdeal]:
        return [p for p in self.primes if base_singular(self.base, p)]

    def annihilator(self, prime: PrimeIdeal) -> OrderElem:
        return annihilator_generator(self.base, prime, self.norm_bound)

    @cached_property
    def M(self) -> OrderElem:
        return M_ideal(self.base, self.bad, self.norm_bound)

    def elem(self, text: str) -> QFElem:
        return parse_elem(text, self.params)


def _prime_list(text: str) -> tuple[int, ...]:
    out = tuple(sorted({int(t) for t in text.replace(",", " ").split()}))
    for p in out:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
    return out


def build_instance(cfg: dict[str, dict[str, Entry]], check_omega: bool = True) -> Instance:
    field = cfg["field"]
    N = convert(field["N"], int)
    f = convert(field["f"], int) if "f" in field else 1
    try:
        params = FieldParams(N, f)
    except ValueError as exc:
        raise ConfigError(str(exc), field["N"].line) from exc
    el = lambda e: convert(e, lambda s: parse_elem(s, params))  # noqa: E731
    curve_cfg = cfg.get("curve", {})
    coeffs = []
    for k in ("a1", "a2", "a3", "a4", "a6"):
        c = el(curve_cfg[k]) if k in curve_cfg else params.zero
        if not c.is_integral():
            raise ConfigError(f"{k} = {c} is not integral", curve_cfg[k].line)
        coeffs.append(c)
    first_line = min((e.line for e in curve_cfg.values()), default=None)
    try:
        curve = Curve(*coeffs)
    except CMNetError as exc:
        raise ConfigError(f"invalid curve: {exc}", first_line) from exc
    pt = cfg["point"]
    P = CurvePoint(el(pt["P.x"]), el(pt["P.y"]))
    Q = CurvePoint(el(pt["omegaP.x"]), el(pt["omegaP.y"]))
    for label, R in (("P", P), ("omegaP", Q)):
        if not curve.contains(R):
            raise ConfigError(f"{label} = {R} is not on the curve", pt[f"{label}.x"].line)
    try:
        base = BasePair(P, Q, curve, params)
    except CMNetError as exc:
        raise ConfigError(f"invalid base pair: {exc}", pt["P.x"].line) from exc
    if check_omega and not check_omega_action(base):
        raise ConfigError("omegaP is not the image of P under [w] (formal-group test failed)",
                          pt["omegaP.x"].line)
    sweep = cfg.get("sweep", {})
    box = convert(sweep["box"], int) if "box" in sweep else 3
    nb = convert(sweep["norm_bound"], int) if "norm_bound" in sweep else 20
    support = convert(cfg["support"]["primes"], _prime_list)
    name = cfg.get("instance", {}).get("name")
    return Instance(name.value if name else "instance", base, support, box, nb)


def load_instance(path) -> Instance:
    return build_instance(read_config(path))


def load_instance_text(text: str) -> Instance:
    return build_instance(parse_config_text(text))


def example_config_text(n: int) -> str:
    return resources.files("cmnet").joinpath("data", f"example{n}.cfg").read_text()


def example_instance(n: int) -> Instance:
    """The shipped Q(i) (n = 1) or Q(sqrt(-2)) (n = 2) instance."""
    return load_instance_text(example_config_text(n))
