"""Elliptic nets indexed by imaginary quadratic orders, with exact arithmetic."""
from .curve import BasePair, Curve, CurvePoint, INFINITY
from .instances import Instance, example_instance, load_instance
from .net import NetLattice
from .order import OrderElem
from .primes import FactoredIdeal, PrimeIdeal, valuation
from .quadfield import FieldParams, QFElem, parse_elem
from .theorems import g_direct, g_formula_bad, g_formula_good, quadratic_form_F

__all__ = [
    "BasePair", "Curve", "CurvePoint", "INFINITY", "Instance", "example_instance", "load_instance",
    "NetLattice", "OrderElem", "FactoredIdeal", "PrimeIdeal", "valuation", "FieldParams", "QFElem",
    "parse_elem", "g_direct", "g_formula_bad", "g_formula_good", "quadratic_form_F",
]
