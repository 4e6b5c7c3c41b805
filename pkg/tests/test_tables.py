"""Reference-table reproduction: every printed entry either matches the
computation or is refuted by a check that does not use the library's own value."""
import pytest

from oracles import affine_neg, index_point, on_curve
from table_data import (
    COLUMNS, TABLE1_ERRATA, TABLE2_ERRATA, computed_row, mismatches, table1_rows, table2_rows,
)
from cmnet.primes import associated
from cmnet.theorems import quadratic_form_F

CASES = {1: (table1_rows, TABLE1_ERRATA), 2: (table2_rows, TABLE2_ERRATA)}


@pytest.fixture(scope="module")
def insts(inst1, inst2):
    return {1: inst1, 2: inst2}


@pytest.mark.xfail(strict=True, reason="the printed tables contain misprints, see TABLE*_ERRATA")
@pytest.mark.parametrize("n", [1, 2])
def test_literal_reproduction(insts, n):
    rows, _ = CASES[n]
    assert mismatches(insts[n], rows()) == set()


@pytest.mark.parametrize("n", [1, 2])
def test_only_known_errata_differ(insts, n):
    rows, errata = CASES[n]
    assert mismatches(insts[n], rows()) == set(errata)


@pytest.mark.parametrize("n", [1, 2])
def test_rows_cover_all_columns(n):
    rows, _ = CASES[n]
    width = 1 + len(COLUMNS) - (1 if n == 1 else 0)
    assert all(len(r) == width for r in rows())


def _refute(inst, row, col, kind):
    """True when the printed entry is shown wrong without trusting the computed value."""
    coeffs = inst.curve.coeffs
    base = inst.base
    P, Q = (base.P.x, base.P.y), (base.Q.x, base.Q.y)
    v, x, y = row[0], row[1], row[2]
    printed = dict(zip(COLUMNS, row[1:]))[col]
    if kind == "off-curve":
        return not on_curve(coeffs, (x, y))
    if kind == "negated-point":
        ref = index_point(coeffs, P, Q, v)
        return on_curve(coeffs, (x, y)) and (x, y) == affine_neg(coeffs, ref) and (x, y) != ref
    if kind == "phi-vs-row":
        # Phi / Psi^2 must be x; the row's own x and Psi disagree with the printed Phi
        return printed != x * row[4] ** 2
    if kind == "psihat-vs-row":
        # Psihat is F * Psi up to units
        return not associated(printed, row[5] * row[4])
    if kind == "b-vs-row":
        # B^2 generates the denominator ideal of the row's own x
        mine = computed_row(inst, quadratic_form_F(inst.lattice, inst.primes), v)
        return mine["x"] == x and not associated(printed, mine["B"])
    if kind == "psi-ladder":
        return printed != _ladder_psi(inst, v)
    raise AssertionError(kind)


def _ladder_psi(inst, v):
    """Psi from neighbouring printed-and-verified entries via the row relation
    Psi(a, k+1) Psi(a, k-1) = -Psi(a, k)^2 (x(a, k) - x(Q))."""
    a, b = v
    rows = {r[0]: r for r in (table1_rows() if inst.params.N == -1 else table2_rows())}
    psi = lambda u: rows[u][4]  # noqa: E731
    xQ = inst.base.Q.x
    k = b - 1
    below = psi((a, k - 1)) if (a, k - 1) in rows else inst.params.one
    return -psi((a, k)) ** 2 * (rows[(a, k)][1] - xQ) / below


@pytest.mark.parametrize("n", [1, 2])
def test_each_erratum_is_refuted_independently(insts, n):
    rows, errata = CASES[n]
    by_index = {r[0]: r for r in rows()}
    for (v, col), kind in errata.items():
        assert _refute(insts[n], by_index[v], col, kind), (v, col, kind)


def test_ladder_oracle_agrees_with_printed_neighbours(inst1, inst2):
    # the relation reproduces an entry both tables print correctly ...
    rows1 = {r[0]: r for r in table1_rows()}
    assert _ladder_psi(inst1, (3, 1)) == rows1[(3, 1)][4]
    # ... and gives the computed value at the refuted entries
    assert _ladder_psi(inst1, (3, 2)) == inst1.lattice.psi((3, 2))
    assert _ladder_psi(inst2, (1, 2)) == inst2.lattice.psi((1, 2))


def test_doubling_sign_by_tangent_line(inst2):
    coeffs = inst2.curve.coeffs
    P = (inst2.base.P.x, inst2.base.P.y)
    K = inst2.params
    assert index_point(coeffs, P, P, (2, 0)) == (K.one * 5 / 4, K.one * -7 / 8)
