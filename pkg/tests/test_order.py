from hypothesis import given, strategies as st

from cmnet.order import (
    OrderElem, format_order_elem, mult_matrix, ord_divides, ord_enumerate_by_norm, ord_mul,
    parse_order_elem,
)
from cmnet.quadfield import FieldParams

ZI = FieldParams(-1)
Z2 = FieldParams(-2)


def o(a, b, K=Z2):
    return OrderElem(a, b, K)


def test_mul_examples():
    assert ord_mul(o(1, 1), o(0, 1)) == o(-2, 1)
    assert ord_mul(o(3, -4), o(1, 0)) == o(3, -4)
    assert ord_mul(o(2, 1, ZI), o(2, -1, ZI)) == o(5, 0, ZI)


def test_mult_matrix_examples():
    assert mult_matrix(o(1, 0)) == ((1, 0), (0, 1))
    assert mult_matrix(o(0, 1, ZI)) == ((0, -1), (1, 0))
    assert mult_matrix(o(1, 1)) == ((1, -2), (1, 1))


def test_divides_examples():
    assert ord_divides(o(0, 1), o(2, 2)) == o(2, -1)
    assert ord_divides(o(1, 0), o(7, -3)) == o(7, -3)
    assert ord_divides(o(1, 1, ZI), o(3, 0, ZI)) is None


def test_enumeration():
    assert ord_enumerate_by_norm(1, ZI) == [o(1, 0, ZI), o(-1, 0, ZI), o(0, 1, ZI), o(0, -1, ZI)]
    small = ord_enumerate_by_norm(2, Z2)
    assert {o(1, 0), o(-1, 0), o(0, 1), o(0, -1)} <= set(small)
    assert ord_enumerate_by_norm(0, Z2) == []
    norms = [x.norm() for x in ord_enumerate_by_norm(30, Z2)]
    assert norms == sorted(norms)


def test_parse_format():
    assert parse_order_elem("2-1*w", Z2) == o(2, -1)
    assert parse_order_elem("5", Z2) == o(5, 0)
    assert format_order_elem(o(2, -1)) == "2-1*w"


ints = st.integers(-40, 40)
K_any = st.sampled_from([ZI, Z2, FieldParams(-3), FieldParams(-7, 2)])


@given(K_any, ints, ints, ints, ints)
def test_mul_matches_field_and_matrix(K, a, b, c, d):
    x, y = OrderElem(a, b, K), OrderElem(c, d, K)
    p = x * y
    assert p.to_field() == x.to_field() * y.to_field()
    (m11, m12), (m21, m22) = mult_matrix(x)
    assert (m11 * c + m12 * d, m21 * c + m22 * d) == p.vector
    assert p.norm() == x.norm() * y.norm()


@given(K_any, ints, ints, ints, ints)
def test_divides_inverts_multiplication(K, a, b, c, d):
    m, q = OrderElem(a, b, K), OrderElem(c, d, K)
    if m.is_zero():
        return
    assert ord_divides(m, m * q) == q
