"""Exact polynomial arithmetic and the rising factorial."""

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from sobhyp.exactnum import Poly, as_rational, pochhammer

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
polys = st.lists(rationals, max_size=8).map(Poly)


def test_pochhammer_values():
    assert pochhammer(F(5), 0) == 1
    assert pochhammer(F(3), 2) == 12
    assert pochhammer(F(1, 2), 3) == F(15, 8)
    assert pochhammer(F(-5, 2), 2) == F(15, 4)
    assert pochhammer(F(-2), 3) == 0  # passes through zero
    assert pochhammer(F(1), 5) == 120


def test_pochhammer_type_follows_input():
    assert isinstance(pochhammer(F(1, 2), 2), F)
    assert isinstance(pochhammer(0.5, 2), float)


def test_pochhammer_rejects_negative_order():
    with pytest.raises(ValueError):
        pochhammer(F(1), -1)


def test_pochhammer_shift_recurrence():
    for c in [F(1, 3), F(2), F(-7, 2)]:
        for k in range(6):
            assert pochhammer(c, k + 1) == pochhammer(c, k) * (c + k)


def test_as_rational_rejects_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("7/3") == F(7, 3)
    assert as_rational(4) == 4


def test_zero_polynomial_degree_is_none():
    assert Poly().degree is None
    assert Poly([0, 0, 0]).degree is None
    assert Poly().is_zero
    assert not Poly()


def test_trailing_zeros_are_stripped():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])


def test_lead_of_zero_polynomial_raises():
    with pytest.raises(ValueError):
        Poly().lead


def test_monomial():
    assert Poly.monomial(3, F(1, 2)) == Poly([0, 0, 0, F(1, 2)])
    assert Poly.monomial(0) == Poly([1])
    with pytest.raises(ValueError):
        Poly.monomial(-1)


def test_basic_arithmetic():
    p = Poly([1, 2, 3])
    q = Poly([0, -2])
    assert p + q == Poly([1, 0, 3])
    assert p - p == Poly()
    assert p * q == Poly([0, -2, -4, -6])
    assert 2 * p == Poly([2, 4, 6])
    assert p * F(1, 3) == Poly([F(1, 3), F(2, 3), 1])
    assert (1 - Poly([0, 1])) == Poly([1, -1])
    assert Poly([1, 1]) ** 2 == Poly([1, 2, 1])


def test_derivative():
    p = Poly([5, 3, 0, 2])  # 5 + 3x + 2x^3
    assert p.derivative() == Poly([3, 0, 6])
    assert p.derivative(2) == Poly([0, 12])
    assert p.derivative(3) == Poly([12])
    assert p.derivative(4) == Poly()
    assert p.derivative(0) == p
    with pytest.raises(ValueError):
        p.derivative(-1)


def test_evaluation_types():
    p = Poly([1, -2, 1])  # (x-1)^2
    assert p(F(3, 2)) == F(1, 4)
    assert isinstance(p(F(3, 2)), F)
    assert p(3.0) == pytest.approx(4.0)
    assert p(1 + 1j) == pytest.approx(-1 + 0j)
    assert Poly()(F(7)) == 0


def test_evaluation_at_poly_composes():
    p = Poly([0, 0, 1])  # x^2
    inner = Poly([1, 1])  # 1 + x
    assert p(inner) == Poly([1, 2, 1])


def test_immutability():
    p = Poly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (F(9),)


def test_hashable():
    assert hash(Poly([1, 2])) == hash(Poly([1, 2, 0]))
    assert len({Poly([1]), Poly([1]), Poly([2])}) == 2


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r


@given(polys, polys)
def test_degree_of_product_adds(p, q):
    if p.is_zero or q.is_zero:
        assert (p * q).is_zero
    else:
        assert (p * q).degree == p.degree + q.degree
        assert (p * q).lead == p.lead * q.lead


@given(polys, polys)
def test_derivative_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(polys, polys, rationals)
def test_evaluation_is_a_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
