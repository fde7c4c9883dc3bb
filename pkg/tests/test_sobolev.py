"""Sobolev forms: moments, exact orthogonality, Gauss rules, quadrature."""

import math
from fractions import Fraction as F

import pytest

from sobhyp.exactnum import Poly, pochhammer
from sobhyp.families import bold_l, bold_p, make_member, script_l, script_p
from sobhyp.sobolev import (
    QuadRule,
    WeightSpec,
    a_n_normalized,
    gauss_rule,
    jacobi_weight,
    laguerre_weight,
    moment,
    sobolev_form_for,
    sobolev_inner_exact,
    sobolev_inner_quadrature,
    verify_orthogonality,
)


def test_weight_validation():
    with pytest.raises(ValueError):
        laguerre_weight(0)
    with pytest.raises(ValueError):
        jacobi_weight(1, -2)
    with pytest.raises(ValueError):
        WeightSpec("cauchy", (F(1),))


def test_moments_closed_forms():
    w = laguerre_weight(F(7, 3))
    for k in range(8):
        assert moment(w, k) == pochhammer(F(7, 3), k)
    wj = jacobi_weight(F(1, 2), F(3, 2))
    for k in range(8):
        assert moment(wj, k) == pochhammer(F(1, 2), k) / pochhammer(F(2), k)
        assert isinstance(moment(wj, k), F)  # exact even at k = 0
    assert moment(w, 0) == 1
    assert isinstance(moment(w, 0), F)
    with pytest.raises(ValueError):
        moment(w, -1)


def test_moment_uniform_case():
    # jacobi(1, 1) is the uniform density on (0, 1): moments 1/(k+1).
    w = jacobi_weight(1, 1)
    for k in range(6):
        assert moment(w, k) == F(1, k + 1)


def test_sobolev_form_requires_integer_operator_index():
    with pytest.raises(ValueError):
        sobolev_form_for(script_l(1, F(3, 2)))


def test_diagonal_closed_form_script_l():
    assert a_n_normalized(script_l(2, 3), 2) == F(4, 3)
    for q, r in [(F(1, 2), 2), (F(2), 4)]:
        spec = script_l(q, r)
        for n in range(6):
            want = F(math.factorial(r - 1)) ** 2 * math.factorial(n) / pochhammer(q, n)
            assert a_n_normalized(spec, n) == want


def test_diagonal_closed_form_script_p():
    a, b, c = F(1), F(2), F(3)
    spec = script_p(a, b, c)
    assert a_n_normalized(spec, 0) == F(math.factorial(2)) ** 2
    for n in range(1, 6):
        want = (
            F(math.factorial(2)) ** 2
            * math.factorial(n)
            * pochhammer(b, n)
            / (pochhammer(a, n) * (2 * n + a + b - 1) * pochhammer(a + b, n - 1))
        )
        assert a_n_normalized(spec, n) == want


def test_exact_orthogonality_reports():
    for spec in [script_l(F(1, 2), 2), script_p(F(1), F(1), 2), bold_l(F(1), [2, 3])]:
        report = verify_orthogonality(spec, 6)
        assert report.ok, report.failures
        assert report.pairs_checked == 28


def test_exact_inner_product_values():
    spec = script_l(2, 3)
    form = sobolev_form_for(spec)
    y2 = make_member(spec, 2)
    y3 = make_member(spec, 3)
    assert sobolev_inner_exact(form, y2, y3) == 0
    assert sobolev_inner_exact(form, y2, y2) == F(4, 3)
    assert sobolev_inner_exact(form, y3, y2) == 0  # symmetric


def test_degenerate_r_equal_one_is_classical():
    # r = 1 lowers by the identity, so the form is plainly the weighted L2
    # product and members reduce to normalized classical polynomials.
    report = verify_orthogonality(script_l(F(5, 2), 1), 6)
    assert report.ok


def test_bold_p_orthogonality_composed():
    report = verify_orthogonality(bold_p(F(1), F(2), [2, 2]), 5)
    assert report.ok


def test_gauss_rule_one_point_laguerre():
    rule = gauss_rule(laguerre_weight(1), 1)
    assert rule.nodes == (1.0,)
    assert rule.weights == (1.0,)


def test_gauss_rule_two_point_laguerre():
    rule = gauss_rule(laguerre_weight(1), 2)
    assert rule.nodes[0] == pytest.approx(2 - math.sqrt(2), abs=1e-14)
    assert rule.nodes[1] == pytest.approx(2 + math.sqrt(2), abs=1e-14)
    assert rule.weights[0] == pytest.approx((2 + math.sqrt(2)) / 4, abs=1e-14)
    assert rule.weights[1] == pytest.approx((2 - math.sqrt(2)) / 4, abs=1e-14)


def test_gauss_rule_symmetric_jacobi():
    # a = b: the density is symmetric about 1/2, so nodes pair up.
    rule = gauss_rule(jacobi_weight(2, 2), 5)
    for x, y in zip(rule.nodes, reversed(rule.nodes)):
        assert x == pytest.approx(1 - y, abs=1e-13)
    assert rule.nodes[2] == pytest.approx(0.5, abs=1e-13)


@pytest.mark.parametrize(
    "weight",
    [
        laguerre_weight(F(1, 2)),
        laguerre_weight(1),
        laguerre_weight(F(7, 3)),
        jacobi_weight(F(1, 2), F(1, 2)),  # a+b = 1 exercises the special beta_1
        jacobi_weight(1, F(3, 2)),
        jacobi_weight(3, 1),
        jacobi_weight(F(1), F(1, 2)),
    ],
)
@pytest.mark.parametrize("npoints", [1, 2, 3, 5, 8, 13])
def test_gauss_rule_reproduces_moments(weight, npoints):
    rule = gauss_rule(weight, npoints)
    for k in range(2 * npoints):
        got = sum(w * x**k for x, w in zip(rule.nodes, rule.weights))
        want = float(moment(weight, k))
        assert got == pytest.approx(want, rel=1e-11), (weight, npoints, k)


def test_quad_rule_invariants():
    for weight, inside in [
        (laguerre_weight(F(3, 2)), lambda x: x > 0),
        (jacobi_weight(F(1, 2), 2), lambda x: 0 < x < 1),
    ]:
        rule = gauss_rule(weight, 9)
        assert isinstance(rule, QuadRule)
        assert rule.npoints == 9
        assert all(w > 0 for w in rule.weights)
        assert all(inside(x) for x in rule.nodes)
        assert all(a < b for a, b in zip(rule.nodes, rule.nodes[1:]))
        assert sum(rule.weights) == pytest.approx(1.0, rel=1e-13)


def test_gauss_rule_rejects_empty():
    with pytest.raises(ValueError):
        gauss_rule(laguerre_weight(1), 0)


def test_quadrature_matches_exact_inner_product():
    for spec in [script_l(F(7, 3), 3), script_p(F(1, 2), F(3), 2)]:
        form = sobolev_form_for(spec)
        for n in range(7):
            yn = make_member(spec, n)
            for m in range(n + 1):
                ym = make_member(spec, m)
                exact = float(sobolev_inner_exact(form, yn, ym))
                quad = sobolev_inner_quadrature(form, yn, ym)
                if exact == 0.0:
                    assert abs(quad) <= 1e-8
                else:
                    assert quad == pytest.approx(exact, rel=1e-10)


def test_quadrature_point_override():
    spec = script_l(2, 2)
    form = sobolev_form_for(spec)
    y4 = make_member(spec, 4)
    exact = float(sobolev_inner_exact(form, y4, y4))
    # More points than necessary must not change the answer materially.
    assert sobolev_inner_quadrature(form, y4, y4, npoints=20) == pytest.approx(exact, rel=1e-10)


def test_quadrature_zero_operand_shortcut():
    form = sobolev_form_for(script_l(1, 2))
    assert sobolev_inner_quadrature(form, Poly(), Poly([1])) == 0.0
