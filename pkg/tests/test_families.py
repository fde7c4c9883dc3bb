"""Family construction: terminating series, closed-form leads, float twin."""

from fractions import Fraction as F

import pytest

from sobhyp.exactnum import Poly, pochhammer
from sobhyp.families import (
    FamilySpec,
    PoleError,
    bold_l,
    bold_p,
    jacobi,
    jacobi_shifted,
    laguerre,
    leading_coefficient,
    make_member,
    member_coeffs_float,
    script_l,
    script_p,
    terminating_series,
)


def test_script_l_frozen_example():
    assert make_member(script_l(3, 3), 2) == Poly([1, F(-2, 9), F(1, 72)])


def test_script_l_general_small_degrees():
    q, r = F(7, 3), F(2)
    assert make_member(script_l(q, r), 0) == Poly([1])
    assert make_member(script_l(q, r), 1) == Poly([1, -1 / (q * r)])


def test_script_p_degree_one_matches_closed_form():
    for a, b, c in [(F(1), F(2), F(3)), (F(1, 2), F(1, 2), F(2))]:
        got = make_member(script_p(a, b, c), 1)
        assert got == Poly([1, -(a + b) / (a * c)])


def test_script_p_quadratic_example():
    # 3F2 with n = 2 at (3, 3, 3): 1 - 14x/9 + 7x^2/9
    assert make_member(script_p(3, 3, 3), 2) == Poly([1, F(-14, 9), F(7, 9)])


def test_laguerre_includes_binomial_prefactor():
    assert make_member(laguerre(0), 2) == Poly([1, -2, F(1, 2)])
    # L_2^(1): binom(3,2) * 1F1(-2; 2; x) = 3 - 3x + x^2/2
    assert make_member(laguerre(1), 2) == Poly([3, -3, F(1, 2)])


def test_jacobi_legendre_case():
    assert make_member(jacobi(0, 0), 2) == Poly([F(-1, 2), 0, F(3, 2)])
    assert make_member(jacobi(0, 0), 3) == Poly([0, F(-3, 2), 0, F(5, 2)])


def test_jacobi_shifted_is_jacobi_at_mapped_argument():
    spec_s = jacobi_shifted(F(1, 2), F(3, 2))
    spec_j = jacobi(F(1, 2), F(3, 2))
    for n in range(6):
        shifted = make_member(spec_s, n)
        plain = make_member(spec_j, n)
        # shifted(x) = plain(1 - 2x) as polynomials
        assert shifted == plain(Poly([1, -2]))


def test_bold_families_with_empty_extra_slots():
    # boldL(q) with no r-slots is the 1F1 normalized form; likewise boldP.
    q = F(2)
    one_f_one = make_member(bold_l(q, []), 3)
    assert one_f_one == terminating_series([-3], [q], 3)
    a, b = F(1), F(2)
    two_f_one = make_member(bold_p(a, b, []), 3)
    assert two_f_one == terminating_series([-3, 3 - 1 + a + b], [a], 3)


def test_bold_reduces_to_script():
    assert make_member(bold_l(2, [3]), 5) == make_member(script_l(2, 3), 5)
    assert make_member(bold_p(1, 2, [3]), 5) == make_member(script_p(1, 2, 3), 5)


@pytest.mark.parametrize(
    "spec",
    [
        script_l(F(1, 2), 4),
        script_p(F(7, 3), F(1), F(5)),
        bold_l(F(1), [2, 3]),
        bold_p(F(1, 2), F(3), [2, 2]),
        laguerre(F(3, 2)),
        jacobi(F(-1, 2), F(1, 2)),
        jacobi_shifted(F(0), F(5)),
    ],
)
@pytest.mark.parametrize("n", [0, 1, 2, 5, 12, 25])
def test_members_have_exact_degree_n(spec, n):
    assert make_member(spec, n).degree == n


@pytest.mark.parametrize(
    "spec",
    [
        script_l(F(1, 2), 4),
        script_p(F(7, 3), F(1), F(5)),
        bold_l(F(1), [2, 3]),
        bold_p(F(1, 2), F(3), [2, 2]),
        laguerre(F(3, 2)),
        jacobi(F(-1, 2), F(1, 2)),
        jacobi_shifted(F(0), F(5)),
    ],
)
@pytest.mark.parametrize("n", [0, 1, 3, 7, 11])
def test_leading_coefficient_matches_expansion(spec, n):
    assert leading_coefficient(spec, n) == make_member(spec, n).lead


def test_terminating_series_requires_minus_n_upper():
    with pytest.raises(ValueError):
        terminating_series([F(1)], [F(2)], 3)
    # n = 0 with another upper parameter passing through zero is legal
    assert terminating_series([0, 0, 1], [F(1, 2), 2], 0) == Poly([1])


def test_terminating_series_pole_detection():
    with pytest.raises(PoleError):
        terminating_series([-3, 1], [F(-1), 2], 3)
    with pytest.raises(PoleError):
        terminating_series([-2, 1], [0, 2], 2)
    # a pole sitting beyond the needed terms is harmless
    assert terminating_series([-1, 1], [F(-5), 2], 1).degree == 1


def test_spec_validation():
    with pytest.raises(ValueError):
        script_l(0, 2)
    with pytest.raises(ValueError):
        script_p(1, -1, 2)
    with pytest.raises(ValueError):
        laguerre(-1)
    with pytest.raises(ValueError):
        FamilySpec("scriptL", (F(1),))
    with pytest.raises(ValueError):
        FamilySpec("nonsense", (F(1),))
    with pytest.raises(TypeError):
        script_l(0.5, 2)  # floats must go through the float path


def test_negative_member_index_rejected():
    with pytest.raises(ValueError):
        make_member(script_l(1, 2), -1)


def test_float_path_agrees_with_exact():
    cases = [
        ("scriptL", [2.0, 3.0], script_l(2, 3)),
        ("scriptP", [0.5, 3.0, 2.0], script_p(F(1, 2), 3, 2)),
        ("boldL", [1.0, 2.0, 3.0], bold_l(1, [2, 3])),
        ("laguerre", [1.5], laguerre(F(3, 2))),
        ("jacobi", [0.5, 0.5], jacobi(F(1, 2), F(1, 2))),
        ("jacobi_shifted", [0.5, 0.5], jacobi_shifted(F(1, 2), F(1, 2))),
    ]
    for kind, params, spec in cases:
        for n in [0, 1, 4, 9]:
            approx = member_coeffs_float(kind, params, n)
            exact = make_member(spec, n)
            assert len(approx) == n + 1
            for k, got in enumerate(approx):
                want = float(exact.coefficient(k))
                assert got == pytest.approx(want, rel=1e-12, abs=1e-15), (kind, n, k)


def test_float_path_validation():
    with pytest.raises(ValueError):
        member_coeffs_float("scriptL", [-1.0, 2.0], 3)
    with pytest.raises(ValueError):
        member_coeffs_float("mystery", [1.0], 3)


def test_specs_are_hashable_and_comparable():
    assert script_l(2, 3) == script_l(F(2), F(6, 2))
    assert len({script_l(2, 3), script_l(2, 3), script_l(2, 4)}) == 2


def test_leading_coefficient_closed_forms_spotcheck():
    # scriptL: (-n)_n / ((q)_n (r)_n)
    q, r, n = F(3), F(3), 2
    assert leading_coefficient(script_l(q, r), n) == pochhammer(F(-n), n) / (
        pochhammer(q, n) * pochhammer(r, n)
    )
    assert leading_coefficient(script_l(3, 3), 2) == F(1, 72)
