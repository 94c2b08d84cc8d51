from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invbargraph import recur
from invbargraph.mpoly import MPoly
from invbargraph.gfseries import (
    NonUnitConstantTermError,
    NonzeroConstantInnerError,
    RationalSeries,
    SingularParameterError,
    check_area_ogf_closed,
    check_area_ogf_recursion,
    check_last_letter_uniformity,
    check_lda_kernel,
    check_total_gfs,
    expand_area_last_ogf,
    expand_area_ogf,
    geometric,
    log_one_minus,
    log_ratio,
    series_from_table,
    total_area_gf,
    total_levels_gf,
)
from invbargraph.reporting import IdentityViolationError

F = Fraction


def series(*coeffs, order=8):
    return RationalSeries(coeffs, order)


# -- ring operations ---------------------------------------------------------------


def test_mul_basic():
    assert (series(1, 1) * series(1, -1)).coeffs[:3] == (F(1), F(0), F(-1))


def test_geometric_self_check():
    assert series(1, -1) * geometric(1, 8) == RationalSeries.one(8)


def test_x_shift():
    ks = RationalSeries([k for k in range(9)], 8)
    shifted = RationalSeries.x(8) * ks
    assert shifted.coeffs[1:] == ks.coeffs[:-1]


def test_inv_of_one_minus_x():
    assert series(1, -1).inv() == geometric(1, 8)


def test_inv_requires_unit():
    with pytest.raises(NonUnitConstantTermError):
        series(0, 1).inv()


def test_log_of_geometric():
    got = geometric(1, 8).log()
    assert got.coeffs == tuple(F(0) if k == 0 else F(1, k) for k in range(9))


def test_log_requires_constant_one():
    with pytest.raises(NonUnitConstantTermError):
        series(2, 1).log()


def test_log_ratio_linear_coefficient():
    y = F(1, 2)
    assert log_ratio(y, 8).coeff(1) == 1 - y


def test_compose_squares():
    geo = geometric(1, 8)
    inner = RationalSeries([0, 0, 1], 8)
    got = geo.compose(inner)
    assert got.coeffs == tuple(F(1) if k % 2 == 0 else F(0) for k in range(9))


def test_compose_identity():
    f = series(3, 1, 4, 1, 5)
    assert f.compose(RationalSeries.x(8)) == f


def test_compose_requires_zero_constant():
    with pytest.raises(NonzeroConstantInnerError):
        series(1, 1).compose(series(1, 1))


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@given(st.lists(rationals, min_size=1, max_size=7))
def test_inv_is_right_inverse(coeffs):
    if coeffs[0] == 0:
        coeffs[0] = F(1)
    s = RationalSeries(coeffs, 6)
    assert s * s.inv() == RationalSeries.one(6)


@given(st.lists(rationals, max_size=6), st.lists(rationals, max_size=6))
def test_log_of_product(rest_a, rest_b):
    a = RationalSeries([1] + rest_a, 6)
    b = RationalSeries([1] + rest_b, 6)
    assert (a * b).log() == a.log() + b.log()


# -- closed-form area OGFs ------------------------------------------------------------


def test_area_ogf_linear_coefficient():
    p = F(1, 2)
    assert expand_area_ogf(p, 6).coeff(1) == p


def test_area_ogf_singular_guard():
    with pytest.raises(SingularParameterError):
        expand_area_ogf(1, 6)
    with pytest.raises(SingularParameterError):
        expand_area_last_ogf(F(1, 2), 2, 6)


def test_area_ogf_matches_table(a_lemma_8):
    p = F(1, 2)
    data = series_from_table(a_lemma_8, 8, {"p": p, "q": 1})
    assert expand_area_ogf(p, 8) == data


def test_area_last_ogf_leading_term():
    p, y = F(1, 3), F(2, 5)
    assert expand_area_last_ogf(p, y, 6).coeff(1) == y * p


def test_area_last_ogf_reduces_at_y_one():
    p = F(-1, 2)
    assert expand_area_last_ogf(p, 1, 8) == expand_area_ogf(p, 8)


@pytest.mark.parametrize("p,y", [(F(1, 2), F(1, 3)), (F(-2, 3), F(3, 2)), (F(1, 4), F(-1, 2))])
def test_area_last_ogf_matches_table(a_lemma_8, p, y):
    assert check_area_ogf_closed(p, y, 8, a_lemma_8).status == "pass"


@pytest.mark.parametrize("p", [F(1, 2), F(-1, 2), F(0), F(2), F(3, 4)])
def test_area_ogf_recursion(a_lemma_8, p):
    assert check_area_ogf_recursion(p, 8, a_lemma_8).status == "pass"


def test_area_ogf_recursion_detects_corruption(a_lemma_8):
    bad = a_lemma_8.with_cell(5, 3, a_lemma_8[5, 3] + MPoly.one())
    with pytest.raises(IdentityViolationError):
        check_area_ogf_recursion(F(1, 2), 8, bad)


# -- kernel identities -----------------------------------------------------------------


@pytest.mark.parametrize(
    "point",
    [
        (F(1), F(1), F(1)),  # rho(x) = 1: a fixed point of the substitution
        (F(1, 3), F(1, 2), F(1, 5)),
        (F(0), F(1), F(1)),
        (F(2), F(-1, 2), F(1, 7)),
        (F(-1, 3), F(3), F(0)),
    ],
)
def test_lda_kernel_points(b_lemma_9, point):
    results = check_lda_kernel(*point, 8, b_lemma_9)
    assert [r.status for r in results] == ["pass", "pass"]


def test_lda_kernel_q_zero_guard():
    with pytest.raises(SingularParameterError):
        check_lda_kernel(1, 0, 1, 4)


def test_lda_kernel_detects_corruption(b_lemma_9):
    bad = b_lemma_9.with_cell(6, 2, b_lemma_9[6, 2] + MPoly.one())
    with pytest.raises(IdentityViolationError):
        check_lda_kernel(F(1, 3), F(1, 2), F(1, 5), 8, bad)


# -- total generating functions ---------------------------------------------------------


PRINTED_AREA_POLYS = {
    # n: n! * coefficient of x^n as a polynomial in y, from the printed expansion
    1: lambda y: y,
    2: lambda y: y * (3 * y + 2),
    3: lambda y: y * (11 * y**2 + 9 * y + 7),
    4: lambda y: 3 * y * (17 * y**3 + 15 * y**2 + 13 * y + 11),
}


@pytest.mark.parametrize("y", [F(1, 2), F(2), F(-1, 3)])
def test_area_gf_printed_series(y):
    s = total_area_gf(y, 4)
    factorial = 1
    for n in range(1, 5):
        factorial *= n
        assert s.coeff(n) * factorial == PRINTED_AREA_POLYS[n](y)


def test_area_gf_singular_at_one():
    with pytest.raises(SingularParameterError):
        total_area_gf(1, 4)
    with pytest.raises(SingularParameterError):
        total_levels_gf(1, 4)


@pytest.mark.parametrize("y", [F(1, 2), F(2), F(-1, 3)])
def test_total_gfs_match_tables(a_lemma_8, b_lemma_9, y):
    results = check_total_gfs(y, 7, a_lemma_8, b_lemma_9)
    assert [r.status for r in results] == ["pass"] * 4


def test_total_gfs_detect_corruption(a_lemma_8, b_lemma_9):
    bad = b_lemma_9.with_cell(4, 1, b_lemma_9[4, 1] * 2)
    with pytest.raises(IdentityViolationError):
        check_total_gfs(F(1, 2), 7, a_lemma_8, bad)


# -- unit-point rows ----------------------------------------------------------------------


def test_last_letter_uniformity(a_lemma_8):
    assert check_last_letter_uniformity(8, a_lemma_8).status == "pass"


def test_last_letter_uniformity_row_shape():
    table = recur.a_table_lemma(4)
    flat = recur.row_poly(table, 4).substitute("p", 1).substitute("q", 1)
    assert flat == sum(
        (MPoly.monomial(6, y=i) for i in range(1, 5)), MPoly.zero()
    )
