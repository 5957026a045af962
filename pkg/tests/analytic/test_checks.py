"""
tests/analytic/test_checks.py

Test cases for point evaluation, slash invariance, Hecke eigenvalues, the
Fricke sign and constant terms at cusps
"""

import math

import pytest

from converse.analytic import (
    check_invariance,
    check_level_shape,
    cusp_constant_term,
    cusp_spec,
    cusp_specs,
    eisenstein_chi3,
    evaluate,
    fricke_check,
    hecke_eigen_check,
    lemma6_gamma,
    sample_points,
    slash_eval,
    tail_bound,
)
from converse.exact_linalg import (
    P,
    canonicalize,
    eval_matrix_expr,
    fricke,
    in_gamma0,
    lower_translation,
    m_two,
)
from converse.exceptions import (
    InconsistentLevel,
    InvalidCuspData,
    InvalidLevelShape,
    NotPrime,
    PrecisionUnreachable,
)

TOL = 1e-8


@pytest.fixture(scope="module")
def eisenstein():
    return eisenstein_chi3(400)


def test_evaluate_reports_tail(f11_series):
    """Value with a truncation bound; lower half-plane is refused"""
    result = evaluate(f11_series, complex(0.1, 0.5))
    assert result.tail < 1e-100
    assert abs(result.value) > 0
    assert tail_bound(f11_series, 0.0) == math.inf
    with pytest.raises(PrecisionUnreachable):
        evaluate(f11_series, complex(0.1, -0.5))


def test_f11_vanishes_at_fricke_fixed_point(f11_series):
    """f|H = -f forces f(i/sqrt(11)) = 0"""
    z0 = complex(0, 1 / math.sqrt(11))
    assert abs(evaluate(f11_series, z0).value) < 1e-10
    z = complex(0.2, 0.4)
    lhs = slash_eval(f11_series, fricke(11), z, TOL).value
    assert abs(lhs + evaluate(f11_series, z).value) < TOL


def test_slash_eval_refuses_large_tail(f11_series):
    """A point mapped too close to the real axis cannot be certified"""
    with pytest.raises(PrecisionUnreachable) as exc_info:
        slash_eval(f11_series, m_two(11), complex(0.3, 0.001), TOL)
    assert "tail" in exc_info.value.context


def test_sample_points_balance_heights():
    """Points sit over -d/c at height sqrt(det)/|c|"""
    M2 = m_two(11)
    points = sample_points(M2)
    assert len(points) == 5
    for z in points:
        assert z.imag == pytest.approx(1 / 11)
    assert points[2].real == pytest.approx(-6 / 11)
    assert all(z.imag == 0.5 for z in sample_points(P, 3))


@pytest.mark.parametrize("expr", ["P", "M2", "M(3)", "W", "M2 M(3)^-1 P"])
def test_f11_invariance(f11_series, expr):
    """f11 is invariant under Gamma0(11)"""
    gamma = eval_matrix_expr(expr, 11)
    assert in_gamma0(gamma, 11)
    report = check_invariance(f11_series, gamma, tol=TOL)
    assert report.passed
    assert report.max_residual < TOL
    assert len(report.points) == 5


def test_invariance_fails_outside_the_group(f11_series):
    """W_5 is not in Gamma0(11)"""
    report = check_invariance(f11_series, lower_translation(5), tol=TOL)
    assert not report.passed
    assert report.max_residual > 1e-3


def test_delta_invariance(delta_series):
    """Delta is invariant under S"""
    report = check_invariance(delta_series, canonicalize(0, -1, 1, 0), tol=TOL)
    assert report.passed


@pytest.mark.parametrize("p, eigenvalue", [(2, -2.0), (3, -1.0), (5, 1.0)])
def test_f11_hecke_eigenvalues(f11_series, p, eigenvalue):
    """T_p f = a_p f in weight 2"""
    report = hecke_eigen_check(f11_series, p, TOL)
    assert report.passed
    assert report.estimate_real == pytest.approx(eigenvalue, abs=1e-9)
    assert abs(report.estimate_imag) < 1e-9
    assert report.expected == pytest.approx(eigenvalue)


def test_delta_hecke_eigenvalue(delta_series):
    """The slash-normalized T_2 eigenvalue of Delta is tau(2)/2^5"""
    report = hecke_eigen_check(delta_series, 2, TOL)
    assert report.passed
    assert report.estimate_real == pytest.approx(-0.75, abs=1e-9)


def test_hecke_argument_errors(f11_series):
    """p must be a prime not dividing the level"""
    with pytest.raises(NotPrime):
        hecke_eigen_check(f11_series, 4)
    with pytest.raises(InconsistentLevel):
        hecke_eigen_check(f11_series, 11)


def test_fricke_signs(f11_series, delta_series, eisenstein):
    """f11 and the chi_3 series have sign -1, Delta has +1"""
    report = fricke_check(f11_series, tol=TOL)
    assert report.sign == -1
    assert report.passed
    assert report.ratio_real == pytest.approx(-1.0, abs=1e-9)

    assert fricke_check(delta_series, tol=TOL).sign == 1
    report = fricke_check(eisenstein, tol=TOL)
    assert report.sign == -1
    assert report.passed


def test_f11_vanishes_at_both_cusps(f11_series):
    """Level 11 has cusps infinity and 0"""
    for r in (11, 1):
        report = cusp_constant_term(f11_series, cusp_spec(11, r), tol=TOL)
        assert report.vanishes
        assert report.modulus < 1e-9


def test_eisenstein_constant_terms(eisenstein):
    """The chi_3 Eisenstein series vanishes at infinity and 0 but not at 1/3"""
    assert cusp_constant_term(eisenstein, cusp_spec(9, 9), tol=TOL).vanishes
    assert cusp_constant_term(eisenstein, cusp_spec(9, 1), tol=TOL).vanishes
    report = cusp_constant_term(eisenstein, cusp_spec(9, 3), tol=TOL)
    assert not report.vanishes
    assert report.modulus > 0.01
    assert report.cusp == "1/3"
    assert report.width == 3


def test_cusp_parameters_checked(f11_series):
    """Too few samples or a non-positive height"""
    cusp = cusp_spec(11, 11)
    with pytest.raises(InvalidCuspData):
        cusp_constant_term(f11_series, cusp, samples=4)
    with pytest.raises(InvalidCuspData):
        cusp_constant_term(f11_series, cusp, height=0.0)
    with pytest.raises(InvalidCuspData):
        cusp_spec(11, 3)


def test_cusp_specs():
    """Cusps 1/r for r | N with labels and widths"""
    specs = cusp_specs(14)
    assert [s.label for s in specs] == ["0", "1/2", "1/7", "infinity"]
    assert [s.width for s in specs] == [14, 7, 2, 1]
    with pytest.raises(InvalidLevelShape):
        check_level_shape(9)
    with pytest.raises(InvalidLevelShape):
        check_level_shape(32)
    check_level_shape(8)


def test_lemma6_gamma():
    """gamma * [1,0;ar,1] = [1,b;-r,d] with gamma in Gamma0(N)"""
    solution = lemma6_gamma(14, 7, 1)
    assert solution.d == 1
    assert solution.gamma == canonicalize(1, 0, -14, 1)

    solution = lemma6_gamma(14, 7, 1, d=15)
    assert (solution.b, solution.d) == (-2, 15)
    assert solution.gamma.entries == (15, -2, -112, 15)
    assert solution.gamma * canonicalize(1, 0, 7, 1) == canonicalize(1, -2, -7, 15)

    for N, r, a in ((15, 3, 1), (15, 5, 2), (23, 1, 4), (10, 2, 3)):
        solution = lemma6_gamma(N, r, a)
        assert in_gamma0(solution.gamma, N)
        assert solution.gamma * canonicalize(1, 0, a * r, 1) == canonicalize(
            1, solution.b, -r, solution.d
        )


def test_lemma6_rejects_bad_data():
    """Congruences that cannot hold"""
    with pytest.raises(InvalidCuspData):
        lemma6_gamma(14, 7, 2)
    with pytest.raises(InvalidCuspData):
        lemma6_gamma(14, 7, 1, d=8)
    with pytest.raises(InvalidCuspData):
        lemma6_gamma(12, 2, 1)


def test_lemma6_sweep():
    """Every admissible (N, r, a) up to level 23 gives an exact solution"""
    checked = 0
    for N in range(5, 24):
        for r in (r for r in range(1, N + 1) if N % r == 0 and math.gcd(r, N // r) == 1):
            Q = N // r
            for a in range(-6, 7):
                if math.gcd(a * r, Q) != 1:
                    continue
                solution = lemma6_gamma(N, r, a)
                assert in_gamma0(solution.gamma, N)
                assert solution.gamma * canonicalize(1, 0, a * r, 1) == canonicalize(
                    1, solution.b, -r, solution.d
                )
                checked += 1
    assert checked >= 100
