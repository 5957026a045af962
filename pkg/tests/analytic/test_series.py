"""
tests/analytic/test_series.py

Test cases for q-expansions: eta quotients, Euler products, the chi_3
Eisenstein series and the coefficient file format
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from converse.analytic import (
    FourierSeries,
    LocalFactorSpec,
    eisenstein_chi3,
    eta_quotient,
    euler_expand,
    load_form,
    local_factors_from,
)
from converse.analytic.series import pentagonal, series_power
from converse.exceptions import (
    InvalidFormSpec,
    MissingPrime,
    NonIntegralLeadingPower,
)

F11_HEAD = [0, 1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, -2, 4]


def test_pentagonal_numbers():
    """prod (1 - q^n) = 1 - q - q^2 + q^5 + q^7 - ..."""
    assert pentagonal(12) == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]


def test_series_power():
    """Powers of the Euler product; r = -1 gives the partition numbers"""
    euler = pentagonal(10)
    assert series_power(euler, -1) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert series_power(euler, 0) == [1] + [0] * 10
    assert series_power(euler, 1) == euler


def test_delta_coefficients(delta_series):
    """Ramanujan tau values"""
    assert delta_series.weight == 12
    assert delta_series.level == 1
    assert list(delta_series.coeffs[:6]) == [0, 1, -24, 252, -1472, 4830]
    assert delta_series[10] == -115920


def test_f11_coefficients(f11_series):
    """eta(z)^2 eta(11z)^2 is the newform of level 11"""
    assert f11_series.weight == 2
    assert f11_series.level == 11
    assert f11_series.label == "eta:1^2,11^2"
    assert list(f11_series.coeffs[: len(F11_HEAD)]) == F11_HEAD
    assert f11_series.constant_term == 0


def test_f11_is_multiplicative(f11_series):
    """a_{mn} = a_m a_n for coprime m, n and a_{11m} = a_m"""
    for m in range(1, 30):
        assert f11_series[11 * m] == f11_series[m]
    for m, n in ((2, 3), (3, 5), (4, 7), (5, 13), (8, 9)):
        assert f11_series[m * n] == f11_series[m] * f11_series[n]


def test_eta_quotient_errors():
    """Weight, leading power and K checks"""
    with pytest.raises(NonIntegralLeadingPower):
        eta_quotient({1: 4}, 10)
    with pytest.raises(InvalidFormSpec):
        eta_quotient({1: 1}, 10)
    with pytest.raises(InvalidFormSpec):
        eta_quotient({1: 2, 11: 2}, 0)
    with pytest.raises(InvalidFormSpec):
        eta_quotient({0: 24}, 10)
    with pytest.raises(InvalidFormSpec):
        eta_quotient({1: -24}, 10)


def test_euler_expansion_matches_eta_product(f11_series):
    """Expanding the Hecke eigenvalues read off f11 reproduces f11"""
    spec = local_factors_from(f11_series, 200)
    assert 11 not in spec.ap
    expanded = euler_expand(spec, 200)
    assert expanded.coeffs == f11_series.truncate(200).coeffs
    assert expanded[11] == 1
    assert expanded.label == "euler:11"


def test_euler_expansion_needs_every_prime():
    """A missing a_p is reported"""
    spec = LocalFactorSpec(level=11, weight=2, ap={2: -2, 3: -1})
    with pytest.raises(MissingPrime):
        euler_expand(spec, 10)
    assert euler_expand(spec, 4).coeffs == (0, 1, -2, -1, 2)


def test_local_factor_spec_values():
    """a_p accepts ints, fraction strings and floats; weight must be even"""
    spec = LocalFactorSpec(level=1, weight=12, ap={2: "-3/4", 3: 0.5, "5": 7})
    assert spec.ap == {2: Fraction(-3, 4), 3: Fraction(1, 2), 5: Fraction(7)}
    assert spec.model_dump(mode="json")["ap"] == {"2": "-3/4", "3": "1/2", "5": "7"}
    with pytest.raises(ValidationError):
        LocalFactorSpec(level=1, weight=3)


def test_eisenstein_chi3():
    """a_n = chi(n) sigma(n) on Gamma0(9)"""
    E = eisenstein_chi3(12)
    assert (E.weight, E.level, E.label) == (2, 9, "eis-chi3")
    assert list(E.coeffs[:8]) == [0, 1, -3, 0, 7, -6, 0, 8]
    assert E[12] == 0


def test_fourier_series_validation():
    """Weight must be positive and even; indexing stops at K"""
    with pytest.raises(InvalidFormSpec):
        FourierSeries(3, 1, (0, 1))
    f = FourierSeries(2, 11, (0, 1, "-2", Fraction(-1)))
    assert f.K == 3
    assert f[2] == -2
    with pytest.raises(IndexError):
        f[4]
    assert list(f.as_array()) == [0.0, 1.0, -2.0, -1.0]
    assert f.truncate(1).coeffs == (0, 1)


def test_series_file(tmp_path, f11_series):
    """Exported coefficients load back as the same series"""
    path = tmp_path / "f11.json"
    f11_series.truncate(50).dump(path)
    loaded = FourierSeries.load(path)
    assert loaded == f11_series.truncate(50)
    assert load_form(f"series:{path}", 20).K == 20


def test_load_form_specifiers(tmp_path):
    """Aliases, eta, Eisenstein and Euler specifiers"""
    assert load_form("delta", 10).coeffs[2] == -24
    assert load_form("f11", 10).level == 11
    assert load_form("eta:1^2,11^2", 10, level=11).coeffs[:4] == (0, 1, -2, -1)
    assert load_form("eis-chi3", 10).level == 9

    spec = tmp_path / "f11.json"
    spec.write_text('{"level": 11, "weight": 2, "ap": {"2": -2, "3": -1, "5": 1, "7": -2}}')
    assert load_form(f"euler:{spec}", 10).coeffs == (0, 1, -2, -1, 2, 1, 2, -2, 0, -2, -2)


@pytest.mark.parametrize(
    "spec, level",
    [("eis-chi3", 11), ("theta", None), ("eta:", None), ("eta:1^x", None), ("euler:/nonexistent.json", None)],
)
def test_load_form_errors(spec, level):
    """Unknown or unreadable specifiers"""
    with pytest.raises(InvalidFormSpec):
        load_form(spec, 10, level)
