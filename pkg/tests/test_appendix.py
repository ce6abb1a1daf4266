import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from perturbed_lsystem import (
    DegenerateDenominator,
    InvalidKappa,
    chi1_coefficients,
    chi2_coefficients,
    chi_coefficients,
    coupling_coefficient,
    imA_factor,
)

KAPPAS = np.linspace(0.0, 0.99, 100)
unit = st.floats(0, 2 * math.pi).map(lambda t: cmath.exp(1j * t))
kappa_st = st.floats(0, 0.99)


def test_chi_specializations_on_100_kappas():
    for k in KAPPAS:
        k = float(k)
        c, c1 = chi_coefficients(k, -1), chi1_coefficients(k)
        assert abs(c.c_phi - c1.c_phi) < 1e-13 and abs(c.c_psi - c1.c_psi) < 1e-13
        c, c2 = chi_coefficients(k, 1), chi2_coefficients(k)
        assert abs(c.c_phi - c2.c_phi) < 1e-13 and abs(c.c_psi - c2.c_psi) < 1e-13


@given(unit)
def test_chi_at_zero_kappa(u):
    c = chi_coefficients(0.0, u)
    assert c.c_phi == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert c.c_psi == pytest.approx(u / math.sqrt(2), abs=1e-15)


def test_chi1_chi2_examples():
    c = chi1_coefficients(1 / 3)
    assert (c.c_phi, c.c_psi) == (pytest.approx(0.5, abs=1e-15), pytest.approx(-0.5, abs=1e-15))
    c = chi1_coefficients(0)
    assert c.c_phi == pytest.approx(2**-0.5) and c.c_psi == pytest.approx(-(2**-0.5))
    c = chi2_coefficients(1 / 3)
    assert (c.c_phi, c.c_psi) == (pytest.approx(1, abs=1e-15), pytest.approx(1, abs=1e-15))
    c = chi2_coefficients(0)
    assert c.c_phi == c.c_psi == pytest.approx(2**-0.5)


@given(kappa_st)
def test_chi_norms(k):
    assert chi1_coefficients(k).norm_squared() == pytest.approx((1 - k) / (1 + k), rel=1e-13)
    assert chi2_coefficients(k).norm_squared() == pytest.approx((1 + k) / (1 - k), rel=1e-13)


@given(kappa_st)
def test_imA_factor_is_squared_chi_magnitude(k):
    assert imA_factor(k, -1) == pytest.approx(abs(chi1_coefficients(k).c_phi) ** 2, rel=1e-13)
    assert imA_factor(k, -1) == pytest.approx(abs(chi1_coefficients(k).c_psi) ** 2, rel=1e-13)
    assert imA_factor(k, 1) == pytest.approx(abs(chi2_coefficients(k).c_phi) ** 2, rel=1e-13)


@pytest.mark.parametrize("k, sign, expected", [(1 / 3, -1, 0.25), (0, -1, 0.5), (0, 1, 0.5), (1 / 3, 1, 1.0)])
def test_imA_factor_examples(k, sign, expected):
    assert imA_factor(k, sign) == pytest.approx(expected, abs=1e-15)


def test_imA_factor_bad_sign():
    with pytest.raises(ValueError):
        imA_factor(0.5, 0)


def test_coupling_examples():
    assert coupling_coefficient(0, -1).value == pytest.approx(-math.sqrt(2) * 1j, abs=1e-15)
    assert coupling_coefficient(0, 1).value == pytest.approx(math.sqrt(2) * 1j, abs=1e-15)


@given(kappa_st)
def test_coupling_reduces_to_real_part_forms(k):
    # U = -1 and U = +1 give -+ sqrt(2) i / sqrt(1 - kappa^2)
    s = math.sqrt(2) / math.sqrt(1 - k * k)
    assert coupling_coefficient(k, -1).value == pytest.approx(-s * 1j, rel=1e-13)
    assert coupling_coefficient(k, 1).value == pytest.approx(s * 1j, rel=1e-13)


@given(kappa_st, unit)
def test_coupling_magnitude_and_nonzero(k, u):
    c = coupling_coefficient(k, u).value
    expected = math.sqrt(2) * abs(k + u.conjugate()) / (abs(1 + k * u) * math.sqrt(1 - k * k))
    assert abs(c) == pytest.approx(expected, rel=1e-12)
    assert abs(c) > 0


def test_gram_matrix_norm():
    c = chi_coefficients(0.4, cmath.exp(0.7j))
    assert c.norm_squared([[1, 0], [0, 1]]) == pytest.approx(c.norm_squared(), rel=1e-14)
    g = [[1, 0.3], [0.3, 1]]
    manual = abs(c.c_phi) ** 2 + abs(c.c_psi) ** 2 + 2 * 0.3 * (c.c_phi.conjugate() * c.c_psi).real
    assert c.norm_squared(g) == pytest.approx(manual, rel=1e-14)


def test_errors():
    with pytest.raises(InvalidKappa):
        chi_coefficients(1.0, 1)
    with pytest.raises(InvalidKappa):
        chi1_coefficients(-0.1)
    with pytest.raises(DegenerateDenominator):
        chi_coefficients(1 - 1e-14, -1)
