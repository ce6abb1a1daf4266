import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from perturbed_lsystem import (
    ImpedanceFunction,
    InvalidA,
    NumericalInstability,
    ZeroKappa,
    ZeroQ,
    classify,
    kappa_mkappa,
    kappa_mkappa_inv,
    kappa_oracle,
    kappa_slope_class_m,
    perturb,
    perturb_class_m,
    perturb_mkappa,
    perturb_mkappa_inv,
    shift_impedance,
    u_of_q,
    vertex_pair,
    xyz_mkappa,
    xyz_mkappa_inv,
)
from perturbed_lsystem.perturbation import VonNeumannPair

from reference import kappa_mkappa_inv_literal, kappa_mkappa_literal

SQ5 = math.sqrt(5)
A_SMALL = (0.1, 0.25, 0.5, 0.75, 0.9)
A_LARGE = (1.5, 2.0, 5.0)
Q_GRID = (-5.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 5.0)


# -- class M -----------------------------------------------------------------

def test_class_m_example_one():
    p = perturb_class_m(1)
    assert p.kappa == pytest.approx(1 / SQ5, abs=1e-15)
    assert p.u == pytest.approx((-1 + 2j) / SQ5, abs=1e-15)


def test_class_m_negative_q():
    p = perturb_class_m(-1)
    assert p.kappa == pytest.approx(1 / SQ5, abs=1e-15)
    assert p.u == pytest.approx((-1 - 2j) / SQ5, abs=1e-15)


def test_class_m_small_q_and_zero():
    assert perturb_class_m(1e-9).kappa < 1e-9
    with pytest.raises(ZeroQ):
        perturb_class_m(0)


def test_slope_limits():
    assert kappa_slope_class_m(0.0) == 0.5
    assert kappa_slope_class_m(1e-8) == pytest.approx(0.5, abs=1e-12)
    assert kappa_slope_class_m(1e4) < 1e-11
    with pytest.raises(ValueError):
        kappa_slope_class_m(-1)


@pytest.mark.parametrize("q", [0.001, 0.1, 1.0, 3.0])
def test_slope_matches_central_difference(q):
    h = q * 1e-3
    fd = (perturb_class_m(q + h).kappa - perturb_class_m(q - h).kappa) / (2 * h)
    assert fd == pytest.approx(kappa_slope_class_m(q), abs=1e-6)


# -- XYZ -----------------------------------------------------------------------

def test_xyz_example():
    d = xyz_mkappa(0.5, 1.0)
    # mpmath, 50 digits
    assert d.b == 0.25
    assert d.x == pytest.approx(14.179475529761230946, rel=1e-14)
    assert d.y == pytest.approx(1.5586088907313406467, rel=1e-14)
    assert d.z == 2.0


def test_xyz_small_q_ratio():
    d = xyz_mkappa(0.5, 1e-8)
    assert d.z == pytest.approx(0, abs=1e-15)
    assert d.x / d.y == pytest.approx(2.0, rel=1e-12)


@given(st.floats(1e-3, 0.999), st.floats(-1e3, 1e3).filter(lambda q: abs(q) > 1e-6))
def test_xyz_nonnegative(a, q):
    d = xyz_mkappa(a, q)
    assert d.x >= 0 and d.y >= 0 and d.z > 0
    assert d.z == pytest.approx(4 * a * q * q)


def test_xyz_domain():
    with pytest.raises(InvalidA):
        xyz_mkappa(1.5, 1)
    with pytest.raises(InvalidA):
        xyz_mkappa_inv(0.5, 1)
    with pytest.raises(ZeroQ):
        xyz_mkappa(0.5, 0)


# -- M_kappa / M_kappa^-1 ------------------------------------------------------

def test_kappa_mkappa_examples():
    assert kappa_mkappa(0.5, 1) == pytest.approx(math.sqrt(65) / 13, abs=1e-15)
    assert kappa_mkappa(0.5, 1e-7) == pytest.approx(1 / 3, abs=1e-12)
    assert kappa_mkappa(0.5, 2) == pytest.approx(math.sqrt(4.25 / 6.25), abs=1e-15)


def test_kappa_mkappa_inv_examples():
    assert kappa_mkappa_inv(2, 1e-7) == pytest.approx(1 / 3, abs=1e-12)
    assert kappa_mkappa_inv(2, 1) == pytest.approx(math.sqrt(0.2), abs=1e-15)
    # mpmath: sqrt((4 + 4)/(16 + 4))
    assert kappa_mkappa_inv(3, 2) == pytest.approx(0.63245553203367586640, abs=1e-15)


def test_kappa_mkappa_inv_monotone_in_q():
    qs = [0.1 * k for k in range(1, 200)]
    ks = [kappa_mkappa_inv(3, q) for q in qs]
    assert all(0.5 < k < 1 for k in ks)
    assert all(k1 < k2 for k1, k2 in zip(ks, ks[1:]))


@pytest.mark.parametrize("a", A_SMALL)
@pytest.mark.parametrize("q", Q_GRID)
def test_mkappa_matches_literal_and_oracle(a, q):
    k = kappa_mkappa(a, q)
    assert k == pytest.approx(float(kappa_mkappa_literal(a, q)), abs=1e-12)
    assert k == pytest.approx(kappa_oracle(a, q), abs=1e-10)


@pytest.mark.parametrize("a", A_LARGE)
@pytest.mark.parametrize("q", Q_GRID)
def test_mkappa_inv_matches_literal_and_oracle(a, q):
    k = kappa_mkappa_inv(a, q)
    assert k == pytest.approx(float(kappa_mkappa_inv_literal(a, q)), abs=1e-12)
    assert k == pytest.approx(kappa_oracle(a, q), abs=1e-10)


@given(st.floats(1e-3, 0.999), st.floats(1e-4, 1e4))
def test_evenness_mkappa(a, q):
    assert kappa_mkappa(a, q) == pytest.approx(kappa_mkappa(a, -q), abs=1e-13)
    assert perturb_class_m(q).kappa == pytest.approx(perturb_class_m(-q).kappa, abs=1e-13)


@given(st.floats(1.001, 50), st.floats(1e-4, 1e4))
def test_evenness_mkappa_inv(a, q):
    assert kappa_mkappa_inv(a, q) == pytest.approx(kappa_mkappa_inv(a, -q), abs=1e-13)


@pytest.mark.parametrize("a", A_SMALL + A_LARGE)
def test_vertex_limits(a):
    k0 = abs(1 - a) / (1 + a)
    k = kappa_mkappa(a, 1e-6) if a < 1 else kappa_mkappa_inv(a, 1e-6)
    assert k == pytest.approx(k0, abs=1e-5)
    assert vertex_pair(a).kappa == pytest.approx(k0, abs=1e-15)


def test_stable_radicals_at_large_q():
    for a in (0.1, 0.9):
        for q in (1e3, 1e5, 1e7):
            assert kappa_mkappa(a, q) == pytest.approx(float(kappa_mkappa_literal(a, q)), abs=1e-13)
    for a in (1.5, 5.0):
        for q in (1e3, 1e5, 1e7):
            assert kappa_mkappa_inv(a, q) == pytest.approx(float(kappa_mkappa_inv_literal(a, q)), abs=1e-13)


# -- U(Q) ----------------------------------------------------------------------

def test_u_example_two():
    k = kappa_mkappa(0.5, 1)
    assert u_of_q(0.5, 1, k) == pytest.approx((-7 + 4j) / math.sqrt(65), abs=1e-14)


def test_u_vertex_limits():
    assert u_of_q(0.5, 1e-9, kappa_mkappa(0.5, 1e-9)) == pytest.approx(-1, abs=1e-8)
    assert u_of_q(2.0, 1e-9, kappa_mkappa_inv(2.0, 1e-9)) == pytest.approx(1, abs=1e-8)
    assert vertex_pair(0.5).u == -1
    assert vertex_pair(2.0).u == 1
    assert vertex_pair(1.0) == VonNeumannPair(0.0, -1 + 0j)


@given(st.floats(1e-3, 0.999) | st.floats(1.001, 100), st.floats(1e-3, 1e3), st.booleans())
def test_u_unimodular(a, q, neg):
    q = -q if neg else q
    p = perturb_mkappa(a, q) if a < 1 else perturb_mkappa_inv(a, q)
    assert abs(abs(p.u) - 1) <= 1e-10


@pytest.mark.parametrize("q", [-3.0, -1.0, 0.5, 2.0])
def test_u_formula_reduces_to_class_m_at_a_one(q):
    p = perturb_class_m(q)
    assert u_of_q(1.0, q, p.kappa) == pytest.approx(p.u, abs=1e-14)


def test_u_errors():
    with pytest.raises(ZeroKappa):
        u_of_q(0.5, 1, 0.0)
    with pytest.raises(NumericalInstability):
        u_of_q(0.5, 1, 0.3)


def test_pair_invariants():
    with pytest.raises(NumericalInstability):
        VonNeumannPair(1.0, 1)
    with pytest.raises(NumericalInstability):
        VonNeumannPair(0.5, 1.1)


def test_perturb_dispatch():
    assert perturb(1.0, 1.0) == perturb_class_m(1.0)
    assert perturb(0.5, 1.0) == perturb_mkappa(0.5, 1.0)
    assert perturb(2.0, 1.0) == perturb_mkappa_inv(2.0, 1.0)
    assert perturb(2.0, 0.0) == vertex_pair(2.0)


# -- impedance shift -------------------------------------------------------------

def test_shift_example_one():
    v = ImpedanceFunction.from_pairs(0, [(0, 1)])
    w = shift_impedance(v, 1)
    assert w == ImpedanceFunction.from_pairs(1, [(0, 1)])
    assert w(1j) == pytest.approx(1 + 1j, abs=1e-15)


@given(st.floats(-100, 100), st.floats(-100, 100))
def test_shift_identity_inverse_and_classification(s, q):
    v = ImpedanceFunction.from_pairs(s, [(0.5, 2.0), (-3.0, 1.0)])
    assert shift_impedance(v, 0) is v
    w = shift_impedance(v, q)
    assert w.masses == v.masses
    assert shift_impedance(w, -q).shift == pytest.approx(s, abs=1e-12)
    assert classify(w).shift == pytest.approx(classify(v).shift + q, abs=1e-12)
