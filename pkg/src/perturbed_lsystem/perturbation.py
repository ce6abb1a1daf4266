"""Von Neumann parameters kappa(Q), U(Q) of a Q-perturbed L-system.

Three families are covered:

* class M (a = 1, unperturbed kappa = 0),
* class M_kappa (0 < a < 1),
* class M_kappa^{-1} (a > 1).

For the last two, kappa(Q) is a ratio of the quantities

    b = Q^2 + a^2 - 1,   r = sqrt(b^2 + 4 Q^2),
    X = (b - 2Q^2 - r)^2,   Y = a (b - r)^2,   Z = 4 a Q^2        (M_kappa)
    X' = (b - 2Q^2 + r)^2,  Y' = a (b + r)^2,  Z = 4 a Q^2        (M_kappa^{-1})

Differences like ``b - r`` lose most of their digits when |b| >> |Q|, so
every such difference is evaluated through a conjugate form instead.

All formulas here require Q != 0. The Q = 0 values (the graph vertices) come
from :func:`vertex_pair`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .donoghue import Family, kappa_from_a
from .errors import InvalidA, NumericalInstability, ZeroKappa, ZeroQ
from .herglotz import ImpedanceFunction, is_unimodular

CLAMP_TOL = 1e-13
UNIMODULAR_TOL = 1e-10


@dataclass(frozen=True)
class VonNeumannPair:
    kappa: float
    u: complex

    def __post_init__(self):
        if not 0 <= self.kappa < 1:
            raise NumericalInstability(f"kappa={self.kappa!r} outside [0, 1)")
        if not is_unimodular(self.u, UNIMODULAR_TOL):
            raise NumericalInstability(f"|U|={abs(self.u)!r} is not 1")


@dataclass(frozen=True)
class XYZDecomposition:
    x: float
    y: float
    z: float
    a: float
    b: float


def _require_q(q: float) -> float:
    q = float(q)
    if q == 0:
        raise ZeroQ("perturbation formulas need Q != 0; use vertex_pair for Q = 0")
    return q


def _clamp_kappa(k: float) -> float:
    if k < 0:
        if k > -CLAMP_TOL:
            return 0.0
        raise NumericalInstability(f"kappa evaluated to {k!r}")
    return k


# -- class M -----------------------------------------------------------------

def perturb_class_m(q: float) -> VonNeumannPair:
    q = _require_q(q)
    root = math.hypot(q, 2.0)
    kappa = abs(q) / root
    u = math.copysign(1.0, q) * complex(-q, 2.0) / root
    return VonNeumannPair(kappa, u)


def kappa_slope_class_m(q: float) -> float:
    """Derivative of kappa(Q) = |Q|/sqrt(Q^2+4) for Q > 0 (Q = 0 gives the right limit 1/2)."""
    if q < 0:
        raise ValueError("slope is tabulated for q >= 0 only; kappa is even")
    return 4.0 / (q * q + 4.0) ** 1.5


# -- class M_kappa -------------------------------------------------------------

def _b_and_root(a: float, q: float) -> tuple[float, float]:
    b = q * q + a * a - 1.0
    return b, math.hypot(b, 2.0 * q)


def xyz_mkappa(a: float, q: float) -> XYZDecomposition:
    if not 0 < a < 1:
        raise InvalidA(f"class M_kappa needs 0 < a < 1, got {a!r}")
    q = _require_q(q)
    q2 = q * q
    b, r = _b_and_root(a, q)
    # b - r
    b_minus_r = -4.0 * q2 / (b + r) if b > 0 else b - r
    # b - 2Q^2 - r = (b - r) - 2Q^2, both terms <= 0
    x = (b_minus_r - 2.0 * q2) ** 2
    y = a * b_minus_r ** 2
    return XYZDecomposition(x, y, 4.0 * a * q2, a, b)


def kappa_mkappa(a: float, q: float) -> float:
    d = xyz_mkappa(a, q)
    num = d.x - d.y + (d.a - 1.0) * d.z
    den = d.x + d.y + (d.a + 1.0) * d.z
    return _clamp_kappa(num / den)


# -- class M_kappa^{-1} --------------------------------------------------------

def xyz_mkappa_inv(a: float, q: float) -> XYZDecomposition:
    """Primed decomposition (X', Y', Z) for a > 1."""
    if not a > 1:
        raise InvalidA(f"class M_kappa^-1 needs a > 1, got {a!r}")
    q = _require_q(q)
    q2 = q * q
    b, r = _b_and_root(a, q)
    b_plus_r = 4.0 * q2 / (r - b) if b < 0 else b + r
    # b - 2Q^2 + r = r - (Q^2 - c) with c = a^2 - 1, and r^2 - (Q^2 - c)^2 = 4 a^2 Q^2
    c = a * a - 1.0
    d = q2 - c
    inner = 4.0 * a * a * q2 / (r + d) if d > 0 else r - d
    return XYZDecomposition(inner ** 2, a * b_plus_r ** 2, 4.0 * a * q2, a, b)


def kappa_mkappa_inv(a: float, q: float) -> float:
    d = xyz_mkappa_inv(a, q)
    num = d.y - d.x - (d.a - 1.0) * d.z
    den = d.x + d.y + (d.a + 1.0) * d.z
    return _clamp_kappa(num / den)


# -- quasi-kernel parameter ----------------------------------------------------

def u_of_q(a: float, q: float, kappa_q: float) -> complex:
    """U(Q) = [(a + iQ)(1 - kappa^2) - 1 - kappa^2] / (2 kappa).

    Used for both M_kappa and M_kappa^{-1} with the family's own ``a``. A
    non-unimodular result is reported as :class:`NumericalInstability`.
    """
    if kappa_q == 0:
        raise ZeroKappa("U(Q) formula divides by kappa(Q); use perturb_class_m for class M")
    k2 = kappa_q * kappa_q
    u = (complex(a, q) * (1.0 - k2) - 1.0 - k2) / (2.0 * kappa_q)
    if not is_unimodular(u, UNIMODULAR_TOL):
        raise NumericalInstability(f"|U(Q)| = {abs(u)!r} deviates from 1 at a={a!r}, q={q!r}")
    return u


def perturb_mkappa(a: float, q: float) -> VonNeumannPair:
    k = kappa_mkappa(a, q)
    return VonNeumannPair(k, u_of_q(a, q, k))


def perturb_mkappa_inv(a: float, q: float) -> VonNeumannPair:
    k = kappa_mkappa_inv(a, q)
    return VonNeumannPair(k, u_of_q(a, q, k))


def vertex_pair(a: float) -> VonNeumannPair:
    """Unperturbed (Q = 0) parameters for normalization ``a``.

    kappa_0 = |1 - a|/(1 + a); U = -1 for classes M and M_kappa, U = +1 for
    M_kappa^{-1}.
    """
    family, kappa = kappa_from_a(a)
    return VonNeumannPair(kappa, 1.0 + 0j if family is Family.MKappaInv else -1.0 + 0j)


def perturb(a: float, q: float) -> VonNeumannPair:
    """Dispatch on the family of ``a``; Q = 0 returns the vertex."""
    if q == 0:
        return vertex_pair(a)
    family, _ = kappa_from_a(a)
    if family is Family.M:
        return perturb_class_m(q)
    if family is Family.MKappa:
        return perturb_mkappa(a, q)
    return perturb_mkappa_inv(a, q)


def shift_impedance(v: ImpedanceFunction, q: float) -> ImpedanceFunction:
    """Impedance shift ``V -> Q + V``; the measure is untouched."""
    if q == 0:
        return v
    return replace(v, shift=v.shift + q)
