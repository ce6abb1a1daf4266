"""c-Entropy S(Q) and dissipation coefficient D(Q) of perturbed L-systems.

The quotient formulas for the M_kappa families are evaluated through the
XYZ decomposition of :mod:`perturbed_lsystem.perturbation`. Two rewrites keep
them well conditioned for large |Q|:

* ``S = ln(den/num)`` is computed as ``log1p((den - num)/num)``, where
  ``den - num`` is ``2(Y + Z)`` (M_kappa) or ``2(X' + aZ)`` (M_kappa^{-1});
* ``D`` uses the product forms ``4(Y+Z)(X+aZ)/(X+Y+(a+1)Z)^2`` and
  ``4(X'+aZ)(Y'+Z)/(X'+Y'+(a+1)Z)^2`` rather than ``1 - kappa^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .donoghue import Family, kappa_from_a
from .errors import InfiniteEntropy, InvalidA, InvalidEntropy, InvalidKappa, ZeroQ
from .perturbation import (
    XYZDecomposition,
    perturb,
    xyz_mkappa,
    xyz_mkappa_inv,
)


@dataclass(frozen=True, order=True)
class Entropy:
    """Nonnegative extended real; ``math.inf`` is the kappa = 0 case."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if math.isnan(v) or v < 0:
            raise InvalidEntropy(f"entropy must be >= 0, got {self.value!r}")
        object.__setattr__(self, "value", v)

    @classmethod
    def infinite(cls) -> "Entropy":
        return cls(math.inf)

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)

    @property
    def kappa(self) -> float:
        return math.exp(-self.value)

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return "inf" if self.is_infinite else repr(self.value)


@dataclass(frozen=True, order=True)
class DissipationCoefficient:
    value: float

    def __post_init__(self):
        v = float(self.value)
        if not 0 <= v <= 1:
            raise InvalidEntropy(f"dissipation coefficient must lie in [0, 1], got {self.value!r}")
        object.__setattr__(self, "value", v)

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class PerturbationResult:
    family: Family
    a: float
    q: float
    kappa: float
    u: complex
    entropy: Entropy
    dissipation: DissipationCoefficient


def _finite_s0(s0) -> float:
    s = float(s0)
    if math.isinf(s):
        raise InfiniteEntropy("s0 = inf belongs to class M; use entropy_class_m_q")
    if not s > 0:
        raise InvalidEntropy(f"unperturbed entropy must be positive, got {s!r}")
    return s


def _nonzero(q: float) -> float:
    q = float(q)
    if q == 0:
        raise ZeroQ("Q = 0 is the unperturbed case; use unperturbed_limits")
    return q


# -- bridges -------------------------------------------------------------------

def entropy_from_kappa(kappa: float) -> Entropy:
    if not 0 <= kappa < 1:
        raise InvalidKappa(f"kappa must lie in [0, 1), got {kappa!r}")
    if kappa == 0:
        return Entropy.infinite()
    return Entropy(-math.log(kappa))


def dissipation_from_entropy(s) -> DissipationCoefficient:
    s = float(s)
    if math.isinf(s):
        return DissipationCoefficient(1.0)
    return DissipationCoefficient(-math.expm1(-2.0 * s))


# -- class M^Q -------------------------------------------------------------------

def entropy_class_m_q(q: float) -> Entropy:
    # (1/2) ln(Q^2 + 4) - ln|Q| = (1/2) log1p(4/Q^2)
    q = _nonzero(q)
    return Entropy(0.5 * math.log1p(4.0 / (q * q)))


def dissipation_class_m_q(q: float) -> DissipationCoefficient:
    q = float(q)
    return DissipationCoefficient(4.0 / (q * q + 4.0))


# -- class M_kappa^Q -----------------------------------------------------------

def _entropy_mkappa(d: XYZDecomposition) -> float:
    num = d.x - d.y + (d.a - 1.0) * d.z
    return math.log1p(2.0 * (d.y + d.z) / num)


def _dissipation_mkappa(d: XYZDecomposition) -> float:
    den = d.x + d.y + (d.a + 1.0) * d.z
    return 4.0 * (d.y + d.z) * (d.x + d.a * d.z) / (den * den)


def entropy_mkappa_q(s0, q: float) -> Entropy:
    a = math.tanh(_finite_s0(s0) / 2.0)
    return Entropy(_entropy_mkappa(xyz_mkappa(a, _nonzero(q))))


def dissipation_mkappa_q(s0, q: float) -> DissipationCoefficient:
    a = math.tanh(_finite_s0(s0) / 2.0)
    return DissipationCoefficient(_dissipation_mkappa(xyz_mkappa(a, _nonzero(q))))


# -- class M_kappa^{-1,Q} ------------------------------------------------------

def _entropy_mkappa_inv(d: XYZDecomposition) -> float:
    num = d.y - d.x - (d.a - 1.0) * d.z
    return math.log1p(2.0 * (d.x + d.a * d.z) / num)


def _dissipation_mkappa_inv(d: XYZDecomposition) -> float:
    # (den - num)(den + num) with num = Y' - X' - (a-1)Z gives 4(X' + aZ)(Y' + Z);
    # the transposed 4(X' + Z)(Y' + aZ) does not equal 1 - kappa^2.
    den = d.x + d.y + (d.a + 1.0) * d.z
    return 4.0 * (d.x + d.a * d.z) * (d.y + d.z) / (den * den)


def entropy_mkappa_inv_q(s0, q: float) -> Entropy:
    a = 1.0 / math.tanh(_finite_s0(s0) / 2.0)
    return Entropy(_entropy_mkappa_inv(xyz_mkappa_inv(a, _nonzero(q))))


def dissipation_mkappa_inv_q(s0, q: float) -> DissipationCoefficient:
    a = 1.0 / math.tanh(_finite_s0(s0) / 2.0)
    return DissipationCoefficient(_dissipation_mkappa_inv(xyz_mkappa_inv(a, _nonzero(q))))


# -- Q = 0 -----------------------------------------------------------------------

def unperturbed_limits(a: float) -> tuple[Entropy, DissipationCoefficient]:
    """Vertex values S(0), D(0) for ``a != 1``.

    ``S(0) = ln(1+a) - ln(1-a)`` for a < 1 and ``ln(a+1) - ln(a-1)`` for
    a > 1; both equal ``2 artanh(min(a, 1/a))``. ``D(0) = 4a/(1+a)^2``.
    """
    family, _ = kappa_from_a(a)
    if family is Family.M:
        raise InvalidA("a = 1 has infinite entropy; use the class-M branch")
    s = 2.0 * math.atanh(a if a < 1 else 1.0 / a)
    # 4a/(1+a)^2 written as 1 - kappa_0^2 so roundoff cannot push it past 1
    k0 = abs(1.0 - a) / (1.0 + a)
    return Entropy(s), DissipationCoefficient((1.0 - k0) * (1.0 + k0))


# -- dispatch --------------------------------------------------------------------

def entropy_for(a: float, q: float) -> Entropy:
    """S(Q) for the family selected by ``a`` (Q = 0 allowed)."""
    family, _ = kappa_from_a(a)
    if family is Family.M:
        return Entropy.infinite() if q == 0 else entropy_class_m_q(q)
    if q == 0:
        return unperturbed_limits(a)[0]
    if family is Family.MKappa:
        return Entropy(_entropy_mkappa(xyz_mkappa(a, q)))
    return Entropy(_entropy_mkappa_inv(xyz_mkappa_inv(a, q)))


def dissipation_for(a: float, q: float) -> DissipationCoefficient:
    family, _ = kappa_from_a(a)
    if family is Family.M:
        return dissipation_class_m_q(q)
    if q == 0:
        return unperturbed_limits(a)[1]
    if family is Family.MKappa:
        return DissipationCoefficient(_dissipation_mkappa(xyz_mkappa(a, q)))
    return DissipationCoefficient(_dissipation_mkappa_inv(xyz_mkappa_inv(a, q)))


def invariants(a: float, q: float) -> PerturbationResult:
    """kappa, U, S and D of the class with normalization ``a`` shifted by ``q``."""
    family, _ = kappa_from_a(a)
    pair = perturb(a, q)
    return PerturbationResult(
        family=family,
        a=1.0 if family is Family.M else float(a),
        q=float(q),
        kappa=pair.kappa,
        u=pair.u,
        entropy=entropy_for(a, q),
        dissipation=dissipation_for(a, q),
    )
