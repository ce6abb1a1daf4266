"""Coefficient calculus for the rank-one L-system built from (kappa, U).

Vectors are handled only through their coordinates in the deficiency basis
``(phi, psi)``. By default the basis is taken orthonormal in the (-) inner
product; a 2x2 Gram matrix can be passed where a norm is computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateDenominator, InvalidKappa

DENOM_TOL = 1e-12


@dataclass(frozen=True)
class ChiCoefficients:
    c_phi: complex
    c_psi: complex

    def norm_squared(self, gram=None) -> float:
        """``||chi||^2`` for the Gram matrix ``[[<phi,phi>, <psi,phi>], [<phi,psi>, <psi,psi>]]``."""
        c = (self.c_phi, self.c_psi)
        if gram is None:
            return abs(c[0]) ** 2 + abs(c[1]) ** 2
        total = sum(c[i].conjugate() * gram[i][j] * c[j] for i in range(2) for j in range(2))
        return float(total.real)


@dataclass(frozen=True)
class CouplingCoefficient:
    value: complex


def _check_kappa(kappa: float) -> None:
    if not 0 <= kappa < 1:
        raise InvalidKappa(f"kappa must lie in [0, 1), got {kappa!r}")


def _scale(kappa: float, u: complex) -> float:
    _check_kappa(kappa)
    m = abs(1 + kappa * u)
    if m < DENOM_TOL:
        raise DegenerateDenominator(f"|1 + kappa U| = {m!r}")
    return m * math.sqrt(1 - kappa * kappa)


def chi_coefficients(kappa: float, u: complex) -> ChiCoefficients:
    u = complex(u)
    den = math.sqrt(2.0) * _scale(kappa, u)
    k2 = kappa * kappa
    return ChiCoefficients((k2 + 1 + 2 * kappa * u) / den, (k2 * u + 2 * kappa + u) / den)


def chi1_coefficients(kappa: float) -> ChiCoefficients:
    _check_kappa(kappa)
    t = math.sqrt((1 - kappa) / (2 + 2 * kappa))
    return ChiCoefficients(complex(t), complex(-t))


def chi2_coefficients(kappa: float) -> ChiCoefficients:
    _check_kappa(kappa)
    t = math.sqrt((1 + kappa) / (2 - 2 * kappa))
    return ChiCoefficients(complex(t), complex(t))


def coupling_coefficient(kappa: float, u: complex) -> CouplingCoefficient:
    """Scalar in front of ``(., kappa phi + psi) chi`` in the state-space operator."""
    u = complex(u)
    return CouplingCoefficient(math.sqrt(2.0) * 1j * (kappa + u.conjugate()) / _scale(kappa, u))


def imA_factor(kappa: float, u_sign: int) -> float:
    """Scalar factor of the imaginary part for U = -1 (u_sign=-1) or U = +1."""
    _check_kappa(kappa)
    if u_sign == -1:
        return 0.5 * (1 - kappa) / (1 + kappa)
    if u_sign == 1:
        return 0.5 * (1 + kappa) / (1 - kappa)
    raise ValueError(f"u_sign must be -1 or +1, got {u_sign!r}")
