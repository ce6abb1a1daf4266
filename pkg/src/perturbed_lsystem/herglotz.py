"""Impedance (Herglotz-Nevanlinna) functions with point-mass measures.

An impedance function is stored as a real shift ``Q`` plus a finite list of
point masses ``(lambda_j, m_j)``::

    V(z) = Q + sum_j m_j * (1/(lambda_j - z) - lambda_j/(1 + lambda_j**2))

The module also carries the scalar Cayley bridge between impedance values and
transfer-function values, and the matrix model that produces class-M
functions from a self-adjoint matrix and a unit vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateMeasure, DomainError, NotNormalized, PoleHit, SingularCayley

POLE_GUARD = 1e-12
NORMALIZATION_TOL = 1e-10


@dataclass(frozen=True)
class PointMass:
    location: float
    mass: float

    def __post_init__(self):
        if not math.isfinite(self.location):
            raise DomainError(f"point-mass location must be finite, got {self.location!r}")
        if not (self.mass > 0 and math.isfinite(self.mass)):
            raise DomainError(f"point mass must be positive and finite, got {self.mass!r}")


@dataclass(frozen=True)
class ImpedanceFunction:
    shift: float = 0.0
    masses: tuple[PointMass, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not math.isfinite(self.shift):
            raise DomainError(f"shift must be finite, got {self.shift!r}")
        masses = tuple(
            pm if isinstance(pm, PointMass) else PointMass(float(pm[0]), float(pm[1]))
            for pm in self.masses
        )
        object.__setattr__(self, "masses", masses)

    @classmethod
    def from_pairs(cls, shift: float, pairs: Iterable[Sequence[float]]) -> "ImpedanceFunction":
        """Build from ``[(location, mass), ...]``."""
        return cls(float(shift), tuple(PointMass(float(lam), float(m)) for lam, m in pairs))

    def __call__(self, z: complex) -> complex:
        return eval_impedance(self, z)

    def scaled(self, t: float) -> "ImpedanceFunction":
        """Multiply every mass by ``t`` (shift unchanged)."""
        return replace(self, masses=tuple(PointMass(pm.location, pm.mass * t) for pm in self.masses))


@dataclass(frozen=True)
class TransferValue:
    value: complex

    def __abs__(self) -> float:
        return abs(self.value)

    def __complex__(self) -> complex:
        return self.value


def _eval_upper(v: ImpedanceFunction, z: complex) -> complex:
    total = complex(v.shift)
    for pm in v.masses:
        lam = pm.location
        total += pm.mass * (1.0 / (lam - z) - lam / (1.0 + lam * lam))
    return total


def eval_impedance(v: ImpedanceFunction, z: complex, *, require_class: bool = False) -> complex:
    """Evaluate ``V(z)`` off the real axis.

    The lower half-plane is reached by Herglotz reflection,
    ``V(conj z) = conj V(z)``, so the symmetry holds bit-for-bit.
    With ``require_class=True`` an empty measure raises
    :class:`DegenerateMeasure` instead of returning the bare shift.
    """
    z = complex(z)
    if require_class and not v.masses:
        raise DegenerateMeasure("impedance has an empty measure")
    for pm in v.masses:
        if abs(z - pm.location) < POLE_GUARD:
            raise PoleHit(f"z={z!r} coincides with a pole at {pm.location!r}")
    if z.imag == 0.0:
        raise DomainError("impedance functions are evaluated off the real axis only")
    if z.imag > 0:
        return _eval_upper(v, z)
    return _eval_upper(v, z.conjugate()).conjugate()


def cayley_v_to_w(v_value: complex) -> TransferValue:
    """Transfer value ``W = (1 - iV)/(1 + iV)`` from an impedance value."""
    v_value = complex(v_value)
    den = 1 + 1j * v_value
    if abs(den) < POLE_GUARD:
        raise SingularCayley(f"1 + iV vanishes at V={v_value!r}")
    return TransferValue((1 - 1j * v_value) / den)


def cayley_w_to_v(w_value: complex | TransferValue) -> complex:
    """Inverse bridge ``V = i (W + 1)^{-1} (W - 1)``."""
    w = complex(w_value)
    if abs(w + 1) < POLE_GUARD:
        raise SingularCayley("W = -1 has no impedance preimage")
    return 1j * (w - 1) / (w + 1)


@dataclass(frozen=True)
class MatrixModel:
    """Self-adjoint matrix in its eigenbasis plus the components of a unit vector."""

    eigenvalues: tuple[float, ...]
    amplitudes: tuple[complex, ...]

    def __post_init__(self):
        eig = tuple(float(x) for x in self.eigenvalues)
        amp = tuple(complex(c) for c in self.amplitudes)
        if len(eig) != len(amp):
            raise DomainError("eigenvalues and amplitudes must have equal length")
        if not eig:
            raise DegenerateMeasure("empty matrix model")
        object.__setattr__(self, "eigenvalues", eig)
        object.__setattr__(self, "amplitudes", amp)

    @classmethod
    def from_hermitian(cls, matrix, vector) -> "MatrixModel":
        """Diagonalize a Hermitian ``matrix`` and express ``vector`` in its eigenbasis."""
        matrix = np.asarray(matrix, dtype=complex)
        vector = np.asarray(vector, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] != vector.shape[0]:
            raise DomainError("matrix must be square and match the vector length")
        if not np.allclose(matrix, matrix.conj().T, atol=1e-12):
            raise DomainError("matrix is not Hermitian")
        w, vecs = np.linalg.eigh(matrix)
        coords = vecs.conj().T @ vector
        return cls(tuple(w.tolist()), tuple(coords.tolist()))

    @property
    def norm_squared(self) -> float:
        return math.fsum(abs(c) ** 2 for c in self.amplitudes)


def matrix_model_impedance(m: MatrixModel) -> ImpedanceFunction:
    """Impedance ``((Az + I)(A - zI)^{-1} g, g)`` as a point-mass function.

    Each eigenvalue ``lambda_j`` carries mass ``|c_j|^2 (1 + lambda_j^2)``,
    which forces ``V(i) = i``. Zero amplitudes contribute nothing and are
    dropped.
    """
    if abs(m.norm_squared - 1.0) > NORMALIZATION_TOL:
        raise NotNormalized(f"amplitudes have squared norm {m.norm_squared!r}, expected 1")
    masses = tuple(
        PointMass(lam, abs(c) ** 2 * (1.0 + lam * lam))
        for lam, c in zip(m.eigenvalues, m.amplitudes)
        if c != 0
    )
    return ImpedanceFunction(0.0, masses)


def resolvent_form(matrix, vector, z: complex) -> complex:
    """Evaluate ``((Az + I)(A - zI)^{-1} g, g)`` by a dense linear solve.

    Independent of the eigen-decomposition route; used to cross-check
    :func:`matrix_model_impedance`.
    """
    a = np.asarray(matrix, dtype=complex)
    g = np.asarray(vector, dtype=complex)
    n = a.shape[0]
    x = np.linalg.solve(a - z * np.eye(n), g)
    return complex(np.vdot(g, (a * z + np.eye(n)) @ x))


def is_unimodular(u: complex, tol: float = 1e-10) -> bool:
    return abs(abs(u) - 1.0) <= tol

