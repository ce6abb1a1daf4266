"""Normalization constant, the a <-> kappa map, and Donoghue classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DegenerateMeasure, InvalidA, InvalidKappa
from .herglotz import ImpedanceFunction

TIE_TOL = 1e-12


class Family(str, enum.Enum):
    M = "M"
    MKappa = "MKappa"
    MKappaInv = "MKappaInv"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().lower().replace("_", "").replace("-", "")
        for fam in cls:
            if fam.value.lower() == key:
                return fam
        raise ValueError(f"unknown family {text!r}; expected one of m, mkappa, mkappainv")


@dataclass(frozen=True)
class DonoghueClass:
    family: Family
    kappa: float
    shift: float
    a: float

    def __post_init__(self):
        if self.family is Family.M:
            ok = abs(self.a - 1.0) <= TIE_TOL and self.kappa == 0.0
        elif self.family is Family.MKappa:
            ok = 0 < self.a < 1 and math.isclose(self.kappa, (1 - self.a) / (1 + self.a), abs_tol=1e-15)
        else:
            ok = self.a > 1 and math.isclose(self.kappa, (self.a - 1) / (1 + self.a), abs_tol=1e-15)
        if not ok:
            raise InvalidA(f"inconsistent class record {self!r}")

    @property
    def perturbed(self) -> bool:
        return abs(self.shift) > TIE_TOL

    @property
    def label(self) -> str:
        """Human-readable class name, e.g. ``M^1`` or ``M_0.333333^1``."""
        q = f"{self.shift:g}"
        if self.family is Family.M:
            return f"M^{q}" if self.perturbed else "M"
        k = f"{self.kappa:g}"
        if self.family is Family.MKappa:
            return f"M_{k}^{q}" if self.perturbed else f"M_{k}"
        return f"M_{k}^{{-1,{q}}}" if self.perturbed else f"M_{k}^-1"


def normalization_a(v: ImpedanceFunction) -> float:
    """``a = sum_j m_j / (1 + lambda_j^2)``, the value of ``Im V(i)``."""
    if not v.masses:
        raise DegenerateMeasure("degenerate measure: no point masses")
    return math.fsum(pm.mass / (1.0 + pm.location * pm.location) for pm in v.masses)


def kappa_from_a(a: float) -> tuple[Family, float]:
    if not a > 0 or not math.isfinite(a):
        raise InvalidA(f"normalization a must be positive and finite, got {a!r}")
    if abs(a - 1.0) <= TIE_TOL:
        return Family.M, 0.0
    if a < 1:
        return Family.MKappa, (1 - a) / (1 + a)
    return Family.MKappaInv, (a - 1) / (1 + a)


def a_from_kappa(family: Family, kappa: float) -> float:
    family = Family(family)
    if not 0 <= kappa < 1:
        raise InvalidKappa(f"kappa must lie in [0, 1), got {kappa!r}")
    if family is Family.M:
        if kappa != 0:
            raise InvalidKappa("class M has kappa = 0")
        return 1.0
    if family is Family.MKappa:
        return (1 - kappa) / (1 + kappa)
    if kappa == 0:
        # M_0^{-1} coincides with M
        return 1.0
    return (1 + kappa) / (1 - kappa)


def classify(v: ImpedanceFunction) -> DonoghueClass:
    a = normalization_a(v)
    family, kappa = kappa_from_a(a)
    shift = 0.0 if abs(v.shift) <= TIE_TOL else v.shift
    if family is Family.M:
        a = 1.0
    return DonoghueClass(family, kappa, shift, a)
