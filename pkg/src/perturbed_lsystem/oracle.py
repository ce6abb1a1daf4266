"""Independent check of kappa, S and D through the transfer function.

Every Donoghue class contains the constant impedance ``V(z) = Q + a i`` on
the upper half-plane. Its transfer value at ``z = -i`` is obtained from the
Herglotz reflection ``V(-i) = Q - a i`` and the Cayley bridge; then
``kappa = |W(-i)|`` and ``S = -ln kappa``. Nothing here touches the closed-form
perturbation formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .entropy import DissipationCoefficient, Entropy
from .errors import DomainError, SingularCayley, SkippedDegenerate
from .herglotz import TransferValue, cayley_v_to_w


@dataclass(frozen=True)
class ConstantImpedance:
    a: float
    q: float = 0.0

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError(f"a must be positive, got {self.a!r}")

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        if z.imag == 0:
            raise DomainError("constant impedance is defined off the real axis")
        return complex(self.q, self.a if z.imag > 0 else -self.a)


def transfer_at_minus_i(c: ConstantImpedance) -> TransferValue:
    return cayley_v_to_w(c(-1j))


def kappa_oracle(a: float, q: float) -> float:
    return abs(transfer_at_minus_i(ConstantImpedance(a, q)).value)


def entropy_oracle(a: float, q: float) -> Entropy:
    k = kappa_oracle(a, q)
    return Entropy.infinite() if k == 0 else Entropy(-math.log(k))


def dissipation_oracle(a: float, q: float) -> DissipationCoefficient:
    k = kappa_oracle(a, q)
    return DissipationCoefficient(1.0 - k * k)


def reciprocity_check(c: ConstantImpedance) -> float:
    """``|W(i) * conj(W(-i)) - 1|``; raises :class:`SkippedDegenerate` at kappa = 0."""
    w_minus = transfer_at_minus_i(c).value
    try:
        w_plus = cayley_v_to_w(c(1j)).value
    except SingularCayley as exc:
        raise SkippedDegenerate("W(i) is infinite where W(-i) = 0") from exc
    return abs(w_plus * w_minus.conjugate() - 1.0)
