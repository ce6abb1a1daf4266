"""Invariants of perturbed conservative L-systems.

Von Neumann parameters kappa(Q), U(Q), c-entropy S(Q) and the dissipation
coefficient D(Q) for impedance functions in the Donoghue classes M, M_kappa
and M_kappa^{-1} and their Q-shifted versions.
"""

from .appendix import (
    ChiCoefficients,
    CouplingCoefficient,
    chi1_coefficients,
    chi2_coefficients,
    chi_coefficients,
    coupling_coefficient,
    imA_factor,
)
from .donoghue import DonoghueClass, Family, a_from_kappa, classify, kappa_from_a, normalization_a
from .entropy import (
    DissipationCoefficient,
    Entropy,
    PerturbationResult,
    dissipation_class_m_q,
    dissipation_for,
    dissipation_from_entropy,
    dissipation_mkappa_inv_q,
    dissipation_mkappa_q,
    entropy_class_m_q,
    entropy_for,
    entropy_from_kappa,
    entropy_mkappa_inv_q,
    entropy_mkappa_q,
    invariants,
    unperturbed_limits,
)
from .errors import *  # noqa: F401,F403
from .herglotz import (
    ImpedanceFunction,
    MatrixModel,
    PointMass,
    TransferValue,
    cayley_v_to_w,
    cayley_w_to_v,
    eval_impedance,
    matrix_model_impedance,
)
from .oracle import (
    ConstantImpedance,
    dissipation_oracle,
    entropy_oracle,
    kappa_oracle,
    reciprocity_check,
    transfer_at_minus_i,
)
from .perturbation import (
    VonNeumannPair,
    XYZDecomposition,
    kappa_mkappa,
    kappa_mkappa_inv,
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

__version__ = "0.1.0"
