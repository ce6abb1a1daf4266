"""Exception hierarchy.

Every error raised by the library derives from :class:`LSystemError`, which
is itself a ``ValueError`` so callers that only care about bad input can catch
the builtin.
"""


class LSystemError(ValueError):
    pass


class DomainError(LSystemError):
    """Argument outside the domain of a formula (e.g. a real-axis point)."""


class PoleHit(DomainError):
    pass


class DegenerateMeasure(LSystemError):
    """The spectral measure has no mass, so no Donoghue class applies."""


class SingularCayley(DomainError):
    pass


class NotNormalized(LSystemError):
    pass


class InvalidA(DomainError):
    pass


class InvalidKappa(DomainError):
    pass


class InvalidEntropy(DomainError):
    pass


class ZeroQ(DomainError):
    """Perturbation formula called with Q = 0; use the vertex/limit accessors."""


class ZeroKappa(DomainError):
    pass


class InfiniteEntropy(DomainError):
    """A finite-entropy formula received S = +inf; use the class-M branch."""


class DegenerateDenominator(DomainError):
    pass


class NumericalInstability(LSystemError):
    pass


class SkippedDegenerate(LSystemError):
    """Check is undefined at the kappa = 0 fixed point and was skipped."""
