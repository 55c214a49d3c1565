"""Exception types shared across the package."""


class OverflowToNonFinite(ArithmeticError):
    """A float result would overflow; reduce ``n`` or the magnitude of the inputs."""


class ConvergenceDomainError(ValueError):
    """A power series was requested outside its disk of convergence."""


class DegenerateEqualRoots(ValueError):
    """The quotient ``(a**n - b**n) / (a - b)`` is ill-conditioned because ``a`` is close to ``b``."""


class NonIntegerCoefficient(ArithmeticError):
    """An integer-valued coefficient formula produced a non-integer (an arithmetic bug)."""


class PairingFailure(ArithmeticError):
    """No twist of the principal n-th roots satisfies ``a*b == p`` to tolerance."""


class InvalidEllipse(ValueError):
    """Semi-axis parameters violate ``a > |b| >= 0``."""
