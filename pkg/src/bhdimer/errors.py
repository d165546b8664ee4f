"""Exception types raised by the dimer toolkit."""


class DimerError(Exception):
    """Base class for all errors raised by :mod:`bhdimer`."""


class SymmetryViolation(DimerError, ValueError):
    """Coupling tensors violate the Hermiticity conditions."""


class SiteAsymmetry(DimerError, ValueError):
    """The two sites are not equivalent (U or J differ between sites)."""


class DegenerateSpectrum(DimerError, ArithmeticError):
    """The 3x3 spectrum has (numerically) coincident eigenvalues."""


class BranchUnavailable(DimerError, ArithmeticError):
    """The closed-form eigenvector branch has a vanishing denominator."""


class InvalidDistribution(DimerError, ValueError):
    """A probability triad is negative or not normalized."""


class DomainError(DimerError, ValueError):
    """An argument lies outside the domain of a closed-form expression."""


class ConfigError(DimerError, ValueError):
    """A configuration file or command-line value could not be parsed."""
