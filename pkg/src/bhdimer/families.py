"""The fast, slow and equally-weighted state families and their strong-tunneling limits.

Each family fixes an energy distribution (all phases zero); the actual initial
state depends on the Hamiltonian through its eigenvectors.  In the strong
single-particle (``K = 0``, ``J >> eps1``) and strong pair tunneling
(``J = eps1``, ``K >> J``) regimes the evolved state and its concurrence have
closed forms in the dimensionless time ``t / tau``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .dynamics import Basis, EnergyDistribution, QutritState
from .entanglement import _concurrence, concurrence_series
from .hamiltonian import SymmetricMatrix3, build_tunneling_matrix
from .spectral import Frequencies, spectral_decomposition

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


class FamilyKind(enum.Enum):
    FAST = "fast"
    SLOW = "slow"
    EW = "ew"


class Regime(enum.Enum):
    STRONG_J = "strong_j"
    STRONG_K = "strong_k"


@dataclass(frozen=True)
class RegimeLimit:
    kind: FamilyKind
    regime: Regime
    tau_ref: float

    def __post_init__(self):
        if not self.tau_ref > 0:
            raise ValueError("tau_ref must be positive")


_WEIGHTS = {
    FamilyKind.FAST: (0.5, 0.0, 0.5),
    FamilyKind.SLOW: (0.5, 0.5, 0.0),
    FamilyKind.EW: (1 / 3, 1 / 3, 1 / 3),
}

# t/tau window shown for each family: two state periods for the two-level
# families, one full period (3 tau) for the qutrit
WINDOW = {FamilyKind.FAST: 2.0, FamilyKind.SLOW: 2.0, FamilyKind.EW: 3.0}


def family_distribution(kind: FamilyKind) -> EnergyDistribution:
    return EnergyDistribution(_WEIGHTS[FamilyKind(kind)])


def characteristic_time(kind: FamilyKind, freqs: Frequencies) -> float:
    """Time unit of a family.

    ``pi / w31`` (fast) and ``pi / w21`` (slow) are orthogonality times.  For
    the equally-weighted family it is ``4 pi / (3 w31)``, which coincides with
    the orthogonality time ``2 pi / (3 w21)`` for an equally spaced spectrum.
    """
    kind = FamilyKind(kind)
    if kind is FamilyKind.FAST:
        return math.pi / freqs.w31
    if kind is FamilyKind.SLOW:
        return math.pi / freqs.w21
    return 4.0 * math.pi / (3.0 * freqs.w31)


def _limit_fock_amplitudes(limit: RegimeLimit, t) -> np.ndarray:
    x = np.asarray(t, dtype=float) / limit.tau_ref
    key = (limit.kind, limit.regime)
    if key == (FamilyKind.FAST, Regime.STRONG_J):
        c, s = np.cos(np.pi * x / 2), np.sin(np.pi * x / 2)
        amps = [c / SQRT2, 1j * s, c / SQRT2]
    elif key == (FamilyKind.FAST, Regime.STRONG_K):
        c, s = np.cos(np.pi * x / 2), np.sin(np.pi * x / 2)
        amps = [s, 0.0, -1j * c]
    elif key == (FamilyKind.SLOW, Regime.STRONG_J):
        e = np.exp(-1j * np.pi * x)
        amps = [0.5 * (1 / SQRT2 - e), 0.5, 0.5 * (1 / SQRT2 + e)]
    elif key == (FamilyKind.SLOW, Regime.STRONG_K):
        e = np.exp(-1j * np.pi * x)
        amps = [0.5, e / SQRT2, 0.5]
    elif key == (FamilyKind.EW, Regime.STRONG_J):
        a = 2 * np.pi * x / 3
        amps = [(np.cos(a) - 1 / SQRT2) / SQRT3, 1j * SQRT2 * np.sin(a) / SQRT3, (np.cos(a) + 1 / SQRT2) / SQRT3]
    else:
        b = 2 * np.pi * x / 3
        amps = [1j * SQRT2 * np.sin(b) / SQRT3, 1 / SQRT3, SQRT2 * np.cos(b) / SQRT3]
    return np.stack(np.broadcast_arrays(*[np.asarray(a, dtype=complex) for a in amps]), axis=-1)


def limit_state(limit: RegimeLimit, t: float) -> QutritState:
    """Fock-basis limiting state at time ``t`` (global phase as printed in the
    closed forms)."""
    return QutritState(_limit_fock_amplitudes(limit, float(t)), Basis.FOCK)


def limit_concurrence(limit: RegimeLimit, t):
    """Closed-form limiting concurrence; vectorized over ``t``."""
    x = np.asarray(t, dtype=float) / limit.tau_ref
    key = (limit.kind, limit.regime)
    if key == (FamilyKind.FAST, Regime.STRONG_J):
        c, s = np.cos(np.pi * x / 2), np.sin(np.pi * x / 2)
        c2 = 1.5 * (1 - 0.5 * (c ** 4 + 2 * s ** 4))
    elif key == (FamilyKind.FAST, Regime.STRONG_K):
        c2 = 1.5 * (1 - 0.25 * (3 + np.cos(2 * np.pi * x)))
    elif key == (FamilyKind.SLOW, Regime.STRONG_J):
        c2 = 1.5 * (1 - (7.5 + 2 * np.cos(2 * np.pi * x)) / 16)
    elif key == (FamilyKind.SLOW, Regime.STRONG_K):
        c2 = np.full_like(x, 15 / 16)
    elif key == (FamilyKind.EW, Regime.STRONG_J):
        c2 = 1.5 - (8 * np.cos(4 * np.pi * x / 3) + 3 * np.cos(8 * np.pi * x / 3) + 23) / 24
    else:
        c2 = 1.5 - (4 + np.cos(8 * np.pi * x / 3)) / 6
    out = np.sqrt(np.clip(c2, 0.0, None))
    return float(out) if out.ndim == 0 else out


def regime_matrix(regime: Regime, eps1: float, amp: float) -> SymmetricMatrix3:
    """``J = amp, K = 0`` (strong J) or ``J = eps1, K = amp`` (strong K)."""
    if Regime(regime) is Regime.STRONG_J:
        return build_tunneling_matrix(eps1, amp, 0.0)
    return build_tunneling_matrix(eps1, eps1, amp)


def regime_deviation(kind: FamilyKind, regime: Regime, eps1: float, amp: float, t_grid=None) -> float:
    """Largest gap between the exact concurrence and its strong-tunneling limit.

    ``t_grid`` is in units of the family's characteristic time, evaluated from
    the exact spectrum at this amplitude (default: 200 points over the family
    window).
    """
    if not amp > 0:
        raise ValueError("amplitude must be positive")
    kind = FamilyKind(kind)
    if t_grid is None:
        t_grid = np.linspace(0.0, WINDOW[kind], 200)
    decomp = spectral_decomposition(regime_matrix(regime, eps1, amp))
    tau = characteristic_time(kind, decomp.freqs)
    times = np.asarray(t_grid, dtype=float) * tau
    numeric = concurrence_series(family_distribution(kind), decomp, times).values
    limit = limit_concurrence(RegimeLimit(kind, Regime(regime), tau), times)
    return float(np.max(np.abs(numeric - limit)))


def limit_populations(limit: RegimeLimit, t) -> np.ndarray:
    return np.abs(_limit_fock_amplitudes(limit, t)) ** 2


def limit_concurrence_from_state(limit: RegimeLimit, t):
    """Concurrence of :func:`limit_state`, vectorized (consistency check)."""
    out = _concurrence(limit_populations(limit, t))
    return float(out) if np.ndim(out) == 0 else out
