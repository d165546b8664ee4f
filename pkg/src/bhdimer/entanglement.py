"""Mode entanglement between the two sites.

For a pure two-boson state both single-site reduced density matrices are
diagonal in the occupation basis with spectrum ``{R_n}``, so every quantity
here depends only on the Fock populations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .dynamics import EnergyDistribution, evolve_amplitudes, prepare_state
from .spectral import SpectralDecomposition

DIM = 3


def linear_entropy(R) -> float:
    R = np.asarray(R, dtype=float)
    return float(1.0 - np.sum(R ** 2, axis=-1))


def _concurrence(R) -> np.ndarray:
    R = np.asarray(R, dtype=float)
    s = 1.0 - np.sum(R ** 2, axis=-1)
    c = np.sqrt(np.clip(DIM / (DIM - 1) * s, 0.0, None))
    return np.minimum(c, 1.0)


def concurrence(R) -> float:
    """Qutrit concurrence ``sqrt(3/2 (1 - sum R_n^2))``, clipped to ``[0, 1]``."""
    return float(_concurrence(R))


def diagonal_concurrence(dist: EnergyDistribution) -> float:
    """Concurrence when the Hamiltonian is diagonal in the Fock basis.

    The eigenbasis is then the Fock basis, so ``R_n = r_n`` at all times and
    for all phases.
    """
    return concurrence(dist.r)


class TimeUnit(enum.Enum):
    ABSOLUTE = "absolute"
    OVER_TAU = "over_tau"


@dataclass(frozen=True, eq=False)
class ConcurrenceSeries:
    times: np.ndarray
    values: np.ndarray
    time_unit: TimeUnit = TimeUnit.ABSOLUTE
    tau: float | None = None

    def __post_init__(self):
        if len(self.times) != len(self.values):
            raise ValueError("times and values differ in length")
        if self.time_unit is TimeUnit.OVER_TAU and not self.tau:
            raise ValueError("OVER_TAU series needs a positive tau")


def population_series(dist: EnergyDistribution, decomp: SpectralDecomposition, times) -> np.ndarray:
    """Fock populations on a time grid, shape ``(len(times), 3)``."""
    amps = evolve_amplitudes(prepare_state(dist).amps, decomp.energies, times)
    return np.abs(amps @ decomp.eigvecs) ** 2


def concurrence_series(
    dist: EnergyDistribution,
    decomp: SpectralDecomposition,
    times,
    tau: float | None = None,
) -> ConcurrenceSeries:
    """Concurrence of the evolved state on an absolute time grid.

    If ``tau`` is given the returned series is labelled in units of ``t/tau``
    (the values are still computed at the absolute times).
    """
    times = np.asarray(times, dtype=float)
    values = _concurrence(population_series(dist, decomp, times))
    if tau is None:
        return ConcurrenceSeries(times, values)
    return ConcurrenceSeries(times / tau, values, TimeUnit.OVER_TAU, tau)
