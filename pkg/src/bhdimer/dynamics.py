"""State preparation and exact unitary dynamics of the dimer qutrit.

A pure state is stored either in the energy basis ``{|E_k>}`` or in the Fock
basis ``{|n>}``; ``hbar = 1`` throughout.  Two independent propagation routes
are provided: phase evolution in the energy basis and a scaling-and-squaring
matrix exponential of the Fock-basis matrix.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import InvalidDistribution
from .hamiltonian import SymmetricMatrix3

NORM_TOL = 1e-12
TWO_PI = 2.0 * math.pi
OCCUPATIONS = np.arange(3.0)


class Basis(enum.Enum):
    FOCK = "fock"
    ENERGY = "energy"


@dataclass(frozen=True, eq=False)
class EnergyDistribution:
    """Weights ``r_k`` and phases ``theta_k`` of a state in the energy basis."""

    r: np.ndarray
    theta: np.ndarray

    def __init__(self, r, theta=(0.0, 0.0, 0.0)):
        r = np.array(r, dtype=float)
        theta = np.array(theta, dtype=float)
        if r.shape != (3,) or theta.shape != (3,):
            raise InvalidDistribution("r and theta must each have three entries")
        if np.any(r < 0.0) or abs(r.sum() - 1.0) > NORM_TOL:
            raise InvalidDistribution(f"not a probability triad: {r.tolist()}")
        theta = np.mod(theta, TWO_PI)
        r.setflags(write=False)
        theta.setflags(write=False)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "theta", theta)

    def __repr__(self):
        return f"EnergyDistribution(r={self.r.tolist()}, theta={self.theta.tolist()})"


@dataclass(frozen=True, eq=False)
class QutritState:
    amps: np.ndarray
    basis: Basis

    def __init__(self, amps, basis: Basis):
        amps = np.array(amps, dtype=complex)
        if amps.shape != (3,):
            raise ValueError("a qutrit state has three amplitudes")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (|psi|^2 = {norm2!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)
        object.__setattr__(self, "basis", Basis(basis))

    @classmethod
    def normalized(cls, amps, basis: Basis) -> "QutritState":
        amps = np.asarray(amps, dtype=complex)
        return cls(amps / np.linalg.norm(amps), basis)

    def __repr__(self):
        return f"QutritState({np.round(self.amps, 12).tolist()}, {self.basis.name})"


def _require(state: QutritState, basis: Basis) -> None:
    if state.basis is not basis:
        raise ValueError(f"expected a {basis.name} basis state, got {state.basis.name}")


def prepare_state(dist: EnergyDistribution) -> QutritState:
    """``sum_k sqrt(r_k) exp(i theta_k) |E_k>``."""
    return QutritState(np.sqrt(dist.r) * np.exp(1j * dist.theta), Basis.ENERGY)


def evolve(state: QutritState, energies, t: float) -> QutritState:
    _require(state, Basis.ENERGY)
    phases = np.exp(-1j * np.asarray(energies, dtype=float) * t)
    return QutritState(state.amps * phases, Basis.ENERGY)


def evolve_amplitudes(amps, energies, times) -> np.ndarray:
    """Energy-basis amplitudes on a time grid, shape ``(len(times), 3)``."""
    times = np.atleast_1d(np.asarray(times, dtype=float))
    return np.asarray(amps)[None, :] * np.exp(-1j * np.outer(times, energies))


def to_fock(state: QutritState, eigvecs) -> QutritState:
    """``<n|psi> = sum_k a_k <n|E_k>`` with ``eigvecs[k, n] = <n|E_k>``."""
    _require(state, Basis.ENERGY)
    return QutritState(np.asarray(eigvecs).T @ state.amps, Basis.FOCK)


def to_energy(state: QutritState, eigvecs) -> QutritState:
    _require(state, Basis.FOCK)
    return QutritState(np.asarray(eigvecs) @ state.amps, Basis.ENERGY)


def populations(state: QutritState) -> np.ndarray:
    """Fock populations ``R_n = |<n|psi>|^2``; these are also the spectra of
    both single-site reduced density matrices."""
    _require(state, Basis.FOCK)
    return np.abs(state.amps) ** 2


def survival_amplitude(dist: EnergyDistribution, energies, t):
    """``<psi(0)|psi(t)> = sum_k r_k exp(-i E_k t)``; vectorized over ``t``."""
    t = np.asarray(t, dtype=float)
    out = np.exp(-1j * np.multiply.outer(t, np.asarray(energies, dtype=float))) @ dist.r
    return complex(out) if out.ndim == 0 else out


def find_orthogonality_time(dist: EnergyDistribution, energies, t_max: float, tol: float = 1e-9):
    """First time in ``(0, t_max]`` at which the survival amplitude vanishes.

    The modulus is scanned with 100 samples per period of the fastest Bohr
    frequency (step at most 0.01); each local minimum is refined by a bracketed
    root search on ``d|A|^2/dt`` and accepted if ``|A| < tol``.  Returns
    ``None`` when no minimum dips below ``tol``.
    """
    if t_max <= 0 or tol <= 0:
        raise ValueError("t_max and tol must be positive")
    e = np.asarray(energies, dtype=float)
    e = e - e.min()
    spread = float(e.max())
    if spread == 0.0:
        return None
    r = dist.r

    def amp(t):
        return np.exp(-1j * np.multiply.outer(t, e)) @ r

    def slope(t):
        # (1/2) d|A|^2/dt
        ph = np.exp(-1j * np.multiply.outer(t, e))
        return np.real(np.conj(ph @ r) * (ph @ (-1j * e * r)))

    step = min(0.01, TWO_PI / (100.0 * spread))
    n = int(math.ceil(t_max / step)) + 1
    grid = np.linspace(0.0, t_max, n)
    g = slope(grid)
    for i in np.flatnonzero((g[:-1] < 0.0) & (g[1:] >= 0.0)):
        a, b = grid[i], grid[i + 1]
        t_min = b if g[i + 1] == 0.0 else brentq(slope, a, b, xtol=1e-300, rtol=4 * np.finfo(float).eps)
        if abs(amp(t_min)) < tol:
            return float(t_min)
    if g[-1] < 0.0 and abs(amp(t_max)) < tol:
        return float(t_max)
    return None


def propagator_oracle(M: SymmetricMatrix3, t: float) -> np.ndarray:
    """``exp(-i M t)`` by scaling and squaring of a truncated Taylor series.

    Independent of the spectral route; used to cross-check it.
    """
    x = -1j * t * M.to_array()
    norm = float(np.max(np.sum(np.abs(x), axis=1)))
    squarings = max(0, math.ceil(math.log2(norm / 0.5))) if norm > 0 else 0
    y = x / 2.0 ** squarings
    result = np.eye(3, dtype=complex)
    term = np.eye(3, dtype=complex)
    for k in range(1, 60):
        term = term @ y / k
        result = result + term
        if np.max(np.abs(term)) < 1e-17:
            break
    for _ in range(squarings):
        result = result @ result
    return result


def jacobi_eigh(M: SymmetricMatrix3, max_sweeps: int = 50):
    """Cyclic Jacobi eigensolver (oracle for the closed-form route).

    Returns ascending eigenvalues and the matching eigenvectors as rows.
    """
    a = M.to_array()
    v = np.eye(3)
    scale = np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = math.sqrt(a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2)
        if off <= 1e-17 * scale:
            break
        for p, q in ((0, 1), (0, 2), (1, 2)):
            if a[p, q] == 0.0:
                continue
            theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
            tan = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
            c = 1.0 / math.sqrt(tan * tan + 1.0)
            s = tan * c
            rot = np.eye(3)
            rot[p, p] = rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
            v = v @ rot
    w = np.diag(a).copy()
    order = np.argsort(w)
    return w[order], v[:, order].T


def mode_occupation_stats(state: QutritState) -> tuple[float, float]:
    """Mean and variance of the site-1 occupation ``n_1``."""
    R = populations(state)
    mean = float(OCCUPATIONS @ R)
    var = float(OCCUPATIONS ** 2 @ R) - mean ** 2
    return mean, max(var, 0.0)


def bell_decomposition(state: QutritState) -> np.ndarray:
    """Coefficients on the symmetric Bell vectors ``(Phi+, Phi-, Psi+)``.

    Labelling the two bosons A and B, ``|0> = |00>_AB``, ``|2> = |11>_AB`` and
    ``|1> = Psi+``.
    """
    _require(state, Basis.FOCK)
    c0, c1, c2 = state.amps
    s = math.sqrt(0.5)
    return np.array([s * (c0 + c2), s * (c0 - c2), c1])
