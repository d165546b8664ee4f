"""Closed-form spectral analysis of real symmetric 3x3 matrices.

Eigenvalues come from the trigonometric solution of the characteristic cubic,
eigenvectors from the explicit Fock-projection formulas with a null-space
fallback.  Eigenvector rows follow ``eigvecs[k, n] = <n|E_k>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import BranchUnavailable, DegenerateSpectrum
from .hamiltonian import SymmetricMatrix3

DEGENERACY_TOL = 1e-14
BRANCH_TOL = 1e-12
RESIDUAL_TOL = 1e-10
# below this |<2|E_k>| the sign is fixed by the largest entry instead
SIGN_TOL = 1e-8


class Frequencies(NamedTuple):
    w21: float
    w32: float
    w31: float


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Ordered spectrum, eigenvectors and cubic auxiliaries of a 3x3 matrix."""

    energies: np.ndarray
    eigvecs: np.ndarray
    p: float
    q: float
    phi: float
    freqs: Frequencies


def _minor_sum(h: SymmetricMatrix3) -> float:
    return (
        (h.h00 * h.h11 - h.h01 ** 2)
        + (h.h11 * h.h22 - h.h12 ** 2)
        + (h.h00 * h.h22 - h.h02 ** 2)
    )


def _det(h: SymmetricMatrix3) -> float:
    return (
        h.h00 * (h.h11 * h.h22 - h.h12 ** 2)
        - h.h01 * (h.h01 * h.h22 - h.h12 * h.h02)
        + h.h02 * (h.h01 * h.h12 - h.h11 * h.h02)
    )


def characteristic_coefficients(M: SymmetricMatrix3) -> tuple[float, float, float]:
    """Coefficients of ``E**3 + alpha E**2 + beta E + gamma``.

    ``alpha = -tr M``, ``beta`` is the sum of the three diagonal 2x2 minors
    and ``gamma = -det M``.
    """
    alpha = -(M.h00 + M.h11 + M.h22)
    return alpha, _minor_sum(M), -_det(M)


def _cubic_auxiliaries(M: SymmetricMatrix3) -> tuple[float, float, float]:
    """Return ``(shift, p, q)`` of the depressed cubic.

    ``p`` and ``q`` are invariant under ``M -> M - s I``; evaluating them on the
    trace-free matrix avoids the cancellation in ``3 beta - alpha**2``.
    """
    shift = (M.h00 + M.h11 + M.h22) / 3.0
    b = SymmetricMatrix3(M.h00 - shift, M.h01, M.h02, M.h11 - shift, M.h12, M.h22 - shift)
    p = _minor_sum(b) / 3.0
    q = _det(b) / 2.0
    return shift, p, q


def _check_discriminant(p: float, q: float, scale: float) -> None:
    disc = p ** 3 + q ** 2
    if not disc < -DEGENERACY_TOL * scale ** 6:
        raise DegenerateSpectrum(f"discriminant {disc:.3e} is not negative (scale {scale:.3e})")


def _clamped_arccos(x: float) -> float:
    return math.acos(min(1.0, max(-1.0, x)))


def closed_form_eigenvalues(M: SymmetricMatrix3):
    """Trigonometric eigenvalues of a symmetric 3x3 matrix.

    Returns
    -------
    energies : ndarray, shape (3,)
        Strictly ascending eigenvalues.
    p, q : float
        Depressed-cubic parameters, ``p < 0`` for a non-degenerate spectrum.
    phi : float
        ``arccos(q / |p|**1.5)`` in ``[0, pi]``.

    Raises
    ------
    DegenerateSpectrum
        If the discriminant ``p**3 + q**2`` is not safely negative.
    """
    shift, p, q = _cubic_auxiliaries(M)
    _check_discriminant(p, q, M.scale())
    r = math.sqrt(-p)
    phi = _clamped_arccos(q / r ** 3)
    energies = np.array(
        [shift + 2.0 * r * math.cos((phi + 2.0 * math.pi * k) / 3.0) for k in (1, 2, 3)]
    )
    return np.sort(energies), p, q, phi


def tunneling_spectrum(eps1: float, J: float, K: float) -> np.ndarray:
    """Spectrum of the pure-tunneling dimer (no interactions, ``eps0 = 0``).

    ``E_k = eps1 + (2/sqrt 3) e cos((phi + 2 pi k)/3)`` with
    ``e = sqrt(eps1**2 + 4 (J**2 + K**2))`` and
    ``phi = arccos(-12 sqrt(3) J**2 K / e**3)``.  When ``J K = 0`` the levels
    are equally spaced, ``E_k = eps1 + (k - 2) e``.
    """
    e = math.sqrt(eps1 ** 2 + 4.0 * (J ** 2 + K ** 2))
    if e == 0.0:
        raise DegenerateSpectrum("all couplings vanish")
    if J * K == 0.0:
        return np.array([eps1 - e, eps1, eps1 + e])
    phi = _clamped_arccos(-12.0 * math.sqrt(3.0) * J ** 2 * K / e ** 3)
    p = -(e ** 2) / 3.0
    q = (-p) ** 1.5 * math.cos(phi)
    scale = max(2.0 * abs(eps1), math.sqrt(2.0) * abs(J), 2.0 * abs(K))
    _check_discriminant(p, q, scale)
    energies = [eps1 + 2.0 / math.sqrt(3.0) * e * math.cos((phi + 2.0 * math.pi * k) / 3.0) for k in (1, 2, 3)]
    return np.sort(np.array(energies))


def fock_projection(M: SymmetricMatrix3, energy: float) -> np.ndarray:
    """Eigenvector from the explicit Fock-basis projection formulas.

    Valid when ``H01 != 0`` and ``H01 H02 - H12 (H00 - E) != 0``; otherwise
    :class:`BranchUnavailable` is raised.  The ``|2>`` component is positive.
    """
    scale = M.scale()
    h01, h02, h12 = M.h01, M.h02, M.h12
    d0, d1, d2 = M.h00 - energy, M.h11 - energy, M.h22 - energy
    den = h01 * h02 - h12 * d0
    if abs(h01) <= BRANCH_TOL * scale or abs(den) <= BRANCH_TOL * scale ** 2:
        raise BranchUnavailable(f"vanishing denominator for E = {energy!r}")
    a = (d0 * d2 - h02 ** 2) / den
    norm2 = (
        (h01 ** 2 + d1 ** 2) / h01 ** 2 * a ** 2
        + 2.0 * h12 * d1 / h01 ** 2 * a
        + (h01 ** 2 + h12 ** 2) / h01 ** 2
    )
    c2 = norm2 ** -0.5
    c1 = a * c2
    c0 = -(d1 / h01 * a + h12 / h01) * c2
    v = np.array([c0, c1, c2])
    return v / np.linalg.norm(v)


def nullspace_vector(M: SymmetricMatrix3, energy: float) -> np.ndarray:
    """Unit null vector of ``M - E I`` from the best-conditioned row cross product."""
    rows = M.to_array() - energy * np.eye(3)
    candidates = [np.cross(rows[i], rows[j]) for i, j in ((0, 1), (0, 2), (1, 2))]
    best = max(candidates, key=np.linalg.norm)
    norm = np.linalg.norm(best)
    if norm == 0.0:
        raise DegenerateSpectrum(f"M - E I has rank < 2 at E = {energy!r}")
    return best / norm


def _fix_sign(v: np.ndarray) -> np.ndarray:
    if abs(v[2]) > SIGN_TOL:
        return v if v[2] > 0 else -v
    k = int(np.argmax(np.abs(v)))  # argmax returns the lowest index on ties
    return v if v[k] > 0 else -v


def _residual(m: np.ndarray, v: np.ndarray, energy: float) -> float:
    return float(np.linalg.norm(m @ v - energy * v))


def eigenvectors(M: SymmetricMatrix3, energies) -> np.ndarray:
    """Unit eigenvectors for the given (non-degenerate) eigenvalues.

    Row ``k`` holds ``<n|E_k>``.  Sign convention: ``<2|E_k> > 0``; if that
    component is negligible the largest entry is made positive.

    The projection formulas lose accuracy when ``|H01|`` is small compared
    with the other couplings, so the null-space vector is also formed and the
    candidate with the smaller residual wins.
    """
    m = M.to_array()
    tol = RESIDUAL_TOL * max(np.linalg.norm(m, 2), np.finfo(float).tiny)
    rows = []
    for energy in energies:
        v = nullspace_vector(M, energy)
        try:
            w = fock_projection(M, energy)
        except BranchUnavailable:
            pass
        else:
            if _residual(m, w, energy) < _residual(m, v, energy):
                v = w
        if not _residual(m, v, energy) <= tol:
            raise DegenerateSpectrum(f"no accurate eigenvector for E = {energy!r}")
        rows.append(_fix_sign(v))
    return np.array(rows)


def transition_frequencies(energies, p: float | None = None, phi: float | None = None) -> Frequencies:
    """Bohr frequencies ``w_ij = E_i - E_j`` (hbar = 1) of an ascending spectrum.

    With ``p`` and ``phi`` supplied, the trigonometric closed forms are checked
    against the energy differences.
    """
    e1, e2, e3 = (float(x) for x in energies)
    w21, w32 = e2 - e1, e3 - e2
    freqs = Frequencies(w21, w32, w32 + w21)
    if p is not None and phi is not None:
        amp = 2.0 * math.sqrt(3.0 * abs(p))
        closed = (amp * math.sin(phi / 3.0), amp * math.cos((math.pi + 2.0 * phi) / 6.0))
        tol = 1e-10 * max(1.0, freqs.w31)
        if abs(closed[0] - w21) > tol or abs(closed[1] - w32) > tol:
            raise ValueError(
                f"closed-form frequencies {closed} disagree with energy differences {(w21, w32)}"
            )
    return freqs


def spectral_decomposition(M: SymmetricMatrix3) -> SpectralDecomposition:
    """Full closed-form decomposition of ``M``."""
    energies, p, q, phi = closed_form_eigenvalues(M)
    vecs = eigenvectors(M, energies)
    freqs = transition_frequencies(energies, p, phi)
    energies.setflags(write=False)
    vecs.setflags(write=False)
    return SpectralDecomposition(energies, vecs, p, q, phi, freqs)
