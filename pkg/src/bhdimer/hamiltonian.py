"""Hamiltonian of the extended two-site Bose-Hubbard dimer.

Two bosons on two sites span the Fock basis ``|n> = |2-n, n>`` (``n`` bosons
on site 1).  Units: hbar = 1 and energies are measured in units of the site-1
on-site energy ``eps1``; times are then in units of hbar/eps1.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from .errors import ConfigError, SiteAsymmetry, SymmetryViolation

SQRT2 = math.sqrt(2.0)
REL_TOL = 1e-12


@dataclass(frozen=True)
class HamiltonianParams:
    """Physical couplings of the extended dimer.

    ``J`` and ``K`` are the single- and two-particle tunneling amplitudes,
    ``U`` the on-site interaction and ``eps01`` the inter-site interaction.
    """

    eps0: float = 0.0
    eps1: float = 1.0
    eps01: float = 0.0
    U: float = 0.0
    J: float = 0.0
    K: float = 0.0

    def __post_init__(self):
        for f in fields(self):
            value = float(getattr(self, f.name))
            if not math.isfinite(value):
                raise ValueError(f"{f.name} must be finite, got {value!r}")
            object.__setattr__(self, f.name, value)

    def replace(self, **changes) -> "HamiltonianParams":
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class SymmetricMatrix3:
    """Real symmetric 3x3 matrix stored by its six independent entries."""

    h00: float
    h01: float
    h02: float
    h11: float
    h12: float
    h22: float

    @classmethod
    def from_array(cls, a, atol: float = 0.0) -> "SymmetricMatrix3":
        a = np.asarray(a, dtype=float)
        if a.shape != (3, 3):
            raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
        if np.max(np.abs(a - a.T)) > atol:
            raise SymmetryViolation("matrix is not symmetric")
        return cls(a[0, 0], a[0, 1], a[0, 2], a[1, 1], a[1, 2], a[2, 2])

    def to_array(self) -> np.ndarray:
        return np.array(
            [
                [self.h00, self.h01, self.h02],
                [self.h01, self.h11, self.h12],
                [self.h02, self.h12, self.h22],
            ]
        )

    def scale(self) -> float:
        """Largest entry magnitude."""
        return max(abs(x) for x in (self.h00, self.h01, self.h02, self.h11, self.h12, self.h22))


class RawCouplings:
    """One- and two-body coupling tensors of the second-quantized Hamiltonian.

    ``H = sum eps1[m,n] a+_m a_n + sum eps2[l,m,n,e] a+_l a+_m a_n a_e``.
    Hermiticity (``eps1`` symmetric, ``eps2[l,m,n,e] == eps2[e,n,m,l]``) is
    checked on construction.
    """

    def __init__(self, eps1, eps2):
        eps1 = np.array(eps1, dtype=float)
        eps2 = np.array(eps2, dtype=float)
        if eps1.shape != (2, 2) or eps2.shape != (2, 2, 2, 2):
            raise ValueError("eps1 must be 2x2 and eps2 must be 2x2x2x2")
        scale = max(np.max(np.abs(eps1)), np.max(np.abs(eps2)))
        tol = REL_TOL * scale
        if np.max(np.abs(eps1 - eps1.T)) > tol:
            raise SymmetryViolation("eps1[m][n] != eps1[n][m]")
        if np.max(np.abs(eps2 - eps2.transpose(3, 2, 1, 0))) > tol:
            raise SymmetryViolation("eps2[l][m][n][e] != eps2[e][n][m][l]")
        eps1.setflags(write=False)
        eps2.setflags(write=False)
        self.eps1 = eps1
        self.eps2 = eps2
        self.scale = float(scale)

    def __repr__(self):
        return f"RawCouplings(eps1={self.eps1.tolist()}, eps2=<2x2x2x2>)"


def reduce_couplings(raw: RawCouplings) -> HamiltonianParams:
    """Collapse the raw tensors to ``(eps0, eps1, eps01, U, J, K)``.

    The two sites must be equivalent: equal on-site interactions and equal
    interaction-assisted hopping, otherwise :class:`SiteAsymmetry` is raised.
    """
    e1, e2 = raw.eps1, raw.eps2
    tol = REL_TOL * raw.scale

    u0, u1 = e2[0, 0, 0, 0], e2[1, 1, 1, 1]
    if abs(u0 - u1) > tol:
        raise SiteAsymmetry(f"on-site interactions differ: U0={u0}, U1={u1}")

    j_single = -e1[0, 1]
    # interaction-assisted hopping with a spectator boson on site 0 / site 1
    j_pair0 = -(e2[0, 0, 0, 1] + e2[0, 0, 1, 0])
    j_pair1 = -(e2[1, 1, 1, 0] + e2[1, 1, 0, 1])
    if abs(j_pair0 - j_pair1) > tol:
        raise SiteAsymmetry(f"assisted hopping differs: J0={j_pair0}, J1={j_pair1}")

    eps01 = e2[1, 0, 0, 1] + e2[1, 0, 1, 0] + e2[0, 1, 0, 1] + e2[0, 1, 1, 0]
    return HamiltonianParams(
        eps0=e1[0, 0],
        eps1=e1[1, 1],
        eps01=eps01,
        U=u0,
        J=j_single + j_pair0,
        K=-e2[1, 1, 0, 0],
    )


def embed_params(p: HamiltonianParams) -> RawCouplings:
    """Site-symmetric tensors whose reduction gives back ``p``."""
    eps1 = np.array([[p.eps0, -p.J], [-p.J, p.eps1]])
    eps2 = np.zeros((2, 2, 2, 2))
    eps2[0, 0, 0, 0] = eps2[1, 1, 1, 1] = p.U
    for idx in [(0, 1, 0, 1), (1, 0, 1, 0), (0, 1, 1, 0), (1, 0, 0, 1)]:
        eps2[idx] = p.eps01 / 4
    eps2[0, 0, 1, 1] = eps2[1, 1, 0, 0] = -p.K
    return RawCouplings(eps1, eps2)


def build_extended_matrix(p: HamiltonianParams) -> SymmetricMatrix3:
    """Fock-basis matrix of the extended dimer Hamiltonian."""
    hop = -SQRT2 * p.J
    return SymmetricMatrix3(
        h00=2.0 * (p.eps0 + p.U),
        h01=hop,
        h02=-2.0 * p.K,
        h11=p.eps0 + p.eps1 + p.eps01,
        h12=hop,
        h22=2.0 * (p.eps1 + p.U),
    )


def build_tunneling_matrix(eps1: float, J: float, K: float) -> SymmetricMatrix3:
    """Extended matrix with ``eps0 = eps01 = U = 0``."""
    return build_extended_matrix(HamiltonianParams(eps0=0.0, eps1=eps1, J=J, K=K))


def _ladder_operators():
    # two modes truncated at occupation 2; normal-ordered products with at
    # most two annihilators are exact on the N = 2 sector
    a = np.diag(np.sqrt([1.0, 2.0]), k=1)
    eye = np.eye(3)
    return np.kron(a, eye), np.kron(eye, a)


def operator_matrix(raw: RawCouplings) -> np.ndarray:
    """Build the Fock-basis matrix directly from creation/annihilation operators.

    Independent of :func:`reduce_couplings` and :func:`build_extended_matrix`;
    used as a cross-check of both.
    """
    a = _ladder_operators()
    ad = [op.T for op in a]
    h = np.zeros((9, 9))
    for m, n in itertools.product(range(2), repeat=2):
        h += raw.eps1[m, n] * ad[m] @ a[n]
    for l, m, n, e in itertools.product(range(2), repeat=4):
        c = raw.eps2[l, m, n, e]
        if c:
            h += c * ad[l] @ ad[m] @ a[n] @ a[e]
    # |2-n, n> lives at index 3*(2-n) + n of the product space
    idx = [3 * (2 - n) + n for n in range(3)]
    return h[np.ix_(idx, idx)]


PARAM_KEYS = tuple(f.name for f in fields(HamiltonianParams))


def parse_config_text(text: str) -> dict[str, str]:
    """Parse flat ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if not key or not value:
            raise ConfigError(f"line {lineno}: empty key or value")
        if key in out:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def params_from_mapping(values: dict[str, str]) -> HamiltonianParams:
    unknown = set(values) - set(PARAM_KEYS)
    if unknown:
        raise ConfigError(f"unknown parameter key(s): {', '.join(sorted(unknown))}")
    try:
        return HamiltonianParams(**{k: float(v) for k, v in values.items()})
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def load_params(path) -> HamiltonianParams:
    """Read :class:`HamiltonianParams` from a flat key-value file.

    Missing keys take the defaults (``eps1 = 1``, everything else 0).
    """
    return params_from_mapping(parse_config_text(Path(path).read_text()))
