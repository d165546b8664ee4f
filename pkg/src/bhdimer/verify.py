"""Self-verification suite run by ``bhdimer verify``.

Every group cross-checks one computational route against an independent one
(closed form vs. Jacobi iteration, energy-basis phases vs. matrix exponential,
exact dynamics vs. asymptotic formulas, ...).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .dynamics import (
    EnergyDistribution,
    QutritState,
    Basis,
    evolve,
    find_orthogonality_time,
    jacobi_eigh,
    prepare_state,
    propagator_oracle,
    to_fock,
)
from .entanglement import concurrence
from .errors import DegenerateSpectrum
from .families import (
    FamilyKind,
    Regime,
    RegimeLimit,
    characteristic_time,
    family_distribution,
    limit_concurrence,
    limit_concurrence_from_state,
    regime_deviation,
)
from .hamiltonian import (
    HamiltonianParams,
    SymmetricMatrix3,
    build_extended_matrix,
    embed_params,
    operator_matrix,
)
from .simplex import QUBIT_THRESHOLD, Region, edge_concurrence, sample_simplex
from .spectral import spectral_decomposition

Builder = Callable[[HamiltonianParams], SymmetricMatrix3]

SEED = 20240917
STRONG_AMPLITUDE = {Regime.STRONG_J: 1e3, Regime.STRONG_K: 1e4}
LIMIT_TOL = 2e-3


@dataclass(frozen=True)
class GroupResult:
    name: str
    passed: bool
    detail: str


def _spectral_residuals(builder: Builder) -> str:
    worst_eig = worst_res = worst_orth = 0.0
    for J in np.logspace(-2, 2, 8):
        for K in np.logspace(-2, 2, 8):
            M = builder(HamiltonianParams(J=J, K=K))
            m = M.to_array()
            d = spectral_decomposition(M)
            ref, _ = jacobi_eigh(M)
            scale = np.max(np.abs(ref))
            worst_eig = max(worst_eig, np.max(np.abs(d.energies - ref)) / scale)
            res = max(np.linalg.norm(m @ v - e * v) for v, e in zip(d.eigvecs, d.energies))
            worst_res = max(worst_res, res / np.linalg.norm(m, 2))
            worst_orth = max(worst_orth, np.max(np.abs(d.eigvecs @ d.eigvecs.T - np.eye(3))))
    assert worst_eig <= 1e-10, f"eigenvalue mismatch {worst_eig:.2e}"
    assert worst_res <= 1e-10, f"eigenvector residual {worst_res:.2e}"
    assert worst_orth <= 1e-12, f"orthogonality defect {worst_orth:.2e}"
    return f"eig {worst_eig:.1e}, residual {worst_res:.1e}, orthogonality {worst_orth:.1e}"


def _route_equivalence(builder: Builder) -> str:
    # spectral route on the builder's matrix; oracle route on the matrix
    # assembled from creation/annihilation operators
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(25):
        J, K = rng.uniform(0.0, 100.0, 2)
        t = rng.uniform(0.0, 10.0)
        params = HamiltonianParams(J=J, K=K)
        d = spectral_decomposition(builder(params))
        psi = QutritState.normalized(rng.normal(size=3) + 1j * rng.normal(size=3), Basis.ENERGY)
        spectral = to_fock(evolve(psi, d.energies, t), d.eigvecs).amps
        oracle_h = SymmetricMatrix3.from_array(operator_matrix(embed_params(params)), atol=1e-12)
        oracle = propagator_oracle(oracle_h, t) @ to_fock(psi, d.eigvecs).amps
        worst = max(worst, float(np.max(np.abs(spectral - oracle))))
    assert worst <= 1e-10, f"max amplitude deviation {worst:.2e}"
    return f"max amplitude deviation {worst:.1e}"


def _orthogonality_times(builder: Builder) -> str:
    worst = 0.0
    for J, K in ((1.0, 0.0), (1.0, 1.0), (3.0, 0.5), (0.2, 2.0)):
        d = spectral_decomposition(builder(HamiltonianParams(J=J, K=K)))
        for kind in (FamilyKind.FAST, FamilyKind.SLOW):
            tau = characteristic_time(kind, d.freqs)
            found = find_orthogonality_time(family_distribution(kind), d.energies, 3 * tau)
            assert found is not None, f"{kind.name} at J={J}, K={K}: no orthogonality time"
            worst = max(worst, abs(found / tau - 1))
        if K == 0.0:
            tau = 2 * math.pi / (3 * d.freqs.w21)
            found = find_orthogonality_time(family_distribution(FamilyKind.EW), d.energies, 3 * tau)
            assert found is not None, "EW: no orthogonality time"
            worst = max(worst, abs(found / tau - 1))
    assert worst <= 1e-8, f"relative error {worst:.2e}"
    return f"max relative error {worst:.1e}"


def _limit_regressions(builder: Builder) -> str:
    del builder  # the limits are defined for the pure tunneling matrix
    worst = 0.0
    for kind in FamilyKind:
        for regime in Regime:
            dev = regime_deviation(kind, regime, 1.0, STRONG_AMPLITUDE[regime])
            assert dev < LIMIT_TOL, f"{kind.name}/{regime.name}: deviation {dev:.2e}"
            worst = max(worst, dev)
            limit = RegimeLimit(kind, regime, 1.0)
            t = np.linspace(0.0, 3.0, 61)
            gap = np.max(np.abs(limit_concurrence(limit, t) - limit_concurrence_from_state(limit, t)))
            assert gap <= 1e-12, f"{kind.name}/{regime.name}: state/formula gap {gap:.2e}"
    return f"max deviation {worst:.1e} (< {LIMIT_TOL})"


def _simplex_thresholds(builder: Builder) -> str:
    del builder
    checks = {
        "qubit vertex": (concurrence((0.5, 0.5, 0.0)), QUBIT_THRESHOLD),
        "edge midpoint": (edge_concurrence(0.25), math.sqrt(15) / 4),
        "centre": (concurrence((1 / 3, 1 / 3, 1 / 3)), 1.0),
        "simplex vertex": (concurrence((1.0, 0.0, 0.0)), 0.0),
    }
    for name, (got, want) in checks.items():
        assert abs(got - want) <= 1e-12, f"{name}: {got!r} != {want!r}"
    points = sample_simplex(100)
    for pt in points:
        if pt.region is not Region.OUTSIDE:
            assert pt.concurrence >= QUBIT_THRESHOLD - 1e-12, f"inner point {pt.r} below threshold"
        if pt.concurrence < QUBIT_THRESHOLD - 1e-12:
            assert pt.region is Region.OUTSIDE, f"sub-threshold point {pt.r} not outside"
    return f"threshold values exact; {len(points)} grid points consistent"


def _degenerate_input(builder: Builder) -> str:
    try:
        spectral_decomposition(builder(HamiltonianParams(eps1=0.0)))
    except DegenerateSpectrum:
        return "eps1 = J = K = 0 rejected as degenerate (expected)"
    raise AssertionError("degenerate spectrum was not reported")


GROUPS = {
    "spectral residuals": _spectral_residuals,
    "route equivalence": _route_equivalence,
    "orthogonality times": _orthogonality_times,
    "limit regressions": _limit_regressions,
    "simplex thresholds": _simplex_thresholds,
    "degenerate input": _degenerate_input,
}


def run_verification(builder: Builder = build_extended_matrix) -> list[GroupResult]:
    """Run every group; ``builder`` can be swapped to test that faults are caught."""
    results = []
    for name, check in GROUPS.items():
        try:
            detail = check(builder)
        except Exception as exc:  # a failing group must not stop the others
            results.append(GroupResult(name, False, f"{type(exc).__name__}: {exc}"))
        else:
            results.append(GroupResult(name, True, detail))
    return results
