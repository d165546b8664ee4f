import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from bhdimer.dynamics import jacobi_eigh
from bhdimer.errors import BranchUnavailable, DegenerateSpectrum
from bhdimer.hamiltonian import HamiltonianParams, SymmetricMatrix3, build_extended_matrix, build_tunneling_matrix
from bhdimer.spectral import (
    characteristic_coefficients,
    closed_form_eigenvalues,
    eigenvectors,
    fock_projection,
    spectral_decomposition,
    transition_frequencies,
    tunneling_spectrum,
)

S5 = math.sqrt(5)
amp = st.floats(1e-2, 1e2)


def det3(a):
    # cofactor expansion, kept independent of the package's own routine
    return sum((-1) ** j * a[0][j] * np.linalg.det(np.delete(np.delete(a, 0, 0), j, 1)) for j in range(3))


def test_coefficients_diagonal_and_zero():
    assert characteristic_coefficients(SymmetricMatrix3(0, 0, 0, 1, 0, 2)) == (-3, 2, 0)
    assert characteristic_coefficients(SymmetricMatrix3(0, 0, 0, 0, 0, 0)) == (0, 0, 0)


def test_coefficients_against_determinant_oracle():
    m = build_tunneling_matrix(1, 1, 1)
    a = m.to_array()
    alpha, beta, gamma = characteristic_coefficients(m)
    # char poly det(E I - A) evaluated at E = 0, 1, -1 pins down the coefficients
    for e in (0.0, 1.0, -1.0, 2.5):
        assert e ** 3 + alpha * e ** 2 + beta * e + gamma == pytest.approx(det3(e * np.eye(3) - a), abs=1e-12)


def test_diagonal_eigenvalues():
    e, *_ = closed_form_eigenvalues(SymmetricMatrix3(0, 0, 0, 1, 0, 2))
    np.testing.assert_allclose(e, [0, 1, 2], atol=1e-14)


@pytest.mark.parametrize("J, K", [(1, 0), (0, 1)])
def test_equally_spaced_examples(J, K):
    want = [1 - S5, 1, 1 + S5]
    np.testing.assert_allclose(closed_form_eigenvalues(build_tunneling_matrix(1, J, K))[0], want, atol=1e-14)
    np.testing.assert_allclose(tunneling_spectrum(1, J, K), want, atol=1e-14)


def test_tunneling_spectrum_generic():
    e = tunneling_spectrum(1, 1, 1)
    phi = math.acos(-12 * math.sqrt(3) / 27)
    assert phi == pytest.approx(2.44932464, abs=1e-8)
    want = [1 + 2 / math.sqrt(3) * 3 * math.cos((phi + 2 * math.pi * k) / 3) for k in range(3)]
    np.testing.assert_allclose(e, sorted(want), rtol=1e-14)
    np.testing.assert_allclose(e, np.linalg.eigvalsh(build_tunneling_matrix(1, 1, 1).to_array()), rtol=1e-12)
    np.testing.assert_allclose(e, jacobi_eigh(build_tunneling_matrix(1, 1, 1))[0], rtol=1e-12)


def test_identity_eigenvectors_for_diagonal_matrix():
    d = spectral_decomposition(SymmetricMatrix3(0, 0, 0, 1, 0, 2))
    np.testing.assert_allclose(d.eigvecs, np.eye(3), atol=1e-14)


@pytest.mark.parametrize("J, K", [(1, 1), (0, 1), (1e-3, 1e4), (1e2, 1e-2)])
def test_eigenvector_residual_and_orthogonality(J, K):
    m = build_tunneling_matrix(1, J, K)
    d = spectral_decomposition(m)
    a = m.to_array()
    for e, v in zip(d.energies, d.eigvecs):
        assert np.linalg.norm(a @ v - e * v) < 1e-10 * np.linalg.norm(a, 2)
    np.testing.assert_allclose(d.eigvecs @ d.eigvecs.T, np.eye(3), atol=1e-12)


def test_projection_branch_unavailable_without_single_hopping():
    m = build_tunneling_matrix(1, 0, 1)
    e, *_ = closed_form_eigenvalues(m)
    with pytest.raises(BranchUnavailable):
        fock_projection(m, e[0])
    assert eigenvectors(m, e).shape == (3, 3)


def test_projection_branch_matches_eigh():
    m = build_tunneling_matrix(1, 0.7, 0.3)
    e, *_ = closed_form_eigenvalues(m)
    w, u = np.linalg.eigh(m.to_array())
    for k in range(3):
        v = fock_projection(m, e[k])
        assert abs(abs(v @ u[:, k]) - 1) < 1e-12


def test_sign_convention_last_component_positive():
    d = spectral_decomposition(build_tunneling_matrix(1, 3, 0.5))
    assert np.all(d.eigvecs[:, 2] > 0)


def test_degenerate_spectrum_rejected():
    with pytest.raises(DegenerateSpectrum):
        spectral_decomposition(SymmetricMatrix3(1, 0, 0, 1, 0, 2))
    with pytest.raises(DegenerateSpectrum):
        closed_form_eigenvalues(SymmetricMatrix3(0, 0, 0, 0, 0, 0))


def test_frequencies_examples():
    assert transition_frequencies([0, 1, 2]) == (1, 1, 2)
    f = transition_frequencies([1 - S5, 1, 1 + S5])
    np.testing.assert_allclose(f, [S5, S5, 2 * S5], rtol=1e-15)
    e, p, _, phi = closed_form_eigenvalues(build_tunneling_matrix(1, 1, 1))
    f = transition_frequencies(e, p, phi)
    assert f.w31 == f.w32 + f.w21


def test_frequencies_closed_form_mismatch_detected():
    e, p, _, phi = closed_form_eigenvalues(build_tunneling_matrix(1, 1, 1))
    with pytest.raises(ValueError):
        transition_frequencies(e + [0, 0.1, 0], p, phi)


@given(amp, amp, st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3))
def test_trace_and_determinant(J, K, eps0, eps01, U):
    m = build_extended_matrix(HamiltonianParams(eps0=eps0, eps01=eps01, U=U, J=J, K=K))
    a = m.to_array()
    try:
        d = spectral_decomposition(m)
    except DegenerateSpectrum:
        assume(False)
    norm = np.linalg.norm(a, 2)
    assert abs(d.energies.sum() - np.trace(a)) <= 1e-10 * norm
    assert abs(np.prod(d.energies) - np.linalg.det(a)) <= 1e-9 * norm ** 3
    recon = (d.eigvecs.T * d.energies) @ d.eigvecs
    assert np.max(np.abs(recon - a)) <= 1e-9 * norm
    assert np.all(np.diff(d.energies) > 0)
    np.testing.assert_allclose(np.sum(d.eigvecs ** 2, axis=1), 1, atol=1e-12)


@given(st.floats(1e-2, 1e2), st.booleans())
def test_equal_spacing_when_one_amplitude_vanishes(a, use_j):
    J, K = (a, 0.0) if use_j else (0.0, a)
    e = closed_form_eigenvalues(build_tunneling_matrix(1, J, K))[0]
    eps = math.sqrt(1 + 4 * a * a)
    assert abs((e[1] - e[0]) - (e[2] - e[1])) <= 1e-10 * eps


def test_tunneling_spectrum_agrees_on_grid():
    grid = np.logspace(-2, 2, 20)
    for J in grid:
        for K in grid:
            want = closed_form_eigenvalues(build_tunneling_matrix(1, J, K))[0]
            got = tunneling_spectrum(1, J, K)
            assert np.max(np.abs(got - want)) <= 1e-9 * np.max(np.abs(want))
