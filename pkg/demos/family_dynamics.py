"""Fast, slow and equally-weighted superpositions under tunneling.

Each family is evolved on its own time unit tau.  The fast and slow states hit
an orthogonal state at t = tau; the survival probability shows it.
"""

import numpy as np

from bhdimer.dynamics import find_orthogonality_time, survival_amplitude
from bhdimer.entanglement import concurrence_series
from bhdimer.families import FamilyKind, characteristic_time, family_distribution
from bhdimer.hamiltonian import build_tunneling_matrix
from bhdimer.spectral import spectral_decomposition

d = spectral_decomposition(build_tunneling_matrix(1.0, 1.0, 0.0))
x = np.linspace(0.0, 2.0, 9)
for kind in FamilyKind:
    dist = family_distribution(kind)
    tau = characteristic_time(kind, d.freqs)
    found = find_orthogonality_time(dist, d.energies, 3 * tau)
    c = concurrence_series(dist, d, x * tau).values
    s = np.abs(survival_amplitude(dist, d.energies, x * tau))
    print(f"{kind.value}: tau = {tau:.6f}, numerical orthogonality time = {found:.6f}")
    print("   t/tau " + " ".join(f"{v:6.2f}" for v in x))
    print("       C " + " ".join(f"{v:6.3f}" for v in c))
    print("  |A(t)| " + " ".join(f"{v:6.3f}" for v in s))
