"""Site-occupation fluctuations of the fast family at strong tunneling.

The mean number of bosons on each site stays at one, while the variance swings
between 1 (a NOON-like state) and 0 (one boson per site).
"""

import numpy as np

from bhdimer.dynamics import Basis, QutritState, mode_occupation_stats
from bhdimer.entanglement import concurrence, population_series
from bhdimer.families import FamilyKind, characteristic_time, family_distribution
from bhdimer.hamiltonian import build_tunneling_matrix
from bhdimer.spectral import spectral_decomposition

d = spectral_decomposition(build_tunneling_matrix(1.0, 1e3, 0.0))
tau = characteristic_time(FamilyKind.FAST, d.freqs)
print(f"{'t/tau':>6} {'mean n1':>8} {'var n1':>8} {'C':>7}")
for x, R in zip(np.linspace(0, 2, 9), population_series(family_distribution(FamilyKind.FAST), d, np.linspace(0, 2, 9) * tau)):
    mean, var = mode_occupation_stats(QutritState.normalized(np.sqrt(R), Basis.FOCK))
    print(f"{x:6.2f} {mean:8.5f} {var:8.5f} {concurrence(R):7.4f}")
