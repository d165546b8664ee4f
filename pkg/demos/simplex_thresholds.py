"""Entanglement over the simplex of energy distributions.

If the Hamiltonian is diagonal in the Fock basis, the populations never move
and the concurrence is fixed by the weights alone.  The inner triangle
(max r_i <= 1/2) holds the distributions that can reach an orthogonal state,
and all of them carry at least the two-qubit value sqrt(3)/2.
"""

import math

from bhdimer.entanglement import concurrence
from bhdimer.simplex import QUBIT_THRESHOLD, Region, edge_concurrence, sample_simplex

pts = sample_simplex(60)
by_region = {region: [p.concurrence for p in pts if p.region is region] for region in Region}
for region, values in by_region.items():
    print(f"{region.value:>9}: {len(values):5d} points, C in [{min(values):.4f}, {max(values):.4f}]")
print(f"threshold sqrt(3)/2 = {QUBIT_THRESHOLD:.4f}")

print("\nalong an edge {1/2, r, 1/2 - r} of the inner triangle:")
for r in (0.01, 0.1, 0.2, 0.25, 0.3, 0.49):
    print(f"  r = {r:4.2f}: C = {edge_concurrence(r):.4f}")
print(f"  maximum sqrt(15)/4 = {math.sqrt(15) / 4:.4f} at r = 1/4")

# The converse does not hold: just outside the inner triangle the concurrence
# can still sit above the threshold.
r = (0.505, 0.2475, 0.2475)
print(f"\n{r} lies outside but has C = {concurrence(r):.4f} > {QUBIT_THRESHOLD:.4f}")
