"""
Two routes to skew energy
=========================

The spectral route sums eigenvalue magnitudes of the skew-adjacency matrix.
The integral route only needs the even coefficients of its characteristic
polynomial. Both should land on the same number.
"""

import numpy as np

from skewenergy import OrientedGraph, energy_coulson, energy_spectral, skew_matrix, spectrum

# a 4-cycle with every arc pointing the same way around
c4 = OrientedGraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print(skew_matrix(c4))

# magnitudes come in pairs; two of them vanish here
print("magnitudes:", spectrum(c4))
print("spectral:", energy_spectral(c4))
print("coulson: ", energy_coulson(c4, tol=1e-10))

# flip one arc and the energy changes
c4_flipped = OrientedGraph.from_arcs(4, [(1, 0), (1, 2), (2, 3), (3, 0)])
print("one arc flipped:", energy_spectral(c4_flipped), "vs 4*sqrt(2) =", 4 * np.sqrt(2))

# the quadrature honours the requested tolerance
for tol in (1e-4, 1e-8, 1e-12):
    print(f"tol={tol:g}  error={abs(energy_coulson(c4_flipped, tol) - 4 * np.sqrt(2)):.2e}")
