"""
Extremal unicyclic orientations
===============================

Enumerate unicyclic graphs up to isomorphism, score both canonical
orientations and list the lowest and highest energy levels.
"""

from skewenergy import enumerate_unicyclic, search_extremal

for n in range(3, 10):
    print(n, sum(1 for _ in enumerate_unicyclic(n)), "classes")

# at n=5 two graphs share the minimum
for r in search_extremal(5, "min", top=3):
    print(r.rank, r.label, f"{r.energy:.9f}", r.coeffs.coeffs)

# the maximum is a 4-cycle with a path attached
for n in range(5, 10):
    (best,) = search_extremal(n, "max", top=1)
    print(n, best.label, f"{best.energy:.9f}")
