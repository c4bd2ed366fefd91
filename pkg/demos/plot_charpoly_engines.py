"""
Characteristic polynomial three ways
====================================

Exact determinant expansion, a sum over evenly linear subgraphs, and a
matching-count shortcut for unicyclic graphs.
"""

from skewenergy import (
    MINUS,
    PLUS,
    coeffs_combinatorial,
    coeffs_exact,
    coeffs_unicyclic,
    make_family,
    matching_counts,
    orient_unicyclic,
)

# a 4-cycle with a two-vertex tail
G = make_family("pnl", 6, 4)
print("edges:", G.edges)
print("matchings m(G, k):", matching_counts(G))

for sign in (PLUS, MINUS):
    og = orient_unicyclic(G, sign)
    print(sign, coeffs_exact(og).coeffs, coeffs_combinatorial(og).coeffs, coeffs_unicyclic(og).coeffs)

# the plus orientation dominates coefficient by coefficient
print(coeffs_exact(orient_unicyclic(G, PLUS)).polynomial())
