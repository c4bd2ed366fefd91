"""
Switching
=========

Reversing every arc between a vertex set W and its complement is a
diagonal similarity of the skew matrix, so the spectrum is unchanged.
"""

import numpy as np

from skewenergy import MINUS, PLUS, make_family, orient_unicyclic, spectrum, switch, switching_equivalent

og = orient_unicyclic(make_family("snl", 6, 4), PLUS)
sw = switch(og, {1, 4})
print("arcs before:", og.arcs)
print("arcs after: ", sw.arcs)
print("same spectrum:", np.allclose(spectrum(og), spectrum(sw)))
print("equivalent:", switching_equivalent(og, sw))

# the two canonical orientations of an even cycle are not related by switching
print("plus ~ minus:", switching_equivalent(og, orient_unicyclic(og.base, MINUS)))
