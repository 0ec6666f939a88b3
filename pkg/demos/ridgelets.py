"""
Ridgelets on the sphere
=======================

A ridgelet is constant along great circles and wavelet-like across them. Analysis is
the Radon transform followed by wavelet analysis, and synthesis is exact for antipodal
signals.
"""

import numpy as np

from sridge import WaveletParams, build_ridgelets, ridgelet_analysis, ridgelet_map, ridgelet_synthesis
from sridge.bench import random_coeffs

L = 64
rb = build_ridgelets(WaveletParams(L, 2.0))

# the ridgelet at scale 3, centred on the north pole: a ring of constant value per colatitude
ridge = ridgelet_map(rb, 3).samples.real
print("variation along each ring:", np.max(np.abs(ridge - ridge[:, :1])))
print("profile from pole to equator:", np.round(ridge[: L // 2 : 4, 0], 4))

f = random_coeffs(L, 0, rng=4, antipodal=True)
g = ridgelet_analysis(f, rb)
back = ridgelet_synthesis(g, rb)
print("antipodal round trip:", np.max(np.abs(back.data - f.data)))

# spin signals: analyse at spin 2, recover at spin 2
rb2 = build_ridgelets(WaveletParams(L, 2.0), s=2)
f2 = random_coeffs(L, 2, rng=5, antipodal=True)
print("spin-2 round trip:", np.max(np.abs(ridgelet_synthesis(ridgelet_analysis(f2, rb2), rb2).data - f2.data)))
