"""
The Funk-Radon transform
========================

Great-circle integrals are diagonal in harmonic space. Odd degrees are lost, so only
antipodal signals can be recovered exactly.
"""

import numpy as np

from sridge import InadmissibleError, radon_eigenvalues, radon_forward, radon_inverse
from sridge.bench import random_coeffs
from sridge.core import lm_arrays

L = 64
lam = radon_eigenvalues(L, 0).values
print("first eigenvalues / pi:", np.round(lam[:7] / np.pi, 4))

# |lambda_l| decays only like l^(-1/2), so inversion stays well conditioned
el = np.arange(2, L, 2)
print("min |lambda_l| sqrt(l) over even l:", np.min(np.abs(lam[el]) * np.sqrt(el)))

# antipodal signal: exact round trip
f = random_coeffs(L, 0, rng=1, antipodal=True)
g = radon_forward(f)
print("antipodal round trip:", np.max(np.abs(radon_inverse(g).data - f.data)))

# a general signal keeps only its even part
h = random_coeffs(L, 0, rng=2, antipodal=False)
try:
    radon_inverse(h)
except InadmissibleError as exc:
    print("strict policy:", exc)
recovered = radon_inverse(radon_forward(h))
degree, _ = lm_arrays(L)
print("odd degrees after forward + inverse are zero:", np.all(recovered.data[degree % 2 == 1] == 0))
print("even degrees survive:", np.allclose(recovered.data[degree % 2 == 0], h.data[degree % 2 == 0]))
