"""Canonical form, Weyl chamber and class-vector extraction.

Every two-qubit gate is locally equivalent to
U_d(c1, c2, c3) = exp[-i (c1 XX + c2 YY + c3 ZZ)], and the triple can be
brought into the chamber pi/4 >= c1 >= c2 >= |c3|.
"""
# %%
import numpy as np

from opentangle import (
    build_ud,
    entanglement_closed,
    extract_class_vector,
    reduce_to_weyl_chamber,
    schmidt_coefficients_closed,
)
from opentangle.kak import makhlin_invariants
from opentangle.matrix import CNOT, SWAP, haar_random_unitaries, kron

# %% [markdown]
# Closed-form spectrum and entanglement straight from the parameters.

# %%
for p in [(0, 0, 0), (np.pi / 4, 0, 0), (np.pi / 4, np.pi / 4, 0), (np.pi / 8, np.pi / 16, 0.1)]:
    s = np.array(schmidt_coefficients_closed(p))
    print(f"c = {np.round(p, 4)}  s = {np.round(s, 4)}  E = {entanglement_closed(p):.4f}")

# %% [markdown]
# Parameters outside the chamber describe the same class as some point inside.
# Shifting by pi/2, permuting, or negating a pair of components preserves
# the class; negating a single component gives the mirror image.

# %%
for p in [(0, 0, np.pi / 4), (np.pi / 3, 0, 0), (1.0, -0.4, 2.5)]:
    q = reduce_to_weyl_chamber(p)
    print(f"{np.round(p, 4)} -> {np.round(q, 4)}   E {entanglement_closed(p):.4f} == {entanglement_closed(q):.4f}")

# %% [markdown]
# Going the other way: hide U_d behind random local gates and recover it.

# %%
p = (0.6, 0.35, -0.2)
a, b, c, d = haar_random_unitaries(4, 2, 11)
u = kron(a, b) @ build_ud(p) @ kron(c, d)
print("hidden  :", p)
print("found   :", tuple(round(x, 12) for x in extract_class_vector(u)))
print("CNOT    :", np.round(extract_class_vector(CNOT), 6))
print("SWAP    :", np.round(extract_class_vector(SWAP), 6))
print("Makhlin invariants of CNOT:", makhlin_invariants(CNOT))
