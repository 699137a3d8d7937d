"""Operator-Schmidt decomposition of a few familiar two-qubit gates.

Run with ``python3 demos/01_operator_schmidt.py``.
"""
# %%
import numpy as np

from opentangle import analyze
from opentangle.matrix import CNOT, I4, SWAP, haar_random_unitaries, haar_random_unitary4, kron
from opentangle.schmidt import reshuffle

np.set_printoptions(precision=4, suppress=True)

# %% [markdown]
# A two-qubit operator U can always be written as a sum of at most four
# products A_k (x) B_k.  Reshuffling the 4x4 matrix (swapping the "input of
# qubit 1" and "output of qubit 2" indices) turns that sum into an ordinary
# matrix whose singular values are the Schmidt coefficients.

# %%
print("reshuffled CNOT:")
print(reshuffle(CNOT).real)

# %%
for name, u in [("identity", I4), ("CNOT", CNOT), ("SWAP", SWAP)]:
    r = analyze(u)
    print(f"{name:8s} s = {np.array(r.spectrum)}  Sch = {r.schmidt_number}  E = {r.entanglement:.4f}")

# %% [markdown]
# The coefficients are unchanged by local unitaries on either side, so a gate
# and any locally dressed copy carry the same operator entanglement.

# %%
a, b = haar_random_unitaries(2, 2, seed=1)
u = haar_random_unitary4(3)
dressed = kron(a, b) @ u
print("random U   :", np.array(analyze(u).spectrum))
print("dressed U  :", np.array(analyze(dressed).spectrum))
