"""Two atoms in a driven cavity: how much entanglement can the gate make?

In the large-detuning, strong-driving regime the atom pair evolves under
H = (lambda / 2) XX with lambda = g^2 / delta.  The evolution operator is the
canonical gate U_d(lambda t / 2, 0, 0), so its Schmidt number is at most 2.
"""
# %%
import numpy as np

from opentangle.cavity import EffectiveCoupling, entanglement_trajectory, matches_canonical_form, u_eff

coupling = EffectiveCoupling(g=2 * np.pi * 1.0, delta1=2 * np.pi * 20.0, omega=2 * np.pi * 15.0)
print(f"lambda = {coupling.coupling:.4f}  large detuning: {coupling.large_detuning}"
      f"  strong driving: {coupling.strong_driving}")

# %% [markdown]
# The gate becomes CNOT-like (maximal E = 1/2) at lambda t = pi / 2.

# %%
t_cnot = (np.pi / 2) / coupling.coupling
print(f"time to maximal entanglement: {t_cnot:.3f}")
print("U_eff(pi/2) ==  U_d(pi/4, 0, 0):", matches_canonical_form(np.pi / 2))
print(np.round(u_eff(np.pi / 2), 4))

# %%
for p in entanglement_trajectory(np.pi, 9):
    bar = "#" * int(round(60 * p.entanglement))
    print(f"lambda t = {p.phase:5.3f}  Sch = {p.schmidt_number}  E = {p.entanglement:.4f} {bar}")
