"""Entanglement landscapes over the canonical parameters.

Writes the three CSV sweeps into ``demos/out/`` and, if matplotlib is
available, plots them.  The same files come from the ``opentangle sweep-*``
commands.
"""
# %%
from pathlib import Path

import numpy as np

from opentangle.survey import fig1_records, fig2_records, fig3_rows, write_csv

out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)

# %% [markdown]
# E over the (c1, c2) square for a few fixed c3.  The c3 = 0 slice runs from 0
# at the origin to 3/4 at (pi/4, pi/4).

# %%
grid = 41
slices = {}
for c3 in (0.0, np.pi / 16, np.pi / 8):
    recs = fig1_records(c3, grid)
    write_csv(out / f"fig1_c3_{c3:.4f}.csv", ["c1", "c2", "c3", "entanglement", "schmidt_number"],
              [(r.c1, r.c2, r.c3, r.entanglement, r.schmidt_number) for r in recs])
    slices[c3] = np.array([r.entanglement for r in recs]).reshape(grid, grid)
    print(f"c3 = {c3:.4f}: E in [{slices[c3].min():.4f}, {slices[c3].max():.4f}]")

# %% [markdown]
# Along the edge (c1, 0, 0) the gate has Schmidt number 2 and E = sin^2(2 c1) / 2.

# %%
edge = fig2_records(101)
write_csv(out / "fig2.csv", ["c1", "entanglement", "schmidt_number"],
          [(r.c1, r.entanglement, r.schmidt_number) for r in edge])

# %% [markdown]
# The XX interaction in time: E(lambda t) = sin^2(lambda t) / 2.

# %%
traj = fig3_rows(2 * np.pi, 201)
write_csv(out / "fig3.csv", ["lambda_t", "entanglement", "schmidt_number"], traj)

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(1, 3, figsize=(13, 4))
    axes[0].imshow(slices[0.0], origin="lower", extent=(0, np.pi / 4, 0, np.pi / 4))
    axes[0].set(xlabel="c2", ylabel="c1", title="E(c1, c2, 0)")
    axes[1].plot([r.c1 for r in edge], [r.entanglement for r in edge])
    axes[1].set(xlabel="c1", ylabel="E", title="edge (c1, 0, 0)")
    axes[2].plot([r[0] for r in traj], [r[1] for r in traj])
    axes[2].set(xlabel="lambda t", ylabel="E", title="XX evolution")
    fig.tight_layout()
    fig.savefig(out / "sweeps.png", dpi=120)
    print("saved", out / "sweeps.png")
