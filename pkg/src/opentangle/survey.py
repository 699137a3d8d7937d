"""Parameter sweeps: the Schmidt-number classification survey and figure data."""
import csv
from dataclasses import dataclass, field

import numpy as np

from .canonical import build_ud, closed_schmidt_number, entanglement_closed
from .cavity import entanglement_trajectory
from .matrix import haar_random_unitaries
from .schmidt import linear_entropy, schmidt_numbers, schmidt_spectra, table1_violation

QUARTER_PI = np.pi / 4


@dataclass(frozen=True)
class SweepRecord:
    c1: float
    c2: float
    c3: float
    entanglement: float
    schmidt_number: int


def chamber_grid(n):
    """n^3 points filling the Weyl chamber with c3 >= 0.

    c1 = (pi/4) i/(n-1), c2 = c1 j/(n-1), c3 = c2 k/(n-1). The grid contains
    the identity, (pi/4, 0, 0), (pi/4, pi/4, 0) and (pi/4, pi/4, pi/4).
    """
    if n < 2:
        raise ValueError("grid size must be at least 2")
    f = np.linspace(0.0, 1.0, n)
    i, j, k = np.meshgrid(f, f, f, indexing="ij")
    c1 = QUARTER_PI * i
    c2 = c1 * j
    c3 = c2 * k
    return np.stack([c1.ravel(), c2.ravel(), c3.ravel()], axis=-1)


def _plain(x):
    return x.item() if isinstance(x, np.generic) else x


@dataclass
class ClassStats:
    count: int = 0
    min_entanglement: float = np.inf
    max_entanglement: float = -np.inf
    argmax: tuple = None

    def as_dict(self):
        return {
            "count": self.count,
            "min_entanglement": self.min_entanglement,
            "max_entanglement": self.max_entanglement,
            "argmax": None if self.argmax is None else [_plain(x) for x in self.argmax],
        }


@dataclass
class Table1Report:
    samples: int
    seed: int
    grid: int
    stats: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def as_dict(self):
        return {
            "samples": self.samples,
            "seed": self.seed,
            "grid": self.grid,
            "classes": {str(k): v.as_dict() for k, v in sorted(self.stats.items())},
            "violations": list(self.violations),
            "ok": self.ok,
        }


def _accumulate(report, ranks, ents, labels):
    for rank in np.unique(ranks):
        sel = ranks == rank
        e = ents[sel]
        st = report.stats.setdefault(int(rank), ClassStats())
        st.count += int(sel.sum())
        st.min_entanglement = min(st.min_entanglement, float(e.min()))
        top = int(np.argmax(e))
        if e[top] > st.max_entanglement:
            st.max_entanglement = float(e[top])
            st.argmax = labels(np.flatnonzero(sel)[top])
    for idx in range(len(ranks)):
        problem = table1_violation(int(ranks[idx]), float(ents[idx]))
        if problem is not None:
            report.violations.append(f"{labels(idx)}: {problem}")


def _batched(n, size):
    for start in range(0, n, size):
        yield start, min(start + size, n)


def table1_survey(samples, seed, grid=50, batch=20000):
    """Schmidt number vs. entanglement over Haar samples and a chamber grid.

    Every operator goes through the reshuffle/SVD route. Grid points are
    labelled by their (c1, c2, c3); Haar samples by ``("haar", index)``.
    """
    if samples < 0:
        raise ValueError("samples must be nonnegative")
    report = Table1Report(samples, seed, grid)
    if grid:
        params = chamber_grid(grid)
        for lo, hi in _batched(len(params), batch):
            spectra = schmidt_spectra(build_ud(params[lo:hi]))
            _accumulate(
                report, schmidt_numbers(spectra), linear_entropy(spectra),
                lambda i, lo=lo: tuple(float(x) for x in params[lo + i]),
            )
    if samples:
        unitaries = haar_random_unitaries(samples, 4, seed)
        for lo, hi in _batched(samples, batch):
            spectra = schmidt_spectra(unitaries[lo:hi])
            _accumulate(
                report, schmidt_numbers(spectra), linear_entropy(spectra),
                lambda i, lo=lo: ("haar", lo + i),
            )
    return report


def fig1_records(c3, grid):
    """Closed-form E and Schmidt number on a grid x grid lattice over [0, pi/4]^2.

    Coordinates are used raw (not chamber-reduced). Rows run c1-major.
    """
    if grid < 2:
        raise ValueError("grid must be at least 2")
    axis = np.linspace(0.0, QUARTER_PI, grid)
    c1, c2 = np.meshgrid(axis, axis, indexing="ij")
    params = np.stack([c1.ravel(), c2.ravel(), np.full(c1.size, float(c3))], axis=-1)
    ents = entanglement_closed(params)
    ranks = closed_schmidt_number(params)
    return [SweepRecord(*map(float, p), float(e), int(r)) for p, e, r in zip(params, ents, ranks)]


def fig2_records(grid):
    """Schmidt-2 edge at c3 = 0: (c1, 0, 0) for c1 in [0, pi/4]."""
    if grid < 2:
        raise ValueError("grid must be at least 2")
    c1 = np.linspace(0.0, QUARTER_PI, grid)
    params = np.stack([c1, np.zeros(grid), np.zeros(grid)], axis=-1)
    ents = entanglement_closed(params)
    ranks = closed_schmidt_number(params)
    return [SweepRecord(float(a), 0.0, 0.0, float(e), int(r)) for a, e, r in zip(c1, ents, ranks)]


def fig3_rows(phase_max, steps):
    return [(p.phase, p.entanglement, p.schmidt_number) for p in entanglement_trajectory(phase_max, steps)]


def format_cell(value):
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".15e")


def write_csv(path, header, rows):
    """Comma-separated, LF line endings, every float with 16 significant digits."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])
