"""Command-line interface.

Exit statuses: 0 success, 2 parse error, 3 non-unitary input, 4 Schmidt
rank 3, 5 I/O error, 6 classification bound violated.
"""
import argparse
import json
import math
import re
import sys

import numpy as np

from . import __version__
from .canonical import (
    closed_schmidt_number,
    entanglement_closed,
    in_weyl_chamber,
    reduce_to_weyl_chamber,
    schmidt_coefficients_closed,
)
from .errors import NotUnitary, SchmidtNumberThree
from .matrix import unitarity_defect
from .schmidt import analyze
from .survey import fig1_records, fig2_records, fig3_rows, table1_survey, write_csv
from .tolerances import FILE_UNITARY_TOL

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNITARY = 3
EXIT_RANK3 = 4
EXIT_IO = 5
EXIT_BOUND = 6

_PI_ANGLE = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*(?P<num>\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+(?:\.\d*)?))?\s*$",
    re.IGNORECASE,
)


class MatrixFileError(ValueError):
    pass


def parse_angle(text):
    """Radians from '0.3', 'pi', '-pi/4', '3pi/8' or '3*pi/16'."""
    m = _PI_ANGLE.match(text)
    if m:
        num = float(m["num"]) if m["num"] else 1.0
        den = float(m["den"]) if m["den"] else 1.0
        if den == 0:
            raise argparse.ArgumentTypeError(f"zero denominator in angle {text!r}")
        value = num * math.pi / den
        return -value if m["sign"] == "-" else value
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite, got {text!r}")
    return value


def _positive_int(minimum):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value
    return parse


def _grid_size(text):
    value = _positive_int(0)(text)
    if value == 1:
        raise argparse.ArgumentTypeError("grid must be 0 (disabled) or at least 2")
    return value


def load_matrix_file(path):
    """Read a JSON matrix file: {"matrix": 4x4 of [re, im], "label": optional}.

    Returns (matrix, label). Raises OSError if unreadable, MatrixFileError if
    malformed, NotUnitary if ||U U^dag - I||_F > 1e-6.
    """
    with open(path) as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise MatrixFileError(f"{path}: missing key 'matrix'")
    try:
        arr = np.array(doc["matrix"], dtype=float)
    except (TypeError, ValueError):
        raise MatrixFileError(f"{path}: 'matrix' must hold numeric [re, im] pairs") from None
    if arr.shape != (4, 4, 2):
        raise MatrixFileError(f"{path}: 'matrix' must be 4x4 of [re, im], got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise MatrixFileError(f"{path}: non-finite entry")
    u = arr[..., 0] + 1j * arr[..., 1]
    defect = float(unitarity_defect(u))
    if defect > FILE_UNITARY_TOL:
        raise NotUnitary(defect, FILE_UNITARY_TOL)
    label = doc.get("label")
    return u, label


def dump_matrix_file(path, u, label=None):
    doc = {"matrix": [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(u)]}
    if label is not None:
        doc["label"] = label
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def nearest_unitary(u):
    """Polar projection W V^dag of u = W S V^dag; tidies file input to machine precision."""
    w, _, vh = np.linalg.svd(u)
    return w @ vh


def _fmt(x):
    return f"{x:.12g}"


def _emit(report, as_json, lines):
    if as_json:
        print(json.dumps(report))
    else:
        print("\n".join(lines))


def cmd_analyze(args):
    try:
        u, label = load_matrix_file(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except MatrixFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotUnitary as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_UNITARY
    try:
        result = analyze(nearest_unitary(u))
    except SchmidtNumberThree as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANK3
    report = {"label": label, **result.as_dict()}
    lines = []
    if label:
        lines.append(f"label: {label}")
    lines += [
        "spectrum: " + ", ".join(_fmt(s) for s in result.spectrum),
        f"schmidt_number: {result.schmidt_number}",
        f"entanglement: {_fmt(result.entanglement)}",
        "class_vector: " + (
            "unavailable" if result.canonical is None
            else "(" + ", ".join(_fmt(c) for c in result.canonical) + ")"
        ),
    ]
    _emit(report, args.json, lines)
    return EXIT_OK


def cmd_canonical(args):
    p = (args.c1, args.c2, args.c3)
    reduced = reduce_to_weyl_chamber(p)
    spectrum = schmidt_coefficients_closed(p)
    entanglement = entanglement_closed(p)
    rank = int(closed_schmidt_number(p))
    report = {
        "input": list(p),
        "in_chamber": in_weyl_chamber(p),
        "reduced": list(reduced),
        "spectrum": list(spectrum),
        "entanglement": entanglement,
        "schmidt_number": rank,
    }
    lines = [
        "input: (" + ", ".join(_fmt(c) for c in p) + ")",
        f"in_chamber: {report['in_chamber']}",
        "reduced: (" + ", ".join(_fmt(c) for c in reduced) + ")",
        "spectrum: " + ", ".join(_fmt(s) for s in spectrum),
        f"schmidt_number: {rank}",
        f"entanglement: {_fmt(entanglement)}",
    ]
    _emit(report, args.json, lines)
    return EXIT_OK


def _write(path, header, rows):
    try:
        write_csv(path, header, rows)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(rows)} rows to {path}", file=sys.stderr)
    return EXIT_OK


def cmd_sweep_fig1(args):
    records = fig1_records(args.c3, args.grid)
    rows = [(r.c1, r.c2, r.c3, r.entanglement, r.schmidt_number) for r in records]
    return _write(args.out, ["c1", "c2", "c3", "entanglement", "schmidt_number"], rows)


def cmd_sweep_fig2(args):
    rows = [(r.c1, r.entanglement, r.schmidt_number) for r in fig2_records(args.grid)]
    return _write(args.out, ["c1", "entanglement", "schmidt_number"], rows)


def cmd_sweep_fig3(args):
    rows = fig3_rows(args.phase_max, args.steps)
    return _write(args.out, ["lambda_t", "entanglement", "schmidt_number"], rows)


def cmd_table1(args):
    report = table1_survey(args.samples, args.seed, grid=args.grid)
    lines = [f"samples={report.samples} seed={report.seed} grid={report.grid}"]
    for rank, st in sorted(report.stats.items()):
        lines.append(
            f"Sch={rank}: n={st.count} E in [{_fmt(st.min_entanglement)}, {_fmt(st.max_entanglement)}]"
            f" max at {st.argmax}"
        )
    lines.append("bounds: " + ("ok" if report.ok else f"{len(report.violations)} violation(s)"))
    lines += [f"  {v}" for v in report.violations[:20]]
    _emit(report.as_dict(), args.json, lines)
    return EXIT_OK if report.ok else EXIT_BOUND


def build_parser():
    parser = argparse.ArgumentParser(
        prog="opentangle",
        description="Operator-Schmidt and linear-entropy analysis of two-qubit unitaries.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a 4x4 unitary from a JSON matrix file")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("canonical", help="closed-form quantities at (c1, c2, c3)")
    for name in ("c1", "c2", "c3"):
        p.add_argument(name, type=parse_angle)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("sweep-fig1", help="E(c1, c2) lattice at fixed c3, as CSV")
    p.add_argument("--c3", type=parse_angle, default=0.0, help="fixed c3 (default 0)")
    p.add_argument("--grid", type=_positive_int(2), default=51, help="points per axis (default 51)")
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(func=cmd_sweep_fig1)

    p = sub.add_parser("sweep-fig2", help="E along the Schmidt-2 edge (c1, 0, 0), as CSV")
    p.add_argument("--grid", type=_positive_int(2), default=101, help="points on [0, pi/4] (default 101)")
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(func=cmd_sweep_fig2)

    p = sub.add_parser("sweep-fig3", help="E versus lambda*t for the XX cavity gate, as CSV")
    p.add_argument("--phase-max", type=parse_angle, default=math.pi, help="largest lambda*t (default pi)")
    p.add_argument("--steps", type=_positive_int(2), default=201, help="number of points (default 201)")
    p.add_argument("--out", required=True, help="CSV output path")
    p.set_defaults(func=cmd_sweep_fig3)

    p = sub.add_parser("table1", help="Schmidt number vs. entanglement survey")
    p.add_argument("--samples", type=_positive_int(0), default=10000, help="Haar samples (default 10000)")
    p.add_argument("--seed", type=int, default=7, help="RNG seed (default 7)")
    p.add_argument("--grid", type=_grid_size, default=20,
                   help="chamber grid size per axis (0 disables the grid)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
