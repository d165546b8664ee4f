"""Command-line front end.

Units: hbar = 1, energies in units of eps1, times in units of hbar/eps1.

Exit status: 0 on success, 1 when ``verify`` finds a failure, 2 on invalid
input.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path

import numpy as np

from .dynamics import (
    EnergyDistribution,
    find_orthogonality_time,
    jacobi_eigh,
    mode_occupation_stats,
    survival_amplitude,
    QutritState,
    Basis,
)
from .entanglement import concurrence, population_series
from .errors import DimerError
from .families import FamilyKind, WINDOW, characteristic_time, family_distribution
from .hamiltonian import HamiltonianParams, build_extended_matrix, load_params
from .simplex import sample_simplex
from .spectral import closed_form_eigenvalues, spectral_decomposition, transition_frequencies
from .verify import run_verification

DEFAULT_POINTS = 400
# horizon, in periods of the slowest Bohr frequency, searched for an
# orthogonality time when a custom distribution is evolved
ORTHO_SEARCH_PERIODS = 10


class UsageError(DimerError):
    pass


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, str):
        return x
    return format(float(x), ".17g")


def _floats(text: str, count: int | None = None) -> list[float]:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None
    if count is not None and len(values) != count:
        raise UsageError(f"expected {count} numbers, got {text!r}")
    return values


def parse_values(text: str) -> np.ndarray:
    """``start,stop,count,log|lin`` or an explicit comma-separated list."""
    parts = [p.strip() for p in text.split(",")]
    if parts[-1] in ("log", "lin"):
        if len(parts) != 4:
            raise UsageError("--values spacing form is start,stop,count,log|lin")
        start, stop = _floats(",".join(parts[:2]))
        try:
            count = int(parts[2])
        except ValueError:
            raise UsageError(f"count must be an integer, got {parts[2]!r}") from None
        if count < 1 or start <= 0 or stop <= 0:
            raise UsageError("sweep needs count >= 1 and positive endpoints")
        values = np.geomspace(start, stop, count) if parts[-1] == "log" else np.linspace(start, stop, count)
    else:
        values = np.array(_floats(text))
    if values.size == 0 or np.any(values <= 0) or np.any(np.diff(values) <= 0):
        raise UsageError("sweep values must be positive and strictly increasing")
    return values


def _params(args) -> HamiltonianParams:
    return load_params(args.config) if args.config else HamiltonianParams()


def _distribution(args):
    if args.family and args.dist:
        raise UsageError("give either --family or --dist, not both")
    if args.family:
        return FamilyKind(args.family), family_distribution(args.family)
    if args.dist:
        theta = _floats(args.phases, 3) if args.phases else (0.0, 0.0, 0.0)
        return None, EnergyDistribution(_floats(args.dist, 3), theta)
    raise UsageError("evolve needs --family or --dist")


def _write(rows: list[list], header: list[str], out: str | None, plot: str | None = None) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([fmt(v) for v in row] for row in rows)
    if out is None:
        sys.stdout.write(buf.getvalue())
        return
    path = Path(out)
    path.write_text(buf.getvalue(), newline="")
    if plot:
        path.with_suffix(".gp").write_text(plot.format(csv=path.name), newline="")


def _plot_script(x: str, ys: list[str], header: list[str], title: str) -> str:
    col = {name: i + 1 for i, name in enumerate(header)}
    curves = ", \\\n     ".join(f"'{{csv}}' using {col[x]}:{col[y]} with lines title '{y}'" for y in ys)
    return (
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        f"set title '{title}'\n"
        f"set xlabel '{x}'\n"
        f"plot {curves}\n"
    )


def spectrum_row(params: HamiltonianParams) -> list:
    M = build_extended_matrix(params)
    try:
        energies, p, _, phi = closed_form_eigenvalues(M)
        freqs = transition_frequencies(energies, p, phi)
        degenerate = False
    except DimerError:
        energies, _ = jacobi_eigh(M)
        freqs = transition_frequencies(energies)
        phi, degenerate = None, True
    return [params.J, params.K, *energies, freqs.w21, freqs.w32, freqs.w31, phi, degenerate]


SPECTRUM_HEADER = ["J", "K", "E1", "E2", "E3", "omega21", "omega32", "omega31", "phi", "degenerate"]


def cmd_spectrum(args) -> int:
    params = _params(args)
    if args.values:
        grid = [params.replace(**{args.vary: v}) for v in parse_values(args.values)]
    else:
        grid = [params]
    rows = [spectrum_row(p) for p in grid]
    x = args.vary if args.values else "J"
    _write(rows, SPECTRUM_HEADER, args.out, _plot_script(x, ["E1", "E2", "E3"], SPECTRUM_HEADER, "spectrum"))
    return 0


EVOLVE_HEADER = ["t", "t_over_tau", "R0", "R1", "R2", "C", "mean_n1", "var_n1", "|survival|"]


def evolve_rows(params, kind, dist, t_max, n_points, time_unit) -> list[list]:
    decomp = spectral_decomposition(build_extended_matrix(params))
    if kind is not None:
        tau = characteristic_time(kind, decomp.freqs)
    else:
        slowest = min(decomp.freqs.w21, decomp.freqs.w32)
        horizon = t_max if time_unit == "abs" else ORTHO_SEARCH_PERIODS * 2 * math.pi / slowest
        tau = find_orthogonality_time(dist, decomp.energies, horizon)
    if time_unit == "tau" and tau is not None:
        t_max = t_max * tau
    times = np.linspace(0.0, t_max, n_points)
    R = population_series(dist, decomp, times)
    survival = np.abs(survival_amplitude(dist, decomp.energies, times))
    rows = []
    for t, pops, s in zip(times, R, survival):
        state = QutritState.normalized(np.sqrt(pops), Basis.FOCK)
        mean, var = mode_occupation_stats(state)
        rows.append([t, None if tau is None else t / tau, *pops, concurrence(pops), mean, var, s])
    return rows


def cmd_evolve(args) -> int:
    kind, dist = _distribution(args)
    t_max = args.t_max if args.t_max is not None else (WINDOW[kind] if kind and args.time_unit == "tau" else 2.0)
    if not t_max > 0:
        raise UsageError("--t-max must be positive")
    rows = evolve_rows(_params(args), kind, dist, t_max, args.n_points, args.time_unit)
    x = "t_over_tau" if rows[0][1] is not None and args.time_unit == "tau" else "t"
    _write(rows, EVOLVE_HEADER, args.out, _plot_script(x, ["C", "var_n1"], EVOLVE_HEADER, "evolution"))
    return 0


SIMPLEX_HEADER = ["r1", "r2", "r3", "region", "concurrence"]


def cmd_simplex(args) -> int:
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    rows = [[*pt.r, pt.region.value, pt.concurrence] for pt in sample_simplex(args.n)]
    plot = (
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        "set title 'concurrence over the simplex'\n"
        "splot '{csv}' using 1:2:5 with points palette title 'C'\n"
    )
    _write(rows, SIMPLEX_HEADER, args.out, plot)
    return 0


SWEEP_HEADER = ["amp", "t_over_tau", "C"]


def family_sweep_rows(params, kind, vary, values, n_points) -> list[list]:
    dist = family_distribution(kind)
    x = np.linspace(0.0, WINDOW[kind], n_points)
    rows = []
    for amp in values:
        decomp = spectral_decomposition(build_extended_matrix(params.replace(**{vary: amp})))
        tau = characteristic_time(kind, decomp.freqs)
        for xi, pops in zip(x, population_series(dist, decomp, x * tau)):
            rows.append([amp, xi, concurrence(pops)])
    return rows


def cmd_family_sweep(args) -> int:
    if not args.family:
        raise UsageError("family-sweep needs --family")
    if not args.values:
        raise UsageError("family-sweep needs --values")
    params = _params(args)
    if args.fixed is not None:
        fixed = args.fixed
    else:
        # single-particle sweeps run without pair tunneling; pair sweeps at J = eps1
        fixed = 0.0 if args.vary == "J" else params.eps1
    other = "K" if args.vary == "J" else "J"
    params = params.replace(**{other: fixed})
    kind = FamilyKind(args.family)
    rows = family_sweep_rows(params, kind, args.vary, parse_values(args.values), args.n_points)
    plot = (
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        f"set title '{kind.value} family, varying {args.vary}'\n"
        "set xlabel 't/tau'\n"
        "plot '{csv}' using 2:3:1 with lines palette title 'C'\n"
    )
    _write(rows, SWEEP_HEADER, args.out, plot)
    return 0


def cmd_verify(args) -> int:
    results = run_verification()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhdimer",
        description="Extended Bose-Hubbard dimer toolkit (hbar = 1; energies in units of eps1, "
        "times in units of hbar/eps1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="flat key = value file with eps0, eps1, eps01, U, J, K")
        p.add_argument("--out", help="CSV output path (a gnuplot script is written next to it)")

    p = sub.add_parser("spectrum", help="eigenvalues and transition frequencies")
    common(p)
    p.add_argument("--vary", choices=["J", "K"], default="J")
    p.add_argument("--values", help="start,stop,count,log|lin or v1,v2,...")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("evolve", help="populations, concurrence and number fluctuations in time")
    common(p)
    p.add_argument("--family", choices=[k.value for k in FamilyKind])
    p.add_argument("--dist", help="energy weights r1,r2,r3")
    p.add_argument("--phases", help="phases theta1,theta2,theta3 (radians)")
    p.add_argument("--t-max", type=float, help="end of the time window")
    p.add_argument("--time-unit", choices=["tau", "abs"], default="tau",
                   help="measure --t-max in units of tau (default) or of hbar/eps1; "
                   "falls back to hbar/eps1 when the state never becomes orthogonal")
    p.add_argument("--n-points", type=int, default=DEFAULT_POINTS)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("simplex", help="classified barycentric grid with concurrence")
    common(p)
    p.add_argument("--n", type=int, default=100, help="grid resolution")
    p.set_defaults(func=cmd_simplex)

    p = sub.add_parser("family-sweep", help="C(t/tau) of a family across tunneling amplitudes")
    common(p)
    p.add_argument("--family", choices=[k.value for k in FamilyKind])
    p.add_argument("--vary", choices=["J", "K"], default="J")
    p.add_argument("--values", help="start,stop,count,log|lin or v1,v2,...")
    p.add_argument("--fixed", type=float, help="value of the other amplitude")
    p.add_argument("--n-points", type=int, default=DEFAULT_POINTS)
    p.set_defaults(func=cmd_family_sweep)

    p = sub.add_parser("verify", help="run the oracle cross-checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "n_points", 2) < 2:
        print("bhdimer: error: --n-points must be at least 2", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (DimerError, OSError) as exc:
        print(f"bhdimer: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
