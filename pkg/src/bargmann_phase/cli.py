"""Command line interface.

Subcommands: phase (one configuration, all methods), sweep (angle grid),
validate (invariant suite), pfunc (emit a P object as JSON).

Exit codes: 0 success and agreement, 1 bad input or usage, 2 numerical
disagreement beyond tolerance. BARGMANN_PHASE_THREADS caps the worker
threads used for sweeps.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import io as io_mod
from .fock import TruncationDim
from .geomphase import PhaseScenario, method_reconciliation
from .pdistribution import PhaseSpacePoint, mehta_p_function
from .validation import run_all

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here reserves 2 for
    # numerical disagreement, so remap to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    n_max: int
    tol: float
    seed: int
    fmt: str
    out: str | None

    @property
    def dim(self) -> TruncationDim:
        return TruncationDim(self.n_max)


def _parse_occupation(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"occupation must be 'n1,n2', got {text!r}")
    occ = tuple(int(p) for p in parts)
    if any(n not in (0, 1) for n in occ):
        raise ValueError(f"occupations must be 0 or 1, got {text!r}")
    return occ


def _parse_vertex(text: str):
    parts = [float(x) for x in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"a vertex is 'q1,p1,q2,p2', got {text!r}")
    return (PhaseSpacePoint(parts[0], parts[1]), PhaseSpacePoint(parts[2], parts[3]))


def _parse_centers(text: str):
    groups = [g for g in text.split(";") if g.strip()]
    if len(groups) not in (1, 3):
        raise ValueError("centers take one vertex (with angles) or three ';'-separated vertices")
    return [_parse_vertex(g) for g in groups]


def _parse_theta(text: str, allow_grid: bool):
    """A plain angle, or 'start:stop:count' for a half-open sweep grid."""
    if ":" in text:
        if not allow_grid:
            raise ValueError(f"expected a single angle, got grid {text!r}")
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid is 'start:stop:count', got {text!r}")
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
        if count < 1:
            raise ValueError("grid count must be positive")
        step = (stop - start) / count
        return [start + i * step for i in range(count)]
    return [float(text)]


def _add_common(parser, default_n_max=25):
    parser.add_argument("--n-max", type=int, default=default_n_max,
                        help=f"per-mode Fock cutoff, >= 5 (default {default_n_max})")
    parser.add_argument("--tol", type=float, default=1e-6,
                        help="phase agreement tolerance in radians (default 1e-6)")
    parser.add_argument("--seed", type=int, default=7, help="seed for seeded checks (default 7)")
    parser.add_argument("--out", default=None, help="write output to this path instead of stdout")


def _run_config(args, fmt: str) -> RunConfig:
    if args.n_max < 5:
        raise ValueError(f"--n-max must be >= 5, got {args.n_max}")
    if args.tol <= 0:
        raise ValueError("--tol must be positive")
    return RunConfig(n_max=args.n_max, tol=args.tol, seed=args.seed, fmt=fmt, out=args.out)


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _worker_count(n_jobs: int) -> int:
    limit = os.cpu_count() or 1
    env = os.environ.get("BARGMANN_PHASE_THREADS")
    if env:
        try:
            limit = min(limit, max(1, int(env)))
        except ValueError:
            raise ValueError(f"BARGMANN_PHASE_THREADS must be an integer, got {env!r}")
    return max(1, min(limit, n_jobs))


# ---------------------------------------------------------------------------
# phase


def _scenario_from_args(args) -> PhaseScenario:
    occupation = _parse_occupation(args.occupation)
    vertices = _parse_centers(args.centers)
    if len(vertices) == 3:
        if args.theta1 is not None or args.theta2 is not None:
            raise ValueError("angles and three explicit vertices are mutually exclusive")
        return PhaseScenario.independent(occupation, *vertices)
    theta1 = _parse_theta(args.theta1 or "0", allow_grid=False)[0]
    theta2 = _parse_theta(args.theta2 or "0", allow_grid=False)[0]
    return PhaseScenario.evolved(occupation, vertices[0], theta1, theta2)


def _scenario_from_pfunc_files(paths, occupation_flag) -> PhaseScenario:
    loaded = []
    for path in paths:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        loaded.append(io_mod.pfunc_from_document(doc))
    occupations = {occ for occ, _, _ in loaded}
    if len(occupations) != 1:
        raise ValueError("the three pfunc files carry different occupations")
    occupation = loaded[0][0]
    if occupation_flag is not None and _parse_occupation(occupation_flag) != occupation:
        raise ValueError("--occupation contradicts the pfunc files")
    vertices = [shift for _, shift, _ in loaded]
    return PhaseScenario.independent(occupation, *vertices)


def _phase_text(row, config: RunConfig) -> str:
    lines = []
    scenario = io_mod.scenario_to_dict(row.scenario)
    lines.append(f"scenario: {json.dumps(scenario, sort_keys=True)}")
    lines.append(f"n_max: {config.n_max}   tolerance: {config.tol:g}")
    lines.append(f"{'method':<24}{'phase':>20}{'|invariant|':>20}")
    for name in ("fock_oracle", "phase_space_pairing", "coherent_closed_form", "printed_closed_form"):
        res = row.results.get(name)
        if res is None:
            continue
        phase = "undefined" if res.phase is None else io_mod.format_float(res.phase)
        lines.append(f"{name:<24}{phase:>20}{io_mod.format_float(abs(res.invariant)):>20}")
    for pair_name, delta in sorted(row.deltas.items()):
        lines.append(f"delta {pair_name}: {io_mod.format_float(delta)}")
    gate = "undefined" if row.abs_delta_max is None else io_mod.format_float(row.abs_delta_max)
    lines.append(f"gated max delta: {gate}")
    lines.append(f"flag: {row.flag}")
    return "\n".join(lines) + "\n"


def cmd_phase(args) -> int:
    config = _run_config(args, args.format)
    if args.from_pfunc:
        if args.centers != "0,0,0,0" or args.theta1 is not None or args.theta2 is not None:
            raise ValueError("--from-pfunc replaces --centers and angles")
        scenario = _scenario_from_pfunc_files(args.from_pfunc, None)
    else:
        scenario = _scenario_from_args(args)
    row = method_reconciliation(scenario, dim=config.dim, tolerance=config.tol)
    if config.fmt == "json":
        doc = io_mod.phase_document(row, config.n_max, config.tol)
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", config.out)
    else:
        _emit(_phase_text(row, config), config.out)
    return EXIT_DISAGREE if row.flag == "disagree" else EXIT_OK


# ---------------------------------------------------------------------------
# sweep


def cmd_sweep(args) -> int:
    config = _run_config(args, args.format)
    occupation = _parse_occupation(args.occupation)
    vertices = _parse_centers(args.centers)
    if len(vertices) != 1:
        raise ValueError("sweep takes a single initial vertex")
    grid1 = _parse_theta(args.theta1, allow_grid=True)
    grid2 = _parse_theta(args.theta2, allow_grid=True)
    scenarios = [
        PhaseScenario.evolved(occupation, vertices[0], t1, t2) for t1 in grid1 for t2 in grid2
    ]

    def run(scenario):
        return method_reconciliation(scenario, dim=config.dim, tolerance=config.tol)

    workers = _worker_count(len(scenarios))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, scenarios))
    else:
        rows = [run(s) for s in scenarios]
    sweep_rows = [io_mod.sweep_row(r) for r in rows]
    if config.fmt == "json":
        doc = io_mod.sweep_document(sweep_rows, config.n_max, config.tol)
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", config.out)
    else:
        import io as _stringio

        buf = _stringio.StringIO()
        io_mod.write_sweep_csv(sweep_rows, buf)
        _emit(buf.getvalue(), config.out)
    return EXIT_DISAGREE if any(r["flag"] == "disagree" for r in sweep_rows) else EXIT_OK


# ---------------------------------------------------------------------------
# validate


def cmd_validate(args) -> int:
    config = _run_config(args, args.format)
    checks = run_all(n_max=config.n_max, seed=config.seed)
    ok = all(c.passed for c in checks)
    if config.fmt == "json":
        doc = io_mod.validation_document(checks, config.n_max, config.seed)
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", config.out)
    else:
        lines = []
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"[{status}] {c.name}: value={c.value:.3e} threshold={c.threshold:.3e}")
            lines.append(f"       {c.detail}")
        lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
        _emit("\n".join(lines) + "\n", config.out)
    return EXIT_OK if ok else EXIT_DISAGREE


# ---------------------------------------------------------------------------
# pfunc


def cmd_pfunc(args) -> int:
    config = _run_config(args, "json")
    occupation = _parse_occupation(args.occupation)
    vertices = _parse_centers(args.centers)
    if len(vertices) != 1:
        raise ValueError("pfunc takes a single vertex as the shift")
    shift = vertices[0]
    p = mehta_p_function(occupation, shift)
    doc = io_mod.pfunc_document(occupation, shift, p)
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", config.out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(
        prog="bargmann-phase",
        description="Geometric phase of two-mode beams from the Bargmann invariant",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_phase = sub.add_parser("phase", help="compute one configuration with every method")
    _add_common(p_phase)
    p_phase.add_argument("--occupation", default="1,1", help="per-mode photon numbers 'n1,n2'")
    p_phase.add_argument(
        "--centers",
        default="0,0,0,0",
        help="'q1,p1,q2,p2' for a polarizer chain, or three ';'-separated vertices",
    )
    p_phase.add_argument("--theta1", default=None, help="first polarizer angle (radians)")
    p_phase.add_argument("--theta2", default=None, help="second polarizer angle (radians)")
    p_phase.add_argument("--from-pfunc", nargs=3, metavar="JSON", default=None,
                         help="three pfunc documents standing in for the vertices")
    p_phase.add_argument("--format", choices=("text", "json"), default="text")
    p_phase.set_defaults(func=cmd_phase)

    p_sweep = sub.add_parser("sweep", help="reconcile methods over an angle grid")
    _add_common(p_sweep)
    p_sweep.add_argument("--occupation", default="1,1")
    p_sweep.add_argument("--centers", default="0,0,0,0", help="initial vertex 'q1,p1,q2,p2'")
    p_sweep.add_argument("--theta1", default=f"0:{math.pi}:21",
                         help="angle or 'start:stop:count' grid, half open (default 21 over [0, pi))")
    p_sweep.add_argument("--theta2", default=f"0:{math.pi}:21")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.set_defaults(func=cmd_sweep)

    p_val = sub.add_parser("validate", help="run the named invariant checks")
    _add_common(p_val, default_n_max=18)
    p_val.add_argument("--format", choices=("text", "json"), default="text")
    p_val.set_defaults(func=cmd_validate)

    p_pfunc = sub.add_parser("pfunc", help="emit the delta-derivative P object as JSON")
    _add_common(p_pfunc)
    p_pfunc.add_argument("--occupation", default="1,1")
    p_pfunc.add_argument("--centers", default="0,0,0,0", help="phase-space shift 'q1,p1,q2,p2'")
    p_pfunc.set_defaults(func=cmd_pfunc)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse handles usage errors and --help by exiting; fold that
        # into the return-code contract so in-process calls never raise
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        sys.stderr.write(f"bargmann-phase: error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"bargmann-phase: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main(argv=None))
