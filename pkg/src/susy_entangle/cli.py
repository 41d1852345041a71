"""Command-line entry point ``susy-entangle``.

Exit codes: 0 success, 2 usage error, 3 numerical consistency failure,
4 I/O error.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .errors import ConsistencyError, ParameterError
from .hamiltonian import HamiltonianParams
from .scenarios import (
    DEFAULT_EPSILON,
    DEFAULT_GT_MAX,
    DEFAULT_STEPS,
    ScenarioConfig,
    paper_figures,
    report_peaks,
    run_scenario,
    spectrum_table,
)
from .trajectory import TrajectoryIOError

EXIT_USAGE = 2
EXIT_NUMERICS = 3
EXIT_IO = 4

# key=value config keys -> (argparse dest, converter)
_CONFIG_KEYS = {
    "photons": ("photons", int),
    "in-b": ("in_b", int),
    "g": ("g", float),
    "omega": ("omega", float),
    "gt-max": ("gt_max", float),
    "steps": ("steps", int),
    "epsilon": ("epsilon", float),
    "oracle": ("oracle", lambda v: v.strip().lower() in ("1", "true", "yes", "on")),
    "out": ("out", str),
}
_RUN_DEFAULTS = {"g": 1.0, "omega": 0.0, "gt_max": DEFAULT_GT_MAX, "steps": DEFAULT_STEPS,
                 "epsilon": DEFAULT_EPSILON, "oracle": False}


def read_config(path: str) -> dict:
    """Parse a flat ``key=value`` file; '#' starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip().lstrip("-")
            if not sep or key not in _CONFIG_KEYS:
                raise ParameterError(f"{path}:{lineno}: unrecognised config line {raw.strip()!r}")
            dest, conv = _CONFIG_KEYS[key]
            try:
                values[dest] = conv(value.strip())
            except ValueError as exc:
                raise ParameterError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="susy-entangle",
        description="Two-mode two-photon exchange dynamics and entanglement entropy.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="entropy trajectory of |N-L>_A|L>_B as CSV")
    run.add_argument("--config", help="flat key=value file; command-line flags take precedence")
    run.add_argument("--photons", type=int, help="total photon number N")
    run.add_argument("--in-b", dest="in_b", type=int, help="initial photons L in mode B")
    run.add_argument("--g", type=float, help="coupling constant (default 1.0)")
    run.add_argument("--omega", type=float, help="mode frequency (default 0.0)")
    run.add_argument("--gt-max", dest="gt_max", type=float, help="grid end in units of g*t (default 2.0)")
    run.add_argument("--steps", type=int, help="number of grid points (default 2001)")
    run.add_argument("--epsilon", type=float, help="survival-time tolerance in nats (default 0.05)")
    run.add_argument("--oracle", action="store_true", default=None, help=argparse.SUPPRESS)
    run.add_argument("--out", help="output CSV path")

    spec = sub.add_parser("spectrum", help="print E_k with multiplicities")
    spec.add_argument("--photons", type=int, required=True)
    spec.add_argument("--g", type=float, default=1.0)
    spec.add_argument("--omega", type=float, default=0.0)

    figs = sub.add_parser("paper-figures", help="write the Figure 1 and Figure 2 datasets")
    figs.add_argument("--out-dir", required=True)
    return parser


def _run_settings(args, parser) -> dict:
    settings = dict(_RUN_DEFAULTS)
    if args.config:
        try:
            settings.update(read_config(args.config))
        except OSError as exc:
            parser.error(f"cannot read config {args.config}: {exc}")
    for key in ("photons", "in_b", "g", "omega", "gt_max", "steps", "epsilon", "oracle", "out"):
        value = getattr(args, key)
        if value is not None:
            settings[key] = value
    for key in ("photons", "in_b", "out"):
        if settings.get(key) is None:
            parser.error(f"run: --{key.replace('_', '-')} is required")
    return settings


def _cmd_run(args, parser) -> int:
    s = _run_settings(args, parser)
    cfg = ScenarioConfig.from_gt_max(
        s["photons"], s["in_b"], gt_max=s["gt_max"], g=s["g"], omega=s["omega"],
        steps=s["steps"], survival_epsilon=s["epsilon"], output=s["out"], oracle=s["oracle"])
    record = run_scenario(cfg)
    peaks = report_peaks(record, cfg.survival_epsilon)
    print(f"wrote {len(record)} rows to {cfg.output}")
    print(f"peak entropy {peaks.peak_value:.12g} at gt={peaks.peak_gt:.6g}; "
          f"survival (eps={peaks.epsilon:g}) gt-length {peaks.survival_gt:.6g}")
    return 0


def _cmd_spectrum(args, parser) -> int:
    rows = spectrum_table(HamiltonianParams(args.omega, args.g, args.photons))
    print("k,lambda,E,multiplicity")
    for k, (lam, energy, mult) in enumerate(rows, 1):
        print(f"{k},{lam!r},{energy!r},{mult}")
    return 0


def _cmd_figures(args, parser) -> int:
    for name, (path, peaks) in paper_figures(args.out_dir).items():
        print(f"{name}: peak {peaks.peak_value:.6f} at gt={peaks.peak_gt:.4f}, "
              f"survival gt-length {peaks.survival_gt:.4f} -> {path}")
    return 0


_COMMANDS = {"run": _cmd_run, "spectrum": _cmd_spectrum, "paper-figures": _cmd_figures}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, parser)
    except ParameterError as exc:
        print(f"susy-entangle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"susy-entangle: numerical check failed: {exc}", file=sys.stderr)
        return EXIT_NUMERICS
    except (TrajectoryIOError, OSError) as exc:
        print(f"susy-entangle: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
