"""Command-line driver writing CSV tables.

Subcommands::

    qcdeph family {two-param,dfs-mix,iso-mix} --alpha A [--gamma G | --beta B] --grid START:STOP:STEP --out FILE
    qcdeph random --n N --seed S --grid START:STOP:STEP --out FILE [--bars FILE]
    qcdeph state FILE.json --gamma-t T [--out FILE]

Exit codes: 0 success, 2 invalid parameters, 3 unreadable state file,
4 state file that is not a density matrix.
"""

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from . import closedform as cf
from .channel import dephase
from .correlations import CorrelationRecord, correlation_record
from .ensemble import EnsembleConfig, run_ensemble
from .exceptions import InvalidParams, InvariantViolation
from .states import (
    DfsMixFamily,
    IsoMixFamily,
    TwoParamFamily,
    dfs_mix_state,
    iso_mix_state,
    load_state,
    two_param_state,
    validate_density_matrix,
)

EXIT_PARAMS = 2
EXIT_PARSE = 3
EXIT_INVARIANT = 4

RECORD_COLUMNS = ["gamma_t", "negativity", "classical", "discord", "lqu"]
FAMILIES = ("two-param", "dfs-mix", "iso-mix")


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def fmt(x) -> str:
    return format(float(x), ".12g")


def parse_grid(text: str) -> np.ndarray:
    """``"start:stop:step"`` to an inclusive grid of ``gamma_t`` values."""
    try:
        start, stop, step = (float(p) for p in text.split(":"))
    except ValueError:
        raise InvalidParams(f"--grid must be START:STOP:STEP, got {text!r}") from None
    if not all(np.isfinite([start, stop, step])):
        raise InvalidParams("--grid values must be finite")
    if step <= 0:
        raise InvalidParams(f"--grid step must be > 0, got {step}")
    if stop < start:
        raise InvalidParams(f"--grid stop must be >= start, got {start}:{stop}")
    if start < 0:
        raise InvalidParams(f"--grid start must be >= 0, got {start}")
    n = int(np.floor((stop - start) / step + 1e-9))
    return start + step * np.arange(n + 1)


def _family(name, alpha, gamma, beta):
    """Resolve CLI flags to (state, closed-form columns)."""

    def need(flag, value):
        if value is None:
            raise InvalidParams(f"family {name} requires --{flag}")
        return value

    def forbid(flag, value, why):
        if value is not None:
            raise InvalidParams(f"family {name} does not take --{flag} ({why})")

    if name == "two-param":
        forbid("beta", beta, "beta = (1 - 2 alpha - gamma)/3 is derived")
        f = TwoParamFamily(need("alpha", alpha), need("gamma", gamma))
        closed = {
            "negativity_cf": lambda g: cf.negativity_closed_form_two_param(f, g),
            "discord_cf": lambda g: cf.discord_closed_form(f, g),
            "lqu_cf": lambda g: cf.lqu_closed_form_two_param(f, g),
        }
        return two_param_state(f), closed
    if name == "dfs-mix":
        forbid("gamma", gamma, "single-parameter family")
        forbid("beta", beta, "single-parameter family")
        f = DfsMixFamily(need("alpha", alpha))
        closed = {
            "negativity_cf": lambda g: cf.negativity_closed_form_dfs_mix(f.alpha, g),
            "lqu_cf": lambda g: cf.lqu_closed_form_dfs_mix(f.alpha, g),
        }
        return dfs_mix_state(f), closed
    if name == "iso-mix":
        forbid("gamma", gamma, "parameters are alpha and beta")
        f = IsoMixFamily(need("alpha", alpha), need("beta", beta))
        closed = {"negativity_cf": lambda g: cf.negativity_closed_form_iso_mix(f.alpha, f.beta, g)}
        return iso_mix_state(f), closed
    raise InvalidParams(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def _record_row(rec: CorrelationRecord):
    return [fmt(getattr(rec, c)) for c in RECORD_COLUMNS]


def run_family_sweep(family, grid, out, alpha=None, gamma=None, beta=None):
    """Write one row of all four measures (plus closed forms) per grid point.

    Returns the list of :class:`CorrelationRecord` written.
    """
    rho0, closed = _family(family, alpha, gamma, beta)
    records = [correlation_record(dephase(rho0, g), g) for g in grid]
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RECORD_COLUMNS + list(closed))
        for rec in records:
            w.writerow(_record_row(rec) + [fmt(fn(rec.gamma_t)) for fn in closed.values()])
    return records


def bars_path_for(out) -> Path:
    out = Path(out)
    return out.with_name(out.stem + "_asymptotic.csv")


def run_random(n, seed, grid, out, bars=None, workers=None):
    """Ensemble summary ``gamma_t,mean,lo,hi`` to ``out`` and per-state
    asymptotic negativities to ``bars`` (default ``<out stem>_asymptotic.csv``)."""
    summary = run_ensemble(EnsembleConfig(n, seed, tuple(grid)), workers=workers)
    bars = bars_path_for(out) if bars is None else Path(bars)
    with open(out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["gamma_t", "mean", "lo", "hi"])
        for row in zip(summary.grid, summary.mean, summary.lo, summary.hi):
            w.writerow([fmt(x) for x in row])
    with open(bars, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["state_index", "asymptotic_negativity"])
        for i, v in enumerate(summary.asymptotic_negativity):
            w.writerow([i, fmt(v)])
    return summary


def run_state_file(path, gamma_t, out=None):
    """Evaluate a DensityMatrix JSON file at ``gamma_t`` and print one CSV row."""
    try:
        rho = load_state(path)
    except (OSError, ValueError) as err:
        raise CliError(EXIT_PARSE, f"cannot read state file {path}: {err}") from None
    try:
        rho = validate_density_matrix(rho)
    except InvariantViolation as err:
        raise CliError(EXIT_INVARIANT, f"invalid density matrix ({err.which}): {err}") from None
    rec = correlation_record(dephase(rho, gamma_t), gamma_t)
    fh = open(out, "w", newline="") if out else sys.stdout
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RECORD_COLUMNS)
        w.writerow(_record_row(rec))
    finally:
        if out:
            fh.close()
    return rec


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcdeph", description="Qubit-qutrit correlations under collective dephasing.")
    sub = p.add_subparsers(dest="command", required=True)

    fam = sub.add_parser("family", help="sweep an analytic state family over gamma_t")
    fam.add_argument("family", choices=FAMILIES)
    fam.add_argument("--alpha", type=float)
    fam.add_argument("--gamma", type=float)
    fam.add_argument("--beta", type=float)
    fam.add_argument("--grid", required=True, help="START:STOP:STEP (inclusive)")
    fam.add_argument("--out", required=True)

    rnd = sub.add_parser("random", help="Haar-random pure-state ensemble")
    rnd.add_argument("--n", type=int, required=True)
    rnd.add_argument("--seed", type=int, required=True)
    rnd.add_argument("--grid", required=True, help="START:STOP:STEP (inclusive)")
    rnd.add_argument("--out", required=True, help="summary CSV path")
    rnd.add_argument("--bars", help="per-state asymptotic CSV (default: <out stem>_asymptotic.csv)")

    st = sub.add_parser("state", help="evaluate a DensityMatrix JSON file")
    st.add_argument("path")
    st.add_argument("--gamma-t", type=float, required=True)
    st.add_argument("--out")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "family":
            run_family_sweep(args.family, parse_grid(args.grid), args.out, args.alpha, args.gamma, args.beta)
        elif args.command == "random":
            if args.n < 1:
                raise InvalidParams(f"--n must be >= 1, got {args.n}")
            run_random(args.n, args.seed, parse_grid(args.grid), args.out, args.bars)
        else:
            if not np.isfinite(args.gamma_t) or args.gamma_t < 0:
                raise InvalidParams(f"--gamma-t must be >= 0, got {args.gamma_t}")
            run_state_file(args.path, args.gamma_t, args.out)
    except InvalidParams as err:
        print(f"qcdeph: error: {err}", file=sys.stderr)
        return EXIT_PARAMS
    except CliError as err:
        print(f"qcdeph: error: {err}", file=sys.stderr)
        return err.code
    return 0


if __name__ == "__main__":
    sys.exit(main())
