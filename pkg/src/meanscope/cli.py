"""Command-line harness: run law suites, sweeps, and seed reproductions.

Exit codes: 0 success, 1 at least one law violation, 2 usage/config error.
Reports are JSON (structured, round-trippable); curves are CSV.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

import numpy as np

from . import __version__, laws
from .linalg import matrix_to_dict

DEFAULT_TRIALS = 200
DEFAULT_TOL = laws.DEFAULT_TOL
DEFAULT_KAPPA = 1e4
SEED_ENV_VAR = "MEANSCOPE_SEED"


class UsageError(Exception):
    pass


def child_seed(master, law_index, trial):
    """Deterministic 63-bit trial seed; reproducible independently of order."""
    ss = np.random.SeedSequence((int(master) & (2**63 - 1), law_index, trial))
    return int(ss.generate_state(2, np.uint64)[0] & (2**63 - 1))


def _parse_grid(text):
    try:
        a, b, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"bad grid {text!r}, expected a:b:step")
    if step <= 0 or b <= a:
        raise UsageError(f"bad grid {text!r}: need a < b and step > 0")
    count = int(round((b - a) / step))
    grid = [a + i * step for i in range(count + 1)]
    if grid[-1] > b + 1e-12:
        grid = grid[:-1]
    return grid


def _parse_laws(text):
    if text == "all":
        return laws.law_names()
    names = [x.strip() for x in text.split(",") if x.strip()]
    for name in names:
        if name not in laws.law_names() and name not in laws.SWEEPS:
            raise UsageError(f"unknown law {name!r}")
    return names


def _load_config(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}")


def _resolve(args, config, key, default):
    """Flag value if given, else config file value, else default."""
    v = getattr(args, key.replace("-", "_"), None)
    if v is not None:
        return v
    if key in config:
        return config[key]
    return default


def _resolve_seed(args, config):
    v = _resolve(args, config, "seed", None)
    if v is None:
        v = os.environ.get(SEED_ENV_VAR)
    return int(v) if v is not None else 0


def _cycle_n(trial, fixed, cap):
    n = fixed if fixed is not None else (trial % 6) + 1
    return min(n, cap)


def _cycle_m(trial, fixed):
    return fixed if fixed is not None else (trial % 4) + 1


def cmd_verify(args):
    config = _load_config(args.config) if args.config else {}
    law_list = _parse_laws(_resolve(args, config, "laws", "all"))
    law_list = [x for x in law_list if x in laws.law_names()]
    trials = int(_resolve(args, config, "trials", DEFAULT_TRIALS))
    if trials < 0:
        raise UsageError("trials must be non-negative")
    seed = _resolve_seed(args, config)
    tol = float(_resolve(args, config, "tol", DEFAULT_TOL))
    kappa = float(_resolve(args, config, "kappa_max", DEFAULT_KAPPA))
    fieldname = _resolve(args, config, "field", "complex")
    if fieldname not in ("real", "complex"):
        raise UsageError(f"field must be real or complex, got {fieldname!r}")
    fixed_n = _resolve(args, config, "n", None)
    fixed_m = _resolve(args, config, "m", None)

    started = time.monotonic()
    per_law = {}
    any_fail = False
    for law_index, name in enumerate(sorted(law_list)):
        spec = laws.law_spec(name)
        boundaries = laws.boundary_params(name)
        passes = fails = skips = 0
        worst = None
        failing = []
        for k in range(trials):
            cs = child_seed(seed, law_index, k)
            n = _cycle_n(k, fixed_n, spec.n_cap)
            m = _cycle_m(k, fixed_m)
            boundary = boundaries[k] if k < len(boundaries) else None
            inst = laws.sample_instance(name, n=n, m=m, fieldname=fieldname,
                                        kappa_max=kappa, seed=cs,
                                        boundary=boundary)
            result = laws.check_law(name, inst, tol=tol)
            if result.status == "skip":
                skips += 1
                continue
            if result.holds:
                passes += 1
            else:
                fails += 1
                failing.append({"seed": cs, "n": n, "m": m,
                                "boundary": list(boundary) if boundary else None})
            margin = result.margin
            if worst is None or margin < worst["margin"]:
                worst = {"margin": margin, "seed": cs, "n": n, "m": m,
                         "boundary": list(boundary) if boundary else None}
        any_fail = any_fail or fails > 0
        per_law[name] = {"trials": trials, "passes": passes, "fails": fails,
                         "skips": skips, "worst": worst,
                         "failing_seeds": failing}

    report = {
        "version": __version__,
        "config": {"laws": sorted(law_list), "trials": trials, "seed": seed,
                   "tol": tol, "kappa_max": kappa, "field": fieldname,
                   "n": fixed_n, "m": fixed_m},
        "laws": per_law,
        "wall_clock_sec": round(time.monotonic() - started, 6),
        "exit_status": 1 if any_fail else 0,
    }
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    for name in sorted(per_law):
        r = per_law[name]
        worst = r["worst"]
        worst_txt = (f"worst margin {worst['margin']:.3e} @ seed {worst['seed']}"
                     if worst else "no trials")
        print(f"{name:28s} {r['passes']:5d} pass {r['fails']:5d} fail "
              f"{r['skips']:5d} skip   {worst_txt}")
    if any_fail:
        for name in sorted(per_law):
            for f in per_law[name]["failing_seeds"]:
                print(f"FAIL {name} seed={f['seed']} n={f['n']} m={f['m']}")
    return report["exit_status"]


def _build_instance_from_args(args, config, law_for_instance):
    seed = _resolve_seed(args, config)
    kappa = float(_resolve(args, config, "kappa_max", DEFAULT_KAPPA))
    fieldname = _resolve(args, config, "field", "complex")
    n = int(_resolve(args, config, "n", 3))
    m = int(_resolve(args, config, "m", 2))
    boundary = None
    if getattr(args, "boundary", None):
        try:
            s, t = (float(x) for x in args.boundary.split(","))
        except ValueError:
            raise UsageError(f"bad boundary {args.boundary!r}, expected s,t")
        boundary = (s, t)
    return laws.sample_instance(law_for_instance, n=n, m=m,
                                fieldname=fieldname, kappa_max=kappa,
                                seed=seed, boundary=boundary), seed


def cmd_sweep(args):
    config = _load_config(args.config) if args.config else {}
    name = args.law
    if name not in laws.SWEEPS:
        raise UsageError(
            f"law {name!r} is not sweepable; choose from "
            f"{sorted(laws.SWEEPS)}")
    sw = laws.SWEEPS[name]
    if args.grid:
        grid = _parse_grid(args.grid)
    else:
        lo, hi = sw.domain
        grid = list(np.linspace(lo, hi, 17))
    tol = float(_resolve(args, config, "tol", DEFAULT_TOL))
    inst, _ = _build_instance_from_args(args, config, sw.instance_law)
    curve = laws.sweep_law(name, inst, grid, tol=tol)
    rows = [["t", "trace", "lambda_min", "lambda_max", "monotone_link_margin"]]
    for p in curve.points:
        margin = "" if np.isnan(p.link_margin) else repr(p.link_margin)
        rows.append([repr(p.t), repr(p.trace), repr(p.lambda_min),
                     repr(p.lambda_max), margin])
    out = args.out or f"{name}-curve.csv"
    with open(out, "w", newline="") as fh:
        csv.writer(fh).writerows(rows)
    print(f"wrote {out} ({len(curve.points)} grid points, "
          f"{'all links hold' if curve.holds else 'LINK VIOLATION'})")
    return 0 if curve.holds else 1


def cmd_repro(args):
    config = _load_config(args.config) if args.config else {}
    name = args.law
    if name not in laws.law_names():
        raise UsageError(f"unknown law {name!r}")
    tol = float(_resolve(args, config, "tol", DEFAULT_TOL))
    inst, seed = _build_instance_from_args(args, config, name)
    result = laws.check_law(name, inst, tol=tol)
    dump = {
        "law": name,
        "seed": seed,
        "status": result.status,
        "margin": result.margin if result.links else None,
        "summary": result.summary,
        "links": [
            {"label": link.label, "holds": link.holds, "margin": link.margin}
            for link in result.links
        ],
        "matrices": {},
    }
    for label, group in (("A", inst.As), ("B", inst.Bs)):
        for j, mat in enumerate(group or []):
            dump["matrices"][f"{label}{j}"] = matrix_to_dict(mat)
    if inst.a_seq is not None:
        dump["scalars"] = {"a": list(map(float, inst.a_seq)),
                           "b": list(map(float, inst.b_seq))}
    print(json.dumps(dump, indent=2, sort_keys=True))
    return 0 if result.status != "fail" else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="meanscope",
        description="Verify operator-mean inequality chains over random "
                    "positive definite ensembles.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--field", choices=("real", "complex"), default=None)
        p.add_argument("--kappa-max", dest="kappa_max", type=float,
                       default=None)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--config", default=None,
                       help="JSON config file; flags override it")
        p.add_argument("--out", default=None)

    pv = sub.add_parser("verify", help="run law suites and write a report")
    pv.add_argument("--laws", default=None,
                    help="comma-separated law names, or 'all'")
    pv.add_argument("--trials", type=int, default=None)
    common(pv)

    ps = sub.add_parser("sweep", help="sweep a monotone law over a grid")
    ps.add_argument("--law", required=True)
    ps.add_argument("--grid", default=None, help="a:b:step")
    ps.add_argument("--boundary", default=None)
    common(ps)

    pr = sub.add_parser("repro", help="re-run one trial from its seed")
    pr.add_argument("--law", required=True)
    pr.add_argument("--boundary", default=None,
                    help="forced s,t parameters, as recorded in the report")
    common(pr)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "sweep":
            return cmd_sweep(args)
        if args.command == "repro":
            return cmd_repro(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
