"""Command-line interface.

Exit codes: 0 success, 1 a bound/inequality violation was detected,
2 usage or input-format error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import compare_all
from .errors import UncertaintyError
from .experiments import SweepGrid, sweep_fig1, sweep_fig2, write_csv
from .operators import parse_real, parse_state_spec, pauli, spin1_ops
from .textio import read_observable
from .verifier import AuditConfig, Target, audit_random, claimed_minimizers, minimize_diff_bloch

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
BREACH_TOL = 1e-9


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _g12(v):
    return None if v is None else float(format(v, ".12g"))


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _real(text):
    try:
        return parse_real(text)
    except UncertaintyError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _observables(spec):
    if spec == "pauli":
        return list(pauli())
    if spec == "spin1":
        return list(spin1_ops())
    if spec.startswith("file:"):
        paths = [p for p in spec[5:].split(",") if p]
        try:
            return [read_observable(p) for p in paths]
        except OSError as exc:
            raise UncertaintyError(f"cannot read observable file: {exc}") from None
    raise UncertaintyError(f"unknown observable set {spec!r} (pauli, spin1, file:a,b,...)")


def build_parser():
    p = _Parser(prog="varbounds", description="Variance-sum uncertainty bounds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f1 = sub.add_parser("sweep-fig1", help="qubit family sweep to CSV")
    f1.add_argument("--steps", type=int, required=True)
    f1.add_argument("--out", required=True)

    f2 = sub.add_parser("sweep-fig2", help="spin-1 family sweep to CSV")
    f2.add_argument("--theta-steps", type=int, required=True)
    f2.add_argument("--phi-steps", type=int, default=1)
    f2.add_argument("--phi-slice", type=_real, default=None)
    f2.add_argument("--out", required=True)

    c = sub.add_parser("compare", help="evaluate every bound for one state")
    c.add_argument("--obs", required=True)
    c.add_argument("--state", required=True)
    c.add_argument("--json", action="store_true")

    a = sub.add_parser("audit", help="randomized falsification campaign")
    a.add_argument("--trials", type=int, required=True)
    a.add_argument("--dims", type=_int_list, default=[2, 3])
    a.add_argument("--n-obs", type=_int_list, default=[3])
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--violations-csv", default=None)

    m = sub.add_parser("minimize", help="minimize a qubit bound gap over the Bloch ball")
    m.add_argument("--target", choices=[t.value for t in Target], required=True)
    m.add_argument("--grid-step", type=float, default=0.02)
    m.add_argument("--refine", type=int, default=40)
    return p


def _cmd_sweep(rows, out, stdout):
    write_csv(rows, out)
    breaches = sum(r.sv < r.lb_new - BREACH_TOL for r in rows)
    stdout.write(f"wrote {len(rows)} rows to {out}\n")
    if breaches:
        stdout.write(f"{breaches} rows with sv < lb_new\n")
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_compare(args, stdout):
    obs = _observables(args.obs)
    state = parse_state_spec(args.state)
    rep = compare_all(obs, state)
    if args.json:
        d = rep.to_dict()
        for key in ("sum_of_variances", "lb_new", "fb_chen", "pb1_plus", "pb2_minus"):
            d[key] = _g12(d[key])
        for pair in d["pairwise_product_bounds"]:
            pair["robertson"] = _g12(pair["robertson"])
            pair["schrodinger"] = _g12(pair["schrodinger"])
        stdout.write(json.dumps(d) + "\n")
    else:
        rows = [
            ("SV", rep.sum_of_variances),
            ("LB", rep.lb_new),
            ("FB", rep.fb_chen),
            ("PB1", rep.pb1_plus),
            ("PB2", rep.pb2_minus),
        ]
        for label, v in rows:
            stdout.write(f"{label:<4} {'n/a' if v is None else format(v, '.12g')}\n")
        for i, j, rob, sch in rep.pairwise_product_bounds:
            stdout.write(f"pair {i},{j}  robertson {rob:.12g}  schrodinger {sch:.12g}\n")
    breached = any(g < -BREACH_TOL for g in rep.gaps().values())
    return EXIT_VIOLATION if breached else EXIT_OK


def _cmd_audit(args, stdout):
    cfg = AuditConfig(args.trials, tuple(args.dims), tuple(args.n_obs), args.seed)
    report = audit_random(cfg)
    stdout.write(report.summary())
    if args.violations_csv:
        with open(args.violations_csv, "w", newline="", encoding="ascii") as fh:
            fh.write(report.violations_csv())
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_minimize(args, stdout):
    target = Target(args.target)
    res = minimize_diff_bloch(target, args.grid_step, args.refine)
    claimed = target.claimed_minimum
    at_points = min(target.function(p) for p in claimed_minimizers(target))
    x, y, z = res.argmin
    stdout.write(f"target      {target.value}\n")
    stdout.write(f"min_value   {res.min_value:.12g}\n")
    stdout.write(f"argmin      {x:.12g} {y:.12g} {z:.12g}\n")
    stdout.write(f"claimed     {claimed:.12g}\n")
    stdout.write(f"at_claimed  {at_points:.12g}\n")
    stdout.write(f"grid_points {res.grid_points}\n")
    return EXIT_VIOLATION if res.min_value < claimed - BREACH_TOL else EXIT_OK


def run(argv=None, stdout=None, stderr=None):
    """Run the CLI and return the exit code (never calls ``sys.exit``)."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "sweep-fig1":
            return _cmd_sweep(sweep_fig1(args.steps), args.out, stdout)
        if args.command == "sweep-fig2":
            grid = SweepGrid(args.theta_steps, args.phi_steps, args.phi_slice)
            return _cmd_sweep(sweep_fig2(grid), args.out, stdout)
        if args.command == "compare":
            return _cmd_compare(args, stdout)
        if args.command == "audit":
            return _cmd_audit(args, stdout)
        return _cmd_minimize(args, stdout)
    except _UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except (UncertaintyError, OSError) as exc:
        stderr.write(f"varbounds: error: {exc}\n")
        stderr.write(parser.format_usage())
        return EXIT_USAGE


def main():
    sys.exit(run())
