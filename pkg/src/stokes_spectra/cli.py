"""Command-line interface.

    stokes-spectra collisions --model kawahara:a=1,b=-0.25 --m 2
    stokes-spectra isola      --model akersmilewski:sigma=2 --m 1 --p0 0.146 --epsilon 1e-3
    stokes-spectra bf         --model kawahara:a=-3,b=1 --epsilon 1e-2
    stokes-spectra spectrum   --model whitham:h=2 --epsilon 1e-2 --p 0.004
    stokes-spectra trace      --model kawahara:a=1,b=-0.25 --m 2 --p0 0.3675 --theta 1.5708 --epsilon 1e-3
    stokes-spectra run fig4 --out runs/fig4
    stokes-spectra compare-growth --model capillarywhitham:h=inf,sigma=0.25

CSV goes to stdout unless ``--out`` names a directory.  Exit codes: 0 on
success, 2 for configuration errors, 3 for numerical failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import experiments, hill
from .benjamin_feir import bf_constants, compare_growth, lemniscate_curve
from .dispersion import parse_model
from .exceptions import ConfigError, SpectraError
from .flatspec import find_collisions
from .highfreq import isola_for
from .newton_eig import continue_in_epsilon
from .stokes import stokes_expand


def _emit(args, filename, header, rows):
    text = ",".join(header) + "\n" + "\n".join(
        ",".join(f"{x:.12e}" if isinstance(x, float) else str(x) for x in row)
        for row in rows) + "\n"
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
        (Path(args.out) / filename).write_text(text)
    else:
        sys.stdout.write(text)


def _add_common(p, model_required=True):
    p.add_argument("--model", required=model_required,
                   help="model spec string, e.g. kawahara:a=1,b=-0.25")
    p.add_argument("--epsilon", type=float, default=1e-3)
    p.add_argument("--n-modes", type=int, default=32)
    p.add_argument("--out", default=None, help="output directory (default: stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def _cmd_collisions(args):
    model = parse_model(args.model)
    rows = []
    for m in ([args.m] if args.m else (1, 2, 3)):
        for c in find_collisions(model, m, (args.k_min, args.k_max)):
            rows.append((model.family.value, json.dumps(model.params, sort_keys=True).replace(",", ";"),
                         c.m, c.k1, c.k2, float(c.p0), float(c.lambda0.imag),
                         c.krein_negative))
    _emit(args, "collisions.csv",
          ["family", "params", "m", "k1", "k2", "p0", "im_lambda0", "krein_negative"],
          rows)


def _cmd_isola(args):
    model = parse_model(args.model)
    coll = experiments.select_collision(model, args.m, args.p0)
    iso = isola_for(model, coll)
    theta, lam, p = iso.sample(args.epsilon, args.theta_points)
    _emit(args, "isola.csv", ["theta", "re_lambda", "im_lambda", "p"],
          [(float(t), float(l.real), float(l.imag), float(pp))
           for t, l, pp in zip(theta, lam, p)])


def _cmd_bf(args):
    model = parse_model(args.model)
    lm = bf_constants(model)
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
        (Path(args.out) / "constants.json").write_text(
            json.dumps(lm.to_dict(), indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("# constants: " + json.dumps(lm.to_dict(), sort_keys=True) + "\n")
    theta, branch, lam, p = lemniscate_curve(lm, args.epsilon, args.theta_points)
    _emit(args, "lemniscate.csv", ["theta", "branch", "re_lambda", "im_lambda", "p"],
          [(float(t), int(b), float(l.real), float(l.imag), float(pp))
           for t, b, l, pp in zip(theta, branch, lam, p)])


def _cmd_spectrum(args):
    model = parse_model(args.model)
    wave = stokes_expand(model, args.epsilon, 2)
    ps = [args.p] if args.p_max is None else list(
        np.linspace(args.p, args.p_max, args.p_points))
    rows = []
    for sl in hill.sweep(model, wave, ps, args.n_modes, jobs=args.jobs):
        ev = sl.unstable() if args.unstable_only else sl.eigenvalues
        rows.extend((sl.p, float(l.real), float(l.imag)) for l in ev)
    _emit(args, "spectrum.csv", ["p", "re_lambda", "im_lambda"], rows)


def _cmd_trace(args):
    model = parse_model(args.model)
    coll = experiments.select_collision(model, args.m, args.p0)
    iso = isola_for(model, coll)
    eps_list = sorted(args.epsilon_list or [args.epsilon])
    pairs = continue_in_epsilon(model, coll, args.theta, eps_list,
                                N=args.n_modes, isola=iso)
    _emit(args, "trace.csv",
          ["epsilon", "theta", "p", "re_lambda", "im_lambda", "residual", "iters"],
          [(float(e), float(args.theta), pr.p, pr.lam.real, pr.lam.imag,
            pr.residual, pr.iters) for e, pr in zip(eps_list, pairs)])


def _cmd_run(args):
    out = args.out or args.experiment
    summary = experiments.run(args.experiment, out, jobs=args.jobs, model=args.model)
    sys.stdout.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")


def _cmd_compare_growth(args):
    model = parse_model(args.model)
    report = compare_growth(model)
    if args.format == "json":
        payload = {"verdict": report.verdict, "bf_amp": report.bf_amp,
                   "rows": report.rows()}
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        _emit(args, "growth.csv", ["mechanism", "m", "p0", "order", "amplitude"],
              [(mech, m, float(p0), order, float(amp))
               for mech, m, p0, order, amp in report.rows()])
        sys.stdout.write(f"# verdict: {report.verdict}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stokes-spectra",
                                 description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("collisions", help="locate flat-state eigenvalue collisions")
    _add_common(p)
    p.add_argument("--m", type=int, default=0, help="resonance order (default: 1, 2 and 3)")
    p.add_argument("--k-min", type=int, default=-20)
    p.add_argument("--k-max", type=int, default=20)
    p.set_defaults(func=_cmd_collisions)

    p = sub.add_parser("isola", help="asymptotic instability isola of one collision")
    _add_common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p0", type=float, required=True, help="approximate Floquet exponent")
    p.add_argument("--theta-points", type=int, default=256)
    p.set_defaults(func=_cmd_isola)

    p = sub.add_parser("bf", help="modulational-instability lemniscate and constants")
    _add_common(p)
    p.add_argument("--theta-points", type=int, default=256)
    p.set_defaults(func=_cmd_bf)

    p = sub.add_parser("spectrum", help="numerical spectrum at fixed Floquet exponent(s)")
    _add_common(p)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--p-max", type=float, default=None)
    p.add_argument("--p-points", type=int, default=32)
    p.add_argument("--unstable-only", action="store_true")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("trace", help="continue one eigenpair in amplitude")
    _add_common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p0", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--epsilon-list", type=float, nargs="*", default=None)
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("run", help="execute a named experiment")
    p.add_argument("experiment")
    p.add_argument("--model", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("compare-growth", help="rank instability mechanisms of a model")
    _add_common(p)
    p.set_defaults(func=_cmd_compare_growth)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SpectraError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
