"""Command line front end.

    simplexnorm table --max-n 15 --extra 50,100,1000
    simplexnorm norm --simplex tri.json --ball unit2.json --oracle 100000
    simplexnorm verify-t1 -n 5 --trials 1000 --m all --seed 7
    simplexnorm optimize -n 3 --seed 42

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 degenerate input.
Every run writes a manifest (command, parameters, seed, version, timestamp)
to stderr as one JSON line; JSON reports embed it as well.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone

from . import __version__
from .errors import DegenerateSimplex, DimensionMismatch, NodesOutsideBall
from .extremal import extremal_sweep
from .geometry import load_ball, load_simplex, simplex_to_dict
from .optimizer import MAX_N, OptimizeConfig, minimize_norm
from .projector import norm_ball, norm_oracle
from .regular import theta

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3
VERIFY_TOL = 1e-9


def fmt(x) -> str:
    """12 significant digits, locale independent."""
    return format(float(x), ".12g")


def num(x):
    return float(fmt(x))


def manifest(command: str, params: dict, seed: int) -> dict:
    return {
        "command": command,
        "parameters": params,
        "seed": seed,
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def _emit_json(out, man, result):
    json.dump({"schema": SCHEMA, "manifest": man, "result": result}, out, indent=2)
    out.write("\n")


def _emit_csv(out, header, rows, footer=None):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    if footer:
        out.write(footer + "\n")


def _int_list(s: str) -> list[int]:
    try:
        return [int(v) for v in s.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}")


def _positive(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {s!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {v}")
    return v


def _m_arg(s: str):
    if s == "all":
        return "all"
    return _positive(s)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simplexnorm", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="closed-form minimal norms theta_n")
    t.add_argument("--max-n", type=_positive, default=15)
    t.add_argument("--extra", type=_int_list, default=[])
    t.add_argument("--format", choices=["csv", "json"], default="csv")

    nm = sub.add_parser("norm", help="exact projector norm of a simplex on a ball")
    nm.add_argument("--simplex", required=True)
    nm.add_argument("--ball", required=True)
    nm.add_argument("--oracle", type=_positive, default=None, metavar="SAMPLES")
    nm.add_argument("--seed", type=int, default=0)
    nm.add_argument("--threads", type=_positive, default=1)
    nm.add_argument("--format", choices=["csv", "json"], default="json")

    v = sub.add_parser("verify-t1", help="extremal points of minimal ellipsoids, random sweep")
    v.add_argument("-n", type=_positive, required=True)
    v.add_argument("--trials", type=_positive, default=100)
    v.add_argument("--m", type=_m_arg, default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--threads", type=_positive, default=1)
    v.add_argument("--format", choices=["csv", "json"], default="json")

    o = sub.add_parser("optimize", help="search for the node set of least norm")
    o.add_argument("-n", type=_positive, required=True)
    o.add_argument("--starts", type=_positive, default=16)
    o.add_argument("--iters", type=_positive, default=20000)
    o.add_argument("--step", type=float, default=0.3)
    o.add_argument("--shrink", type=float, default=0.7)
    o.add_argument("--no-polish", action="store_true")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--threads", type=_positive, default=1)
    o.add_argument("--format", choices=["csv", "json"], default="json")
    return p


def cmd_table(args, out, err):
    ns = list(range(1, args.max_n + 1)) + [n for n in args.extra if n > args.max_n]
    if any(n < 1 for n in args.extra):
        raise _Usage("--extra values must be >= 1")
    recs = [theta(n) for n in ns]
    params = {"max_n": args.max_n, "extra": args.extra, "format": args.format}
    man = manifest("table", params, 0)
    _log_manifest(err, man)
    header = ["n", "a_n", "psi_a", "psi_a1", "k_n", "theta"]
    if args.format == "csv":
        _emit_csv(out, header, [[r.n, r.a_n, fmt(r.psi_at_a), fmt(r.psi_at_a_plus_1), r.k_n,
                                 fmt(r.theta)] for r in recs])
    else:
        _emit_json(out, man, {"rows": [dict(zip(header, [r.n, r.a_n, num(r.psi_at_a),
                                                        num(r.psi_at_a_plus_1), r.k_n,
                                                        num(r.theta)])) for r in recs]})
    return EXIT_OK


def cmd_norm(args, out, err):
    try:
        S = load_simplex(args.simplex)
        B = load_ball(args.ball)
    except DegenerateSimplex:
        raise
    except (OSError, ValueError) as e:
        raise _Usage(str(e))
    if S.n != B.n:
        raise _Usage(f"simplex dimension {S.n} != ball dimension {B.n}")
    rep = norm_ball(S, B, workers=args.threads)
    params = {"simplex": args.simplex, "ball": args.ball, "oracle": args.oracle,
              "threads": args.threads, "format": args.format}
    man = manifest("norm", params, args.seed)
    _log_manifest(err, man)
    result = {"norm": num(rep.norm),
              "argmax_signs": [int(f) for f in rep.argmax_signs],
              "argmax_point": [num(x) for x in rep.argmax_point]}
    if args.oracle:
        o = norm_oracle(S, B, args.oracle, args.seed)
        result["oracle"] = num(o)
        result["oracle_gap"] = num(rep.norm - o)
    if args.format == "json":
        _emit_json(out, man, result)
    else:
        keys = list(result)
        _emit_csv(out, keys, [[_cell(result[k]) for k in keys]])
    return EXIT_OK


def _cell(v):
    if isinstance(v, list):
        return " ".join(fmt(x) if isinstance(x, float) else str(x) for x in v)
    return fmt(v) if isinstance(v, float) else v


def cmd_verify_t1(args, out, err):
    n = args.n
    if args.m != "all" and args.m > n:
        raise _Usage(f"--m must lie in [1, n={n}], got {args.m}")
    ms = None if args.m == "all" else [args.m]
    recs = extremal_sweep(n, args.trials, ms, args.seed, workers=args.threads)
    worst_norm = max(r.min_norm for r in recs)
    worst_res = max(max(r.mean_square_residual, r.face_sum_residual) for r in recs)
    ok = worst_norm <= 1 + VERIFY_TOL and worst_res <= VERIFY_TOL
    status = "PASS" if ok else "FAIL"
    params = {"n": n, "trials": args.trials, "m": args.m, "format": args.format}
    man = manifest("verify-t1", params, args.seed)
    _log_manifest(err, man)
    summary = {"status": status, "records": len(recs), "max_min_norm": num(worst_norm),
               "max_residual": num(worst_res), "tolerance": VERIFY_TOL}
    if args.format == "json":
        _emit_json(out, man, {
            "summary": summary,
            "trials": [{"trial": r.trial, "m": r.m, "min_norm": num(r.min_norm),
                        "witness": list(r.witness),
                        "mean_square_residual": num(r.mean_square_residual),
                        "face_sum_residual": num(r.face_sum_residual)} for r in recs]})
    else:
        _emit_csv(out, ["trial", "m", "min_norm", "witness", "mean_square_residual",
                        "face_sum_residual"],
                  [[r.trial, r.m, fmt(r.min_norm), " ".join(map(str, r.witness)),
                    fmt(r.mean_square_residual), fmt(r.face_sum_residual)] for r in recs],
                  footer=f"# {status} max_min_norm={fmt(worst_norm)} max_residual={fmt(worst_res)}")
    err.write(f"{status}: {len(recs)} records, max min_J ||y_J|| = {fmt(worst_norm)}, "
              f"max residual = {fmt(worst_res)}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_optimize(args, out, err):
    if args.n > MAX_N:
        raise _Usage(f"-n must be <= {MAX_N}")
    if not 0 < args.shrink < 1 or not args.step > 0:
        raise _Usage("--shrink must lie in (0, 1) and --step must be > 0")
    cfg = OptimizeConfig(n=args.n, starts=args.starts, iters=args.iters,
                         initial_step=args.step, shrink=args.shrink, seed=args.seed,
                         polish=not args.no_polish)
    res = minimize_norm(cfg, workers=args.threads)
    params = {"n": args.n, "starts": args.starts, "iters": args.iters, "step": args.step,
              "shrink": args.shrink, "polish": not args.no_polish, "format": args.format}
    man = manifest("optimize", params, args.seed)
    _log_manifest(err, man)
    result = {"best_norm": num(res.best_norm), "theta": num(res.theta),
              "theta_gap": num(res.theta_gap),
              "inscribed_deviation": num(res.regularity[0]),
              "distance_spread": num(res.regularity[1]),
              "best_start": res.best_start, "polished": res.polished,
              # full precision so the simplex can be fed back to `norm`
              "simplex": simplex_to_dict(res.best_simplex)}
    if args.format == "json":
        _emit_json(out, man, result)
    else:
        keys = [k for k in result if k != "simplex"]
        _emit_csv(out, keys + ["simplex"], [[_cell(result[k]) for k in keys]
                                            + [json.dumps(result["simplex"])]])
    return EXIT_OK


class _Usage(Exception):
    pass


def _log_manifest(err, man):
    err.write(json.dumps({"manifest": man}) + "\n")


COMMANDS = {"table": cmd_table, "norm": cmd_norm, "verify-t1": cmd_verify_t1,
            "optimize": cmd_optimize}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out, err)
    except _Usage as e:
        err.write(f"simplexnorm {args.command}: error: {e}\n")
        return EXIT_USAGE
    except DegenerateSimplex as e:
        err.write(f"simplexnorm {args.command}: {e}\n")
        return EXIT_DEGENERATE
    except (DimensionMismatch, NodesOutsideBall) as e:
        err.write(f"simplexnorm {args.command}: error: {e}\n")
        return EXIT_USAGE


def run(argv) -> tuple[int, str, str]:
    """Run the CLI in-process; returns ``(exit_code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
