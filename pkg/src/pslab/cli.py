"""Command-line front end: ``pslab <command> ...``.

Commands emit CSV (with a header row) or JSON on stdout, or to ``--output``.
``verify`` exits non-zero when any check fails. The environment variable
PSLAB_THREADS bounds worker processes and BLAS threads.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext

from threadpoolctl import threadpool_limits

from ._validation import check_kappa, check_m, is_exact_rational_text
from .asymptotics import DEFAULT_DERIV_N, asymptotic_estimate, theorem_constants
from .exact import count_table, m_label
from .pszeta import poles, ps_zeta, ps_zeta_deriv_zero, ps_zeta_zero, residue_at
from .saddle import saddle_estimate
from .sequence import condition2_statistic, condition2_value, weyl_sum
from .verify import run_suite


def thread_budget() -> int:
    raw = os.environ.get("PSLAB_THREADS", "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"PSLAB_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        raise SystemExit("PSLAB_THREADS must be >= 1")
    return value


def _kappa_arg(text: str, decimal_ok: bool):
    if decimal_ok and not is_exact_rational_text(text):
        warnings.warn(f"decimal kappa {text!r} is treated as irrational (d_alpha = inf)",
                      stacklevel=2)
    return check_kappa(text, allow_decimal=decimal_ok)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _fmt(x: float) -> str:
    return repr(float(x))


def _saddle_row(args):
    n, kp, m = args
    r = saddle_estimate(n, kp, m)
    return r


def _map(fn, items, threads: int):
    if threads > 1 and len(items) > 4:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(i) for i in items]


def cmd_count(args) -> str:
    kp = _kappa_arg(args.kappa, False)
    table = count_table(kp, check_m(args.m), args.N, method=args.method)
    return table.to_json() + "\n" if args.format == "json" else table.to_csv()


def cmd_asym(args) -> str:
    kp = _kappa_arg(args.kappa, False)
    model = theorem_constants(kp, check_m(args.m), args.deriv_N)
    ests = [(n, asymptotic_estimate(n, model)) for n in args.n]
    if args.format == "csv":
        return _csv_text(["n", "log_estimate"], [(n, _fmt(v)) for n, v in ests])
    data = model.to_dict()
    data["estimates"] = [{"n": n, "log_estimate": v} for n, v in ests]
    return json.dumps(data, indent=2) + "\n"


def cmd_saddle(args, threads: int) -> str:
    kp = _kappa_arg(args.kappa, True)
    m = check_m(args.m)
    results = _map(_saddle_row, [(n, kp, m) for n in args.n], threads)
    rows = [(r.n, _fmt(r.x), _fmt(r.log_estimate), _fmt(r.l_values[0]),
             _fmt(r.l_values[1]), _fmt(r.l_values[2])) for r in results]
    return _csv_text(["n", "x", "log_estimate", "L", "L1", "L2"], rows)


def cmd_zeta(args) -> str:
    kp = _kappa_arg(args.kappa, False)
    rows = []
    for h, p in enumerate(poles(kp)):
        rows.append(("residue", _fmt(p), _fmt(residue_at(h, kp)), "0.0", "closed-form"))
    rows.append(("zeta_kappa(0)", "0", str(ps_zeta_zero(kp)), "0.0", "exact"))
    zd = ps_zeta_deriv_zero(kp, args.deriv_N)
    rows.append(("zeta_kappa'(0)", "0", _fmt(zd.value), _fmt(zd.error_bound), zd.method))
    for s in args.s:
        z = ps_zeta(s, kp)
        rows.append(("zeta_kappa(s)", _fmt(s), _fmt(z.value), _fmt(z.error_bound), z.method))
    header = ["quantity", "s", "value", "error_bound", "method"]
    if args.format == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    return _csv_text(header, rows)


def cmd_verify(args) -> tuple[str, int]:
    checks = run_suite(args.suite)
    lines = [c.line() for c in checks]
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", (1 if failed else 0)


def cmd_weyl(args) -> str:
    kp = _kappa_arg(args.kappa, True)
    rows = []
    for H in args.H:
        for y in args.y:
            s = weyl_sum(H, y, kp)
            rows.append((H, _fmt(y), _fmt(s.real_part), _fmt(s.imag_part), _fmt(s.modulus),
                         _fmt(condition2_value(H, y, kp)), ""))
        if args.grid:
            rows.append((H, "", "", "", "", "", _fmt(condition2_statistic(H, kp, args.grid))))
    return _csv_text(["H", "y", "real", "imag", "modulus", "condition2", "condition2_min"], rows)


def _default_ladder(N: int) -> list[int]:
    out, n = [], 125
    while n <= N:
        out.append(n)
        n *= 2
    return out or [N]


def cmd_table(args, threads: int) -> str:
    kp = _kappa_arg(args.kappa, False)
    m = check_m(args.m)
    ns = args.n or _default_ladder(args.N)
    top = max(max(ns), args.N)
    table = count_table(kp, m, top)
    model = theorem_constants(kp, m, args.deriv_N)
    saddles = _map(_saddle_row, [(n, kp, m) for n in ns], threads)
    rows = []
    for n, sr in zip(ns, saddles):
        exact = table[n]
        log_exact = math.log(exact) if exact else -math.inf
        log_asym = asymptotic_estimate(n, model)
        rows.append((n, str(exact), _fmt(log_exact), _fmt(sr.log_estimate), _fmt(log_asym),
                     _fmt(math.exp(sr.log_estimate - log_exact)),
                     _fmt(math.exp(log_asym - log_exact))))
    return _csv_text(["n", "count", "log_exact", "log_saddle", "log_asym",
                      "ratio_saddle", "ratio_asym"], rows)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pslab", description=(
        "Partitions into floor(l^kappa): exact counts, zeta values, saddle and "
        "closed-form asymptotics."))
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_m=True):
        sp.add_argument("--kappa", required=True, help="exponent as p/q (decimals only for weyl/saddle)")
        if with_m:
            sp.add_argument("--m", default="inf", help="multiplicity cap: positive integer or inf")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    sp = sub.add_parser("count", help="exact counts p_{kappa,m}(n), n = 0..N")
    common(sp)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--method", choices=["auto", "groups", "euler"], default="auto")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")

    sp = sub.add_parser("asym", help="closed-form constants and log estimates")
    common(sp)
    sp.add_argument("--n", type=int, nargs="+", required=True)
    sp.add_argument("--deriv-N", type=int, default=DEFAULT_DERIV_N)
    sp.add_argument("--format", choices=["csv", "json"], default="json")

    sp = sub.add_parser("saddle", help="saddle-point estimates")
    common(sp)
    sp.add_argument("--n", type=int, nargs="+", required=True)

    sp = sub.add_parser("zeta", help="residues, zeta_kappa(0), zeta_kappa'(0) and zeta_kappa(s)")
    common(sp, with_m=False)
    sp.add_argument("--s", type=float, nargs="*", default=[])
    sp.add_argument("--deriv-N", type=int, default=DEFAULT_DERIV_N)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")

    sp = sub.add_parser("verify", help="golden-constant checks")
    sp.add_argument("--suite", choices=["constants", "identity", "all"], default="constants")
    sp.add_argument("--output", "-o")

    sp = sub.add_parser("weyl", help="Weyl sums and condition (II) diagnostics")
    common(sp, with_m=False)
    sp.add_argument("--H", type=int, nargs="+", required=True)
    sp.add_argument("--y", type=float, nargs="+", default=[0.25])
    sp.add_argument("--grid", type=int, default=0, help="also minimise over a y-grid of this size")

    sp = sub.add_parser("table", help="exact / saddle / asymptotic comparison")
    common(sp)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--n", type=int, nargs="*", default=[])
    sp.add_argument("--deriv-N", type=int, default=DEFAULT_DERIV_N)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    threads = thread_budget()
    status = 0
    limits = threadpool_limits(limits=threads) if threads else nullcontext()
    try:
        with limits:
            if args.command == "count":
                text = cmd_count(args)
            elif args.command == "asym":
                text = cmd_asym(args)
            elif args.command == "saddle":
                text = cmd_saddle(args, threads)
            elif args.command == "zeta":
                text = cmd_zeta(args)
            elif args.command == "verify":
                text, status = cmd_verify(args)
            elif args.command == "weyl":
                text = cmd_weyl(args)
            else:
                text = cmd_table(args, threads)
    except (ValueError, ArithmeticError) as exc:
        print(f"pslab {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
