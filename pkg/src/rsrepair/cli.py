"""Command-line front end: bounds tables, exact distances, repair trials,
bandwidth series and GS parameters."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from .bounds import (DEFAULT_BUDGET, bandwidth_series, bounds_report, enumeration_size,
                     exact_distance)
from .gf_tower import SIZE_CAP, get_tower, is_prime
from .list_decode import best_gs_params, gs_params
from .report import bounds_rows, bounds_table, render
from .sim import InvariantViolation, simulate
from .trace_repair import DECODERS, build_trace_code, make_scheme

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_INVARIANT = 0, 2, 3, 4


class UsageError(Exception):
    pass


def parse_k_range(text: str) -> list[int]:
    """"7", "1..9" or "1,3,5"."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            ks = list(range(int(lo), int(hi) + 1))
        else:
            ks = [int(s) for s in text.split(",")]
    except ValueError:
        raise UsageError(f"bad k range {text!r}") from None
    if not ks or min(ks) < 1:
        raise UsageError("k must be a positive integer")
    return ks


def _check_tower(args) -> None:
    if not is_prime(args.p):
        raise UsageError(f"p={args.p} is not prime")
    if args.m < 1 or args.t < 2:
        raise UsageError("need m >= 1 and t >= 2")
    if args.p ** (args.m * args.t) > SIZE_CAP:
        raise UsageError(f"|F| = {args.p}^{args.m * args.t} exceeds the size cap {SIZE_CAP}")


def _single_k(args) -> int:
    ks = parse_k_range(args.k)
    if len(ks) != 1:
        raise UsageError("this subcommand takes a single k")
    return ks[0]


def _feasible_trace_code(args, k):
    scheme = make_scheme(get_tower(args.p, args.m, args.t), k)
    if not scheme.feasible:
        raise UsageError(f"k={k} is infeasible: traces do not determine f(0)")
    return build_trace_code(scheme)


def cmd_bounds(args, out) -> int:
    _check_tower(args)
    ks = parse_k_range(args.k)
    rows = bounds_rows(args.p, args.m, args.t, ks, exact=args.exact,
                       budget=args.budget, mu_max=args.mu_max)
    table = bounds_table(rows, args.exact)
    out.write(render(table, args.format, payload=rows))
    return EXIT_OK


def cmd_exact(args, out) -> int:
    _check_tower(args)
    k = _single_k(args)
    tc = _feasible_trace_code(args, k)
    size = enumeration_size(tc)
    if size > args.budget:
        sys.stderr.write(f"budget exceeded: {size} nonzero codewords > budget {args.budget}\n")
        return EXIT_BUDGET
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            d = exact_distance(tc, args.budget, partitions=args.jobs, executor=pool)
    else:
        d = exact_distance(tc, args.budget)
    row = {"p": args.p, "m": args.m, "t": args.t, "k": k, "kappa": tc.kappa,
           "d": d, "e": (d - 1) // 2}
    out.write(render([row], args.format))
    return EXIT_OK


def cmd_repair_sim(args, out) -> int:
    _check_tower(args)
    k = _single_k(args)
    if args.errors < 0 or args.erasures < 0 or args.trials < 0:
        raise UsageError("errors, erasures and trials must be non-negative")
    tc = _feasible_trace_code(args, k)
    if args.errors + args.erasures > tc.n:
        raise UsageError(f"at most {tc.n} positions can be corrupted")
    if args.decoder == "modified-gs" and args.erasures:
        raise UsageError("modified-gs does not take erasures")
    try:
        res = simulate(tc, args.errors, args.trials, args.seed, args.decoder, args.mu,
                       args.erasures, strict=True)
    except InvariantViolation as exc:
        sys.stderr.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT
    row = {"p": args.p, "m": args.m, "t": args.t, "k": k, "decoder": args.decoder,
           "errors": args.errors, "erasures": args.erasures, "seed": args.seed,
           **res.to_dict()}
    out.write(render([row], args.format))
    if args.errors > res.radius:
        out.write(f"note: e={args.errors} exceeds the guaranteed radius {res.radius}; "
                  "failures are expected\n")
    sys.stderr.write(f"mean wall time per repair: {res.mean_seconds * 1e3:.3f} ms\n")
    return EXIT_OK


def cmd_bandwidth(args, out) -> int:
    _check_tower(args)
    k = _single_k(args)
    try:
        rows, omitted = bandwidth_series(args.p, args.m, args.t, k, args.errors)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    table = [{"e": r.e, "classical_bits": r.classical_bits, "trace_bits": r.trace_bits,
              "classical_symbols": r.classical_symbols, "trace_symbols": r.trace_symbols}
             for r in rows]
    columns = ["e", "classical_bits", "trace_bits", "classical_symbols", "trace_symbols"]
    if args.format == "json":
        out.write(render(table, "json", payload={"rows": table, "omitted": omitted}))
    else:
        out.write(render(table, args.format, columns))
        if omitted:
            out.write(f"note: rows omitted beyond a decoding radius: e={omitted}\n")
    return EXIT_OK


def cmd_gs_params(args, out) -> int:
    _check_tower(args)
    rows = []
    for k in parse_k_range(args.k):
        rep = bounds_report(args.p, args.m, args.t, k)
        if rep.d_star is None:
            gs = None
        elif args.mu is not None:
            gs = gs_params(rep.n, rep.delta, args.mu, rep.d_star) if rep.delta <= rep.n else None
        else:
            gs = best_gs_params(rep.n, rep.delta, rep.d_star, args.mu_max)
        rows.append({"k": k, "Delta": rep.delta, "d_star": rep.d_star,
                     "mu": gs.mu if gs else None, "delta": gs.delta if gs else None,
                     "e_raw": gs.e_raw if gs else None, "e": gs.e_capped if gs else None})
    out.write(render(rows, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rsrepair", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, k_default=None):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--t", type=int, required=True)
        sp.add_argument("--k", "--k-range", dest="k", required=k_default is None,
                        default=k_default, help='single k, "a..b" or comma list')
        sp.add_argument("--format", choices=("md", "csv", "json"), default="md")

    sp = sub.add_parser("bounds", help="bounds table over a k range")
    common(sp)
    sp.add_argument("--exact", action="store_true", help="add the enumerated Exact column")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--mu-max", type=int, default=1000)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("exact", help="minimum distance by enumeration")
    common(sp)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("repair-sim", help="seeded repair trials")
    common(sp)
    sp.add_argument("--errors", type=int, default=0)
    sp.add_argument("--erasures", type=int, default=0)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--decoder", choices=DECODERS, default="bw-degree")
    sp.add_argument("--mu", type=int, default=1)
    sp.set_defaults(func=cmd_repair_sim)

    sp = sub.add_parser("bandwidth", help="classical vs trace repair bandwidth")
    common(sp)
    sp.add_argument("--errors", type=int, default=None, help="largest e to tabulate")
    sp.set_defaults(func=cmd_bandwidth)

    sp = sub.add_parser("gs-params", help="GS multiplicity search")
    common(sp)
    sp.add_argument("--mu", type=int, default=None, help="fix mu instead of searching")
    sp.add_argument("--mu-max", type=int, default=1000)
    sp.set_defaults(func=cmd_gs_params)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) is not None and not 0 <= getattr(args, "seed", 0) < 2**64:
        sys.stderr.write("error: seed must be a 64-bit unsigned integer\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
