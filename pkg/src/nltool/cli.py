"""Command-line front end.

    nltool nl --in anf:"x1*x2+1" --n 2 --method f2
    nltool nlpoly --in tt:7 --n 2 --format json
    nltool spectrum --in tt:7 --n 2 --kind distance
    nltool sweep --n 3 --exhaustive --methods fwt,nnf,f2
    nltool bench --n 8 --reps 20

Exit codes: 0 ok, 2 bad input, 3 methods disagreed during a sweep.
"""

from __future__ import annotations

import argparse
import json
import sys

from .boolean import DomainError
from .formats import FunctionSpec, ParseError, format_int_poly, format_tt_hex, int_poly_terms
from .nlpoly import build_nl_poly, distance_spectrum
from .sweep import METHODS, bench, function_set, report_json, run_method, run_sweep, summarize
from .transforms import walsh_spectrum

EXIT_PARSE = 2
EXIT_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load(args):
    return FunctionSpec.parse(args.input).build(args.n)


def cmd_nl(args) -> int:
    f = _load(args)
    r = run_method(f, args.method)
    if args.format == "json":
        print(_dumps({
            "n": f.n,
            "tt": format_tt_hex(f),
            "nl": r.nonlinearity,
            "method": r.method,
            "counters": dict(sorted(r.counters.items())),
            "micros": round(r.micros, 1),
        }))
    else:
        print(r.nonlinearity)
    return 0


def cmd_nlpoly(args) -> int:
    f = _load(args)
    p = build_nl_poly(f)
    if args.format == "json":
        print(_dumps({"n": f.n, "tt": format_tt_hex(f), "poly": format_int_poly(p.poly),
                      "coefficients": int_poly_terms(p.poly)}))
    else:
        print(format_int_poly(p.poly))
    return 0


def cmd_spectrum(args) -> int:
    f = _load(args)
    if args.kind == "walsh":
        values = walsh_spectrum(f).values.tolist()
    else:
        values = distance_spectrum(f)
    if args.format == "json":
        print(_dumps({"n": f.n, "tt": format_tt_hex(f), "kind": args.kind, "values": values}))
    else:
        print(" ".join(map(str, values)))
    return 0


def _methods(text: str) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    bad = [m for m in methods if m not in METHODS]
    if bad or not methods:
        raise ParseError(f"unknown methods {bad}; choose from {','.join(METHODS)}")
    return methods


def cmd_sweep(args) -> int:
    methods = _methods(args.methods)
    if not args.exhaustive and args.sample is None:
        raise ParseError("sweep needs --exhaustive or --sample N")
    funcs = function_set(args.n, args.exhaustive, args.sample or 0, args.seed)
    items = run_sweep(funcs, methods, workers=args.workers)
    mismatches = [it for it in items if not it.agree]
    for it in mismatches:
        got = {m: r.nonlinearity for m, r in it.reports.items()}
        print(f"mismatch on function #{it.index} (tt={it.tt:x}): {got}", file=sys.stderr)

    if args.format == "json":
        for it in items:
            for m in methods:
                print(_dumps(report_json(it, m, args.n)))
    else:
        classes = summarize(items, methods[0])
        print(f"n={args.n} functions={len(items)} methods={','.join(methods)} "
              f"mismatches={len(mismatches)}")
        print("NL  count")
        for nl, st in classes.items():
            print(f"{nl:>2}  {st.count}")
        if "f2" in methods:
            print("f2 generators per ideal J_t (S = sufficient avg, m/M = min/max, C = checked avg)")
            for nl, st in classes.items():
                for t, row in st.f2_table().items():
                    print(f"NL={nl} t={t}  S={row['S']:.2f} m={row['m']} M={row['M']} C={row['C']:.2f}")
        for m in methods:
            avg = sum(it.reports[m].micros for it in items) / max(1, len(items))
            print(f"{m:>6}: mean {avg:.1f} us")
    return EXIT_MISMATCH if mismatches else 0


def cmd_bench(args) -> int:
    methods = _methods(args.methods)
    table = bench(args.n, args.reps, methods, args.seed)
    if args.format == "json":
        print(_dumps({"n": args.n, "reps": args.reps, "timings": table}))
        return 0
    print(f"{'method':>8} {'mean_us':>12} {'min_us':>12} {'max_us':>12}")
    for m, row in table.items():
        print(f"{m:>8} {row['mean_us']:>12.1f} {row['min_us']:>12.1f} {row['max_us']:>12.1f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nltool", description="Nonlinearity of Boolean functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p):
        p.add_argument("--in", dest="input", required=True,
                       help="tt:<hex> | anf:<expr> | random:<seed>")
        p.add_argument("--n", type=int, required=True, help="number of variables")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("nl", help="nonlinearity by one method")
    with_input(p)
    p.add_argument("--method", choices=METHODS, default="fwt")
    p.set_defaults(func=cmd_nl)

    p = sub.add_parser("nlpoly", help="print the nonlinearity polynomial")
    with_input(p)
    p.set_defaults(func=cmd_nlpoly)

    p = sub.add_parser("spectrum", help="Walsh or distance spectrum")
    with_input(p)
    p.add_argument("--kind", choices=("walsh", "distance"), default="walsh")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("sweep", help="cross-check methods over many functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--methods", default="fwt,nnf,q-loop")
    p.add_argument("--workers", type=int, default=None,
                   help="process count (default: NLTOOL_THREADS or 1)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bench", help="timing table per method")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reps", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--methods", default="fwt,nnf,q-loop")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DomainError) as exc:
        print(f"nltool: error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
