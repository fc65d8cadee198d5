"""Command-line interface: ``horadam {eval,table,verify,bench,catalog}``.

Exit status is 0 on success, 1 when an identity check or a cross-method
comparison fails, and 2 on usage or precondition errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import catalog, verify
from .closed_forms import classify, closed_form, r_auto, r_binet
from .engine import OpStats, RecurrenceSpec, r_fast, r_iter
from .errors import IdentityViolation, RecurrenceError
from .identities import r_doubling
from .ring import Poly, decimal_digits, format_rational, parse_rational

EVAL_METHODS = ("iter", "fast", "binet", "auto")
BENCH_METHODS = ("iter", "fast", "binet", "doubling", "auto")


class UsageError(Exception):
    pass


def _parse_param(text: str):
    text = text.strip()
    if text.startswith("["):
        try:
            items = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad polynomial coefficient list {text!r}: {exc}") from None
        return Poly(parse_rational(str(c)) for c in items)
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None


def resolve_spec(args) -> RecurrenceSpec:
    """Build the spec from ``--seq`` or ``--f/--g/--h/--k``, evaluated at ``--x`` if needed."""
    explicit = [getattr(args, p) for p in "fghk"]
    if args.seq and any(v is not None for v in explicit):
        raise UsageError("give either --seq or --f/--g/--h/--k, not both")
    if args.seq:
        entry = catalog.get_sequence(args.seq)
        spec = entry.spec
    else:
        if any(v is None for v in explicit):
            raise UsageError("a spec needs --seq NAME or all of --f, --g, --h, --k")
        spec = RecurrenceSpec(*(_parse_param(v) for v in explicit))
    if isinstance(spec.f, Poly):
        if args.x is None:
            if spec.symbolic:
                raise UsageError("polynomial specs need a sample point --x")
            return spec.at(0)
        return spec.at(_parse_param(args.x))
    return spec


def _value_str(v) -> str:
    return format_rational(v)


def _evaluate(method: str, spec: RecurrenceSpec, n: int, stats=None):
    if method == "iter":
        return r_iter(spec, n, stats)
    if method == "fast":
        return r_fast(spec, n, stats)
    if method == "binet":
        return r_binet(spec, n)
    if method == "doubling":
        return r_doubling(spec, n, stats)
    if method == "auto":
        return r_auto(spec, n)[1]
    raise UsageError(f"unknown method {method!r}")


def _cross_checks(spec, n, value):
    rows = []
    for method in ("iter", "fast", "closed_form"):
        try:
            if method == "closed_form":
                case, other = closed_form(spec, n)
                label = f"closed_form[{case}]"
            else:
                other = _evaluate(method, spec, n)
                label = method
            rows.append({"method": label, "value": _value_str(other), "agrees": other == value})
        except (RecurrenceError, TypeError) as exc:
            rows.append({"method": method, "skipped": f"{type(exc).__name__}: {exc}"})
    return rows


def eval_record(spec, n, method):
    value = _evaluate(method, spec, n)
    return {"spec": spec.to_json(), "n": n, "value": _value_str(value),
            "method": method, "case": str(classify(spec))}, value


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _csv(rows, fields) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_eval(args) -> int:
    spec = resolve_spec(args)
    record, value = eval_record(spec, args.n, args.method)
    checks = _cross_checks(spec, args.n, value) if args.check else None
    if checks is not None:
        record["checks"] = checks
    if args.format == "json":
        print(_dump_json(record))
    elif args.format == "csv":
        print(_csv([record], ["n", "value", "method", "case"]))
    else:
        print(record["value"])
        if args.method == "auto" or checks:
            print(f"case: {record['case']}")
        for row in checks or ():
            if "skipped" in row:
                print(f"  {row['method']}: skipped ({row['skipped']})")
            else:
                print(f"  {row['method']}: {row['value']} {'agrees' if row['agrees'] else 'DISAGREES'}")
    if checks and not all(row.get("agrees", True) for row in checks):
        return 1
    return 0


def cmd_table(args) -> int:
    if args.start > args.stop:
        raise UsageError("--from must not exceed --to")
    spec = resolve_spec(args)
    records = [eval_record(spec, n, args.method)[0] for n in range(args.start, args.stop + 1)]
    if args.format == "json":
        print(_dump_json(records))
    elif args.format == "csv":
        print(_csv(records, ["n", "value"]))
    else:
        for r in records:
            print(r["value"])
    return 0


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITES)}, all")
    if args.trials < 1 or args.nmax < 1:
        raise UsageError("--trials and --nmax must be positive")
    results = verify.run(args.suite, args.trials, args.seed, args.nmax)
    ok = all(r.ok for r in results)
    if args.format == "json":
        print(_dump_json({"seed": args.seed, "trials": args.trials, "nmax": args.nmax,
                          "ok": ok, "suites": [r.to_json() for r in results]}))
    elif args.format == "csv":
        print(_csv([{"suite": r.name, "checks": r.checks, "passed": r.passed, "ok": r.ok}
                    for r in results], ["suite", "checks", "passed", "ok"]))
    else:
        for r in results:
            pct = 100.0 * r.passed / r.checks if r.checks else 100.0
            print(f"{r.name:<13} {r.passed}/{r.checks} ({pct:.1f}%) {'PASS' if r.ok else 'FAIL'}")
            for f in r.failures[:10]:
                print(f"    spec={f.spec} index={f.index} residual={f.residual}")
        print("all suites passed" if ok else "FAILURES")
    return 0 if ok else 1


def run_bench(spec: RecurrenceSpec, n: int, methods, repeat: int = 1):
    """Time each method; raises :class:`IdentityViolation` if any two results differ."""
    rows, values = [], {}
    for method in methods:
        if method not in BENCH_METHODS:
            raise UsageError(f"unknown method {method!r}; choose from {', '.join(BENCH_METHODS)}")
        try:
            best = None
            for _ in range(repeat):
                stats = OpStats()
                t0 = time.perf_counter()
                value = _evaluate(method, spec, n, stats)
                elapsed = time.perf_counter() - t0
                best = elapsed if best is None else min(best, elapsed)
        except (RecurrenceError, TypeError, ValueError) as exc:
            rows.append({"method": method, "status": "skipped",
                         "reason": f"{type(exc).__name__}: {exc}"})
            continue
        values[method] = value
        counted = method in ("iter", "fast", "doubling")
        rows.append({"method": method, "status": "ok", "seconds": best,
                     "digits": decimal_digits(value.numerator),
                     "denominator_digits": decimal_digits(value.denominator),
                     "ring_mults": stats.ring_mults if counted else None,
                     "matrix_mults": stats.matrix_mults if method == "fast" else None})
    distinct = {v for v in values.values()}
    if len(distinct) > 1:
        raise IdentityViolation("methods disagree: " + ", ".join(
            f"{m}={_value_str(v) if decimal_digits(v.numerator) < 60 else '...'}"
            for m, v in values.items()))
    value = next(iter(values.values()), None)
    return rows, value


def cmd_bench(args) -> int:
    if args.n < 0:
        raise UsageError("bench needs n >= 0")
    spec = resolve_spec(args)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if not methods:
        raise UsageError("--methods must name at least one method")
    rows, value = run_bench(spec, args.n, methods, args.repeat)
    report = {"spec": spec.to_json(), "n": args.n, "results": rows}
    if args.show_value and value is not None:
        report["value"] = _value_str(value)
    if args.format == "json":
        print(_dump_json(report))
    elif args.format == "csv":
        print(_csv(rows, ["method", "status", "seconds", "digits", "ring_mults",
                          "matrix_mults", "reason"]))
    else:
        for r in rows:
            if r["status"] != "ok":
                print(f"{r['method']:<9} skipped: {r['reason']}")
                continue
            counts = "" if r["ring_mults"] is None else f"  ring_mults={r['ring_mults']}"
            if r["matrix_mults"] is not None:
                counts += f"  matrix_mults={r['matrix_mults']}"
            print(f"{r['method']:<9} {r['seconds']:.6f}s  digits={r['digits']}{counts}")
        if rows and any(r["status"] == "ok" for r in rows):
            print("all methods agree")
        if "value" in report:
            print(report["value"])
    return 0


def cmd_catalog(args) -> int:
    rows = catalog.listing()
    if args.format == "json":
        print(_dump_json(rows))
    elif args.format == "csv":
        print(_csv(rows, ["name", "f", "g", "h", "k", "symbolic"]))
    else:
        for r in rows:
            tag = "  (polynomial)" if r["symbolic"] else ""
            print(f"{r['name']:<22} f={r['f']}, g={r['g']}, h={r['h']}, k={r['k']}{tag}")
    return 0


def _add_spec_args(p):
    p.add_argument("--seq", help="catalog sequence name (see the catalog command)")
    for name in "fghk":
        p.add_argument(f"--{name}", help=f"{name} as p or p/q, or a JSON coefficient list like '[0, 2]'")
    p.add_argument("--x", help="sample point for polynomial specs")


def _add_format(p):
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horadam",
        description="Exact evaluation of R[n+1] = f R[n] + g R[n-1], R[0] = h, R[1] = k.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a single term")
    _add_spec_args(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=EVAL_METHODS, default="fast")
    p.add_argument("--check", action="store_true", help="cross-check against every applicable method")
    _add_format(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="tabulate a range of terms")
    _add_spec_args(p)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--method", choices=EVAL_METHODS, default="fast")
    _add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run seeded identity suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(verify.SUITES)}, all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nmax", type=int, default=10)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time evaluation methods against each other")
    _add_spec_args(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--methods", default="iter,fast",
                   help=f"comma-separated subset of {','.join(BENCH_METHODS)}")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--show-value", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("catalog", help="list the built-in sequences")
    _add_format(p)
    p.set_defaults(func=cmd_catalog)
    return parser


_VALUE_FLAGS = ("--f", "--g", "--h", "--k", "--x")


def _glue_negative_values(argv):
    """Rewrite ``--g -2/5`` as ``--g=-2/5``; argparse takes ``-2/5`` for an option."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except IdentityViolation as exc:
        print(f"{parser.prog}: IdentityViolation: {exc}", file=sys.stderr)
        return 1
    except RecurrenceError as exc:
        print(f"{parser.prog}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
