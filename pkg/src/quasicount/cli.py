"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 a consistency check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from ._kernels import BACKEND
from .actions import build_report, r_cyclic, t_value
from .lloyd import lloyd_series
from .oracle import OracleBoundError, dessin_pairs_oracle, oracle_max
from .signatures import Signature, enumerate_signatures, genus, is_admissible
from .verify import SUITES

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2
N_LIMIT = 10**9
RANGE_LIMIT = 10**6
SUITE_DEFAULT_MAX = {"recursions": 500, "oracle": 200, "corollary": 2000, "lloyd": 97}

RANGE_COLUMNS = ["n", "qc", "r_cn", "num_signatures", "min_genus", "max_genus"]
QC_COLUMNS = ["record", "n", "periods", "genus", "case", "t_value", "tau1", "tau2",
              "w_primes", "qc_sum", "qc_closed", "r_cn", "oracle"]


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- rendering


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _table_text(header, rows) -> str:
    cells = [list(map(str, header))] + [["" if c is None else str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _str_or_none(x):
    return None if x is None else str(x)


def _drop_none(d: dict) -> dict:
    return {k: v for k, v in d.items() if v is not None}


def _emit(text: str) -> None:
    sys.stdout.write(text)


# ---------------------------------------------------------------- qc


def report_to_json(report) -> dict:
    sigs = []
    for row in report.rows:
        tv = row.tvalue
        sigs.append(_drop_none({
            "periods": [str(p) for p in row.signature],
            "genus": str(row.genus),
            "case": tv.case_tag.value,
            "t_value": str(tv.value),
            "tau1": _str_or_none(tv.tau1_term),
            "tau2": _str_or_none(tv.tau2_term),
            "w_primes": [str(p) for p in tv.w_primes],
        }))
    out = {
        "n": str(report.n),
        "signatures": sigs,
        "qc_sum": str(report.qc_sum),
        "qc_closed": _str_or_none(report.qc_closed),
        "r_cn": str(report.r_cyclic),
        "oracle": _str_or_none(report.oracle_value),
    }
    if len(report.methods) > 1:
        out["consistent"] = report.consistent
    return _drop_none(out)


def report_to_csv_rows(report) -> list[list]:
    rows = []
    for row in report.rows:
        tv = row.tvalue
        rows.append(["signature", report.n, " ".join(map(str, row.signature)), row.genus,
                     tv.case_tag.value, tv.value, _blank(tv.tau1_term), _blank(tv.tau2_term),
                     " ".join(map(str, tv.w_primes)), "", "", "", ""])
    rows.append(["total", report.n, "", "", "", "", "", "", "", report.qc_sum,
                 _blank(report.qc_closed), report.r_cyclic, _blank(report.oracle_value)])
    return rows


def _blank(x):
    return "" if x is None else x


def cmd_qc(args) -> int:
    n = args.n
    method = args.method
    if not 1 <= n <= N_LIMIT:
        raise InputError(f"n must be in 1..{N_LIMIT}, got {n}")
    want_oracle = method in ("oracle", "all")
    if want_oracle and n > oracle_max():
        raise InputError(f"n={n} exceeds the oracle bound {oracle_max()} (QUASICOUNT_ORACLE_MAX)")
    report = build_report(n, closed=method in ("closed", "all"), oracle=want_oracle)
    if method == "closed" and report.qc_closed is None:
        logging.getLogger(__name__).warning("closed form does not apply to n=%d; using the sum", n)

    if args.format == "json":
        _emit(json.dumps(report_to_json(report), indent=2) + "\n")
    elif args.format == "csv":
        _emit(_csv_text(QC_COLUMNS, report_to_csv_rows(report)))
    elif args.quiet:
        _emit(f"{report.qc_sum}\n")
    else:
        rows = [(str(r.signature), r.genus, r.tvalue.case_tag.value, r.tvalue.value)
                for r in report.rows]
        _emit(f"C_{n}: {len(rows)} admissible signature(s)\n")
        _emit(_table_text(["signature", "genus", "case", "T"], rows))
        _emit(f"QC({n}) by sum    = {report.qc_sum}\n")
        if "closed" in report.methods:
            closed = "n/a (outside closed-form domain)" if report.qc_closed is None else report.qc_closed
            _emit(f"QC({n}) by closed = {closed}\n")
        if "oracle" in report.methods:
            _emit(f"QC({n}) by oracle = {report.oracle_value}\n")
        _emit(f"r(C_{n}) = {report.r_cyclic}\n")
        if len(report.methods) > 1:
            _emit("all methods agree\n" if report.consistent else "METHODS DISAGREE\n")
    return EXIT_OK if report.consistent else EXIT_INCONSISTENT


# ---------------------------------------------------------------- range


def range_row(n: int) -> list:
    sigs = enumerate_signatures(n)
    genera = [genus(n, s) for s in sigs]
    qc = sum(t_value(n, s).value for s in sigs)
    return [n, qc, r_cyclic(n), len(sigs),
            min(genera) if genera else None, max(genera) if genera else None]


def _map_ordered(func, items, jobs: int):
    if jobs <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=64))


def cmd_range(args) -> int:
    a, b = args.a, args.b
    if not 1 <= a <= b <= RANGE_LIMIT:
        raise InputError(f"need 1 <= a <= b <= {RANGE_LIMIT}, got a={a}, b={b}")
    rows = _map_ordered(range_row, range(a, b + 1), args.jobs)
    fmt = args.format
    if fmt == "json":
        objs = [dict(zip(RANGE_COLUMNS, (_str_or_none(v) for v in row))) for row in rows]
        _emit(json.dumps([_drop_none(o) for o in objs], indent=2) + "\n")
    elif fmt == "table":
        _emit(_table_text(RANGE_COLUMNS, rows))
    else:
        _emit(_csv_text(RANGE_COLUMNS, [[_blank(v) for v in row] for row in rows]))
    return EXIT_OK


# ---------------------------------------------------------------- thin wrappers


def cmd_signatures(args) -> int:
    n = args.n
    if not 1 <= n <= N_LIMIT:
        raise InputError(f"n must be in 1..{N_LIMIT}, got {n}")
    rows = [(" ".join(map(str, s)), genus(n, s)) for s in enumerate_signatures(n)]
    if args.format == "json":
        _emit(json.dumps({"n": str(n), "signatures": [
            {"periods": p.split(), "genus": str(g)} for p, g in rows]}, indent=2) + "\n")
    elif args.format == "csv":
        _emit(_csv_text(["periods", "genus"], rows))
    else:
        _emit(_table_text(["signature", "genus"],
                          [("(" + p.replace(" ", ",") + ")", g) for p, g in rows]))
    return EXIT_OK


def cmd_tvalue(args) -> int:
    n = args.n
    periods = (args.n1, args.n2, args.n3)
    if n < 2 or min(periods) < 1 or not is_admissible(n, periods):
        raise InputError(f"{periods} is not an admissible signature for n={n}")
    sig = Signature(periods)
    tv = t_value(n, sig)
    fields = {
        "n": n,
        "signature": str(sig),
        "case": tv.case_tag.value,
        "genus": genus(n, sig),
        "phi": tv.phi_term,
        "tau1": tv.tau1_term,
        "tau2": tv.tau2_term,
        "w_primes": list(tv.w_primes),
        "product": str(tv.product_term),
        "T": tv.value,
    }
    if args.format == "json":
        obj = {k: [str(p) for p in v] if k == "w_primes" else str(v)
               for k, v in fields.items() if v is not None}
        _emit(json.dumps(obj, indent=2) + "\n")
    elif args.format == "csv":
        keys = [k for k, v in fields.items() if v is not None]
        vals = [" ".join(map(str, fields[k])) if k == "w_primes" else fields[k] for k in keys]
        _emit(_csv_text(keys, [vals]))
    else:
        for k, v in fields.items():
            if v is not None:
                shown = "{" + ", ".join(map(str, v)) + "}" if k == "w_primes" else v
                _emit(f"{k:>9}: {shown}\n")
    return EXIT_OK


def cmd_dessins(args) -> int:
    n = args.n
    if not 1 <= n <= N_LIMIT:
        raise InputError(f"n must be in 1..{N_LIMIT}, got {n}")
    value = r_cyclic(n)
    oracle = None
    if args.oracle:
        if n > oracle_max():
            raise InputError(f"n={n} exceeds the oracle bound {oracle_max()}")
        oracle = dessin_pairs_oracle(n)
    if args.format == "json":
        _emit(json.dumps(_drop_none({"n": str(n), "r_cn": str(value),
                                     "oracle": _str_or_none(oracle)})) + "\n")
    elif args.format == "csv":
        _emit(_csv_text(["n", "r_cn", "oracle"], [[n, value, _blank(oracle)]]))
    else:
        _emit(f"{value}\n" if oracle is None else f"{value} (oracle {oracle})\n")
    return EXIT_OK if oracle is None or oracle == value else EXIT_INCONSISTENT


def cmd_lloyd(args) -> int:
    from .actions import qc_sum

    p, order = args.p, args.order
    try:
        series = lloyd_series(p, order)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    coeffs = [series[k] for k in range(order + 1)]
    qc = qc_sum(p)
    agree = p < 5 or coeffs[3] == qc
    if args.format == "json":
        _emit(json.dumps({"p": str(p), "order": str(order),
                          "coefficients": [str(c) for c in coeffs],
                          "qc": str(qc), "x3_matches_qc": agree}, indent=2) + "\n")
    elif args.format == "csv":
        _emit(_csv_text(["rho", "coefficient"], [[k, c] for k, c in enumerate(coeffs)]))
    else:
        _emit(_table_text(["rho", "N"], list(enumerate(coeffs))))
        if not args.quiet:
            _emit(f"x^3 coefficient {coeffs[3]}, QC({p}) = {qc}: "
                  f"{'match' if coeffs[3] == qc else 'MISMATCH'}\n")
    return EXIT_OK if agree else EXIT_INCONSISTENT


def cmd_verify(args) -> int:
    names = list(SUITES) if "all" in args.suites else list(dict.fromkeys(args.suites))
    results = {}
    for name in names:
        limit = args.n_max if args.n_max is not None else SUITE_DEFAULT_MAX[name]
        if name == "oracle" and limit > oracle_max():
            raise InputError(f"--n-max {limit} exceeds the oracle bound {oracle_max()}")
        if name == "recursions" and limit < 10:
            raise InputError("recursions suite needs --n-max >= 10")
        if limit < 1:
            raise InputError("--n-max must be positive")
        results[name] = (limit, SUITES[name](limit))
    ok = all(rep.passed for _, rep in results.values())
    summary = {
        "passed": ok,
        "suites": {
            name: {
                "n_max": limit,
                "passed": rep.passed,
                "checks": len(rep.checks),
                "by_label": {k: {"passed": v[0], "total": v[1]} for k, v in rep.counts().items()},
                "failures": [{"label": c.label, "instance": c.instance,
                              "lhs": str(c.lhs), "rhs": str(c.rhs)} for c in rep.failures],
            }
            for name, (limit, rep) in results.items()
        },
    }
    if args.format == "json":
        _emit(json.dumps(summary, indent=2) + "\n")
    elif args.format == "csv":
        rows = [[name, label, v[0], v[1]] for name, (_, rep) in results.items()
                for label, v in rep.counts().items()]
        _emit(_csv_text(["suite", "label", "passed", "total"], rows))
    elif not args.quiet:
        for name, (limit, rep) in results.items():
            status = "PASS" if rep.passed else "FAIL"
            _emit(f"{status} {name} (n_max={limit}, {len(rep.checks)} checks)\n")
            for label, (good, total) in rep.counts().items():
                _emit(f"    {label}: {good}/{total}\n")
            for c in rep.failures[:20]:
                _emit(f"    failed {c.label} {c.instance}: {c.lhs} != {c.rhs}\n")
    return EXIT_OK if ok else EXIT_INCONSISTENT


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "csv", "json"], default=argparse.SUPPRESS)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)

    parser = _Parser(prog="quasicount", description="Count quasiplatonic actions of cyclic groups.")
    parser.add_argument("--format", choices=["table", "csv", "json"], default="table")
    parser.add_argument("--quiet", action="store_true", default=False)
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("qc", parents=[common], help="QC(n) with per-signature breakdown")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["sum", "closed", "oracle", "all"], default="sum")
    p.set_defaults(func=cmd_qc)

    p = sub.add_parser("range", parents=[common], help="QC(n) for a <= n <= b (CSV by default)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_range, range_default_csv=True)

    p = sub.add_parser("signatures", parents=[common], help="admissible signatures and genera")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_signatures)

    p = sub.add_parser("tvalue", parents=[common], help="T-value breakdown of one signature")
    for name in ("n", "n1", "n2", "n3"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_tvalue)

    p = sub.add_parser("dessins", parents=[common], help="regular dessins r(C_n)")
    p.add_argument("n", type=int)
    p.add_argument("--oracle", action="store_true", help="also count by brute force")
    p.set_defaults(func=cmd_dessins)

    p = sub.add_parser("lloyd", parents=[common], help="Lloyd series coefficients for prime p")
    p.add_argument("p", type=int)
    p.add_argument("--order", type=int, default=6)
    p.set_defaults(func=cmd_lloyd)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--suites", nargs="+", default=["all"],
                   choices=["recursions", "oracle", "corollary", "lloyd", "all"])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    raw = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(raw)
    # range speaks CSV unless a format was given explicitly
    explicit = any(a == "--format" or a.startswith("--format=") for a in raw)
    if getattr(args, "range_default_csv", False) and not explicit:
        args.format = "csv"
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, OracleBoundError) as exc:
        sys.stderr.write(f"quasicount: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
