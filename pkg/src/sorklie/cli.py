"""Command line interface.

Exit codes: 0 success / all checks pass, 1 computation error (bad type,
syntax error, inapplicable rule), 2 audit or verification failure,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import matrixcheck, tables
from .errors import SorklieError
from .groups import nu_eval, nu_upper_bound, parse_group_expr, simple_factors
from .realforms import nu_simple
from .roots import RootSystemType, build_root_system
from .sork import OrthCertificate, sork_exact, verify_certificate
from .errors import RuleNotApplicable

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_AUDIT_FAIL = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    p = _Parser(prog="sorklie", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("sork", help="strong orthogonal rank of a root system")
    sp.add_argument("type", help="root system type, e.g. E8 or B7")
    sp.add_argument("--certificate", action="store_true",
                    help="also emit the witnessing certificate as JSON")
    sp.add_argument("--json", action="store_true")

    np = sub.add_parser("nu", help="free subgroup rank of a group expression")
    np.add_argument("expr", help='group expression, e.g. "SL(2,R) x SU(2)^3"')
    np.add_argument("--certificate", action="store_true",
                    help="include per-factor certificates in JSON output")
    np.add_argument("--json", action="store_true")

    cp = sub.add_parser("certify", help="verify a certificate JSON document")
    cp.add_argument("path", help="path to a certificate file, or - for stdin")

    tp = sub.add_parser("verify-tables", help="audit the subalgebra tables")
    tp.add_argument("--rank-cap", type=int, default=24)
    tp.add_argument("--json", action="store_true")

    kp = sub.add_parser("verify-kronecker",
                        help="verify the Kronecker bracket identity")
    kp.add_argument("--max-size", type=int, default=4)
    kp.add_argument("--samples", type=int, default=200)
    kp.add_argument("--json", action="store_true")

    dp = sub.add_parser("dump-roots", help="dump a root system as JSON")
    dp.add_argument("type", help="root system type, e.g. F4")
    return p


def _cmd_sork(args) -> int:
    t = RootSystemType.parse(args.type)
    phi = build_root_system(t)
    n, cert = sork_exact(phi)
    if args.json:
        doc = {"system_type": str(t), "n": n}
        if args.certificate:
            doc["roots"] = cert.to_json_dict()["roots"]
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"sork({t}) = {n}")
        if args.certificate:
            print(json.dumps(cert.to_json_dict(), sort_keys=True))
    return EXIT_OK


def _cmd_nu(args) -> int:
    expr = parse_group_expr(args.expr)
    exact = True
    try:
        value = nu_eval(expr)
    except RuleNotApplicable:
        value = nu_upper_bound(expr)
        exact = False
    factors = []
    for d in simple_factors(expr):
        res = nu_simple(d)
        entry = {"descriptor": str(d), "nu": res.nu, "case": res.case.value}
        if args.certificate and res.certificate is not None:
            entry["certificate"] = res.certificate.to_json_dict()
        factors.append(entry)
    if args.json:
        print(json.dumps({"nu": value, "exact": exact, "factors": factors},
                         sort_keys=True))
    else:
        if exact:
            print(f"nu = {value}")
        else:
            print(f"nu <= {value} (upper bound)")
        if args.certificate:
            for entry in factors:
                print(json.dumps(entry, sort_keys=True))
    return EXIT_OK


def _cmd_certify(args) -> int:
    if args.path == "-":
        raw = sys.stdin.read()
    else:
        with open(args.path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    cert = OrthCertificate.from_json_dict(json.loads(raw))
    check = verify_certificate(cert)
    if check:
        print(f"valid certificate: {len(cert.roots)} strongly orthogonal "
              f"roots in {cert.system_type}")
        return EXIT_OK
    print(f"invalid certificate: {check.reason}")
    return EXIT_AUDIT_FAIL


def _print_report(name: str, report: tables.AuditReport, as_json: bool) -> bool:
    if as_json:
        print(json.dumps({"audit": name, "ok": report.ok,
                          "entries": report.to_json_list()}, sort_keys=True))
    else:
        for e in report.entries:
            status = "PASS" if e.passed else "FAIL"
            print(f"[{name}] {status} {e.row_id}: {e.claim} "
                  f"(recomputed={e.recomputed}, encoded={e.encoded})")
        print(f"[{name}] {'all rows pass' if report.ok else 'FAILURES PRESENT'}")
    return report.ok


def _cmd_verify_tables(args) -> int:
    ok = True
    ok &= _print_report("table1", tables.table1_audit(), args.json)
    ok &= _print_report("table2", tables.table2_audit(args.rank_cap), args.json)
    ok &= _print_report("table3", tables.table3_audit(args.rank_cap), args.json)
    return EXIT_OK if ok else EXIT_AUDIT_FAIL


def _cmd_verify_kronecker(args) -> int:
    results = {
        "random_bracket_trials": matrixcheck.random_bracket_split_trials(
            args.samples, args.max_size),
        "symbolic_2x2": matrixcheck.symbolic_bracket_split_2x2(),
        "trivial_intersection": all(
            matrixcheck.trivial_intersection_check(s, t)
            for s in range(2, args.max_size + 1)
            for t in range(2, args.max_size + 1)
        ),
    }
    ok = all(results.values())
    if args.json:
        print(json.dumps({"ok": ok, "checks": results}, sort_keys=True))
    else:
        for name, passed in results.items():
            print(f"{'PASS' if passed else 'FAIL'} {name}")
    return EXIT_OK if ok else EXIT_AUDIT_FAIL


def _cmd_dump_roots(args) -> int:
    t = RootSystemType.parse(args.type)
    phi = build_root_system(t)
    print(json.dumps(phi.to_json_dict(), sort_keys=True))
    return EXIT_OK


_DISPATCH = {
    "sork": _cmd_sork,
    "nu": _cmd_nu,
    "certify": _cmd_certify,
    "verify-tables": _cmd_verify_tables,
    "verify-kronecker": _cmd_verify_kronecker,
    "dump-roots": _cmd_dump_roots,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return _DISPATCH[args.command](args)
    except SorklieError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
