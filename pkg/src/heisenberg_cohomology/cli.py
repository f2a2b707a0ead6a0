"""Command line interface.

Verbs: `even` and `odd` print Betti tables for the built-in families,
`compute` does the same for an algebra file, `verify` adjudicates the
closed-form formulas against the rank engine on a grid.  All output is
byte-deterministic; timing goes to stderr.  Exit codes: 0 success,
1 usage or parse error, 2 validation error, 3 resource refusal,
4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import make_heisenberg_even, make_heisenberg_odd
from .cohomology import (DEFAULT_COLUMN_CAP, METHOD_FORMULA_EVEN,
                         METHOD_FORMULA_ODD_PROOF, CohomologyReport,
                         ColumnCapExceeded, betti_table)
from .fileformats import (AlgebraParseError, AlgebraValidationError,
                          emit_report, parse_algebra)
from .formulas import (dim_h_even, dim_h_odd_proof, even_cocycle_dim,
                       odd_cocycle_dim)
from .superexterior import SuperSpaceDims, graded_dim
from .verify import VerifyResult, verify_family

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_RESOURCE = 3
EXIT_MISMATCH = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this interface reserves 2
    # for validation, so usage problems exit 1 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _add_output_options(p, with_method=True):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text",
                   help="output format (default: text)")
    p.add_argument("--column-cap", type=int, default=DEFAULT_COLUMN_CAP,
                   metavar="N", help="refuse coboundary matrices wider than N "
                   "(default: %d)" % DEFAULT_COLUMN_CAP)
    if with_method:
        p.add_argument("--method", choices=("rank", "formula", "both"),
                       default="rank",
                       help="rank: exact matrix ranks; formula: closed forms; "
                       "both: interleaved (default: rank)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heisenberg-cohomology",
                     description="Exact Betti numbers of Heisenberg Lie "
                     "superalgebras, by matrix rank or closed formula.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="VERB",
                                parser_class=_Parser)

    p_even = sub.add_parser("even",
                            help="Betti table of the even-center family h_{n,m}")
    p_even.add_argument("--n", type=int, required=True)
    p_even.add_argument("--m", type=int, required=True)
    p_even.add_argument("--q-max", type=int, required=True)
    _add_output_options(p_even)
    p_even.set_defaults(func=_cmd_even)

    p_odd = sub.add_parser("odd",
                           help="Betti table of the odd-center family h_n")
    p_odd.add_argument("--n", type=int, required=True)
    p_odd.add_argument("--q-max", type=int, required=True)
    _add_output_options(p_odd)
    p_odd.set_defaults(func=_cmd_odd)

    p_comp = sub.add_parser("compute",
                            help="Betti table of an algebra definition file")
    p_comp.add_argument("--algebra", required=True, metavar="FILE")
    p_comp.add_argument("--q-max", type=int, required=True)
    _add_output_options(p_comp)
    p_comp.set_defaults(func=_cmd_compute)

    p_ver = sub.add_parser("verify",
                           help="compare closed-form formulas against ranks")
    p_ver.add_argument("--family", choices=("even", "odd"), required=True)
    p_ver.add_argument("--n-max", type=int, required=True)
    p_ver.add_argument("--m-max", type=int, default=None)
    p_ver.add_argument("--q-max", type=int, required=True)
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.add_argument("--column-cap", type=int, default=DEFAULT_COLUMN_CAP,
                       metavar="N")
    p_ver.set_defaults(func=_cmd_verify)
    return parser


def _even_formula_report(n: int, m: int, q: int) -> CohomologyReport:
    dims = SuperSpaceDims(2 * n + 1, m)
    dim_c = graded_dim(dims, q)
    z = even_cocycle_dim(n, m, q)
    b = graded_dim(dims, q - 1) - even_cocycle_dim(n, m, q - 1)
    return CohomologyReport("h_{%d,%d}" % (n, m), q, dim_c, z, b,
                            dim_h_even(n, m, q), METHOD_FORMULA_EVEN)


def _odd_formula_report(n: int, q: int) -> CohomologyReport:
    dims = SuperSpaceDims(n, n + 1)
    dim_c = graded_dim(dims, q)
    z = odd_cocycle_dim(n, q)
    b = graded_dim(dims, q - 1) - odd_cocycle_dim(n, q - 1)
    return CohomologyReport("h_%d" % n, q, dim_c, z, b,
                            dim_h_odd_proof(n, q), METHOD_FORMULA_ODD_PROOF)


def _emit(reports, fmt: str) -> int:
    sys.stdout.buffer.write(emit_report(reports, fmt))
    sys.stdout.buffer.flush()
    return EXIT_OK


def _family_reports(args, rank_factory, formula_factory):
    reports = []
    ranked = None
    if args.method in ("rank", "both"):
        ranked = rank_factory()
    for q in range(args.q_max + 1):
        if ranked is not None:
            reports.append(ranked[q])
        if args.method in ("formula", "both"):
            reports.append(formula_factory(q))
    return reports


def _cmd_even(args) -> int:
    alg = make_heisenberg_even(args.n, args.m)
    if args.q_max < 0:
        raise ValueError("--q-max must be nonnegative")
    reports = _family_reports(
        args,
        lambda: betti_table(alg, args.q_max, args.column_cap),
        lambda q: _even_formula_report(args.n, args.m, q))
    return _emit(reports, args.format)


def _cmd_odd(args) -> int:
    alg = make_heisenberg_odd(args.n)
    if args.q_max < 0:
        raise ValueError("--q-max must be nonnegative")
    reports = _family_reports(
        args,
        lambda: betti_table(alg, args.q_max, args.column_cap),
        lambda q: _odd_formula_report(args.n, q))
    return _emit(reports, args.format)


def _cmd_compute(args) -> int:
    if args.method != "rank":
        print("%s: error: --method %s is not available for compute; "
              "closed forms only exist for the built-in families"
              % ("heisenberg-cohomology", args.method), file=sys.stderr)
        return EXIT_USAGE
    with open(args.algebra, "rb") as fh:
        text = fh.read()
    alg = parse_algebra(text)
    if args.q_max < 0:
        raise ValueError("--q-max must be nonnegative")
    reports = betti_table(alg, args.q_max, args.column_cap)
    return _emit(reports, args.format)


def _verify_text(res: VerifyResult) -> str:
    head = "verify family=%s n_max=%d" % (res.family, res.n_max)
    if res.m_max is not None:
        head += " m_max=%d" % res.m_max
    head += " q_max=%d" % res.q_max
    lines = [head]
    lines.extend(c.describe() for c in res.checks)
    lines.append("checks: %d" % len(res.checks))
    lines.append("failures: %d" % len(res.failures))
    lines.append("deviations: %d" % len(res.deviations))
    lines.append("result: %s" % ("OK" if res.ok() else "MISMATCH"))
    return "\n".join(lines) + "\n"


def _verify_json(res: VerifyResult) -> str:
    payload = {
        "family": res.family,
        "n_max": res.n_max,
        "m_max": res.m_max,
        "q_max": res.q_max,
        "checks": [{"formula": c.formula, "n": c.n, "m": c.m, "q": c.q,
                    "formula_value": c.formula_value,
                    "oracle_value": c.oracle_value, "ok": c.ok}
                   for c in res.checks],
        "failures": len(res.failures),
        "deviations": len(res.deviations),
        "ok": res.ok(),
    }
    return json.dumps(payload, indent=2) + "\n"


def _cmd_verify(args) -> int:
    res = verify_family(args.family, args.n_max, args.m_max, args.q_max,
                        args.column_cap)
    text = _verify_text(res) if args.format == "text" else _verify_json(res)
    sys.stdout.buffer.write(text.encode("utf-8"))
    sys.stdout.buffer.flush()
    print("elapsed: %.2fs" % res.elapsed, file=sys.stderr)
    return EXIT_OK if res.ok() else EXIT_MISMATCH


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return EXIT_OK
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except AlgebraParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except AlgebraValidationError as exc:
        print("validation error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except ColumnCapExceeded as exc:
        print("resource refusal: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print("cannot read input: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print("validation error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
