"""Command-line front end.

Exit codes: 0 when every evaluated check holds, 1 when any check fails,
2 on usage errors (bad flags, empty prime range, caps exceeded, unwritable
output).
"""

import argparse
import json
import logging
import os
import sys

from . import bell, combinat, congruence, report
from .numeric import DomainError

log = logging.getLogger("ucl")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ENV_FORMAT = "UCL_DEFAULT_FORMAT"

COMPUTE_TARGETS = {
    # target: (required indices, function)
    "bell-number": (("n",), combinat.bell_number),
    "bell-poly": (("m",), bell.bell_polynomial),
    "derangement-number": (("n",), combinat.derangement_number),
    "derangement-poly": (("m",), bell.derangement_polynomial),
    "stirling1": (("m", "j"), combinat.stirling_first),
    "stirling2": (("m", "j"), combinat.stirling_second),
    "v": (("n",), combinat.singleton_free_count),
}


class UsageError(Exception):
    pass


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _add_output(sub, default_format):
    sub.add_argument("--format", choices=report.FORMATS, default=default_format)
    sub.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")


def build_parser(default_format="text"):
    parser = argparse.ArgumentParser(
        prog="ucl",
        description="Exact Bell/derangement polynomials and congruence verification.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("compute", help="print one exact value")
    p.add_argument("target", choices=sorted(COMPUTE_TARGETS))
    p.add_argument("--m", type=_nonneg)
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--j", type=_nonneg)
    _add_output(p, default_format)

    p = subs.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", choices=congruence.SUITES, default="all")
    p.add_argument("--nmax", type=_nonneg, default=6)
    p.add_argument("--mmax", type=_nonneg, default=10)
    p.add_argument("--pmax", type=_nonneg, default=61)
    p.add_argument("--partition-cap", type=_nonneg, default=10)
    p.add_argument("--permutation-cap", type=_nonneg, default=9)
    _add_output(p, default_format)

    p = subs.add_parser("sweep", help="residues of sum B_k/(-m)^k over primes")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--pmax", type=_nonneg, default=199)
    p.add_argument("--include-k0", action=argparse.BooleanOptionalAction, default=True,
                   help="start the sum at k=0 (default) rather than k=1")
    _add_output(p, default_format)

    p = subs.add_parser("oracle", help="brute-force enumeration against closed forms")
    p.add_argument("--nmax", type=_nonneg, default=10)
    p.add_argument("--partition-cap", type=_nonneg, default=combinat.DEFAULT_PARTITION_CAP)
    p.add_argument("--permutation-cap", type=_nonneg, default=combinat.DEFAULT_PERMUTATION_CAP)
    _add_output(p, default_format)
    return parser


def cmd_compute(args):
    needed, fn = COMPUTE_TARGETS[args.target]
    indices = {}
    for name in needed:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"{args.target} requires --{name}")
        indices[name] = value
    try:
        value = fn(*indices.values())
    except DomainError as exc:
        raise UsageError(str(exc)) from None

    if args.format == "text":
        if isinstance(value, int):
            return str(value) + "\n", EXIT_OK
        return "[" + ",".join(str(c) for c in value.coeffs) + "]\n", EXIT_OK
    rendered = str(value) if isinstance(value, int) else value.to_json()
    doc = report.build_report("compute", {"target": args.target, **indices}, [],
                              extra={"result": rendered})
    return report.render(doc, args.format), EXIT_OK


def cmd_verify(args):
    if args.pmax < 2:
        raise UsageError(f"no primes <= {args.pmax}")
    try:
        cfg = congruence.SuiteConfig(
            n_max=args.nmax, m_max=args.mmax, p_max=args.pmax,
            partition_cap=args.partition_cap, permutation_cap=args.permutation_cap,
            suite=args.suite,
        )
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    result = congruence.run_suite(cfg)
    log.info("verify finished in %.2fs", result.elapsed)
    doc = report.build_report("verify", cfg.as_dict(), result.verdicts)
    return report.render(doc, args.format), EXIT_FAIL if result.counterexamples else EXIT_OK


def cmd_sweep(args):
    if args.m < 1:
        raise UsageError("--m must be >= 1")
    if args.pmax < 2:
        raise UsageError(f"no primes <= {args.pmax}")
    result = congruence.sweep_constant(args.m, args.pmax, args.include_k0)
    log.info("sweep finished in %.2fs", result.elapsed)
    doc = report.build_report("sweep", result.generated_for, result.verdicts, extra=result.extra)
    return report.render(doc, args.format), EXIT_FAIL if result.counterexamples else EXIT_OK


def cmd_oracle(args):
    if args.nmax > args.partition_cap:
        raise UsageError(f"--nmax {args.nmax} exceeds partition cap {args.partition_cap}")
    verdicts, rows = [], []
    for n in range(args.nmax + 1):
        census = combinat.oracle_census(n, args.partition_cap, args.permutation_cap)
        verdicts.extend(congruence.verify_oracle(
            n, args.partition_cap, args.permutation_cap, census=census))
        row = {"n": str(n), "bell": str(census.bell), "singleton_free": str(census.singleton_free),
               "stirling2_by_blocks": [str(c) for c in census.stirling2_by_blocks]}
        if census.cycles_by_count is not None:
            row["derangements"] = str(census.derangements)
            row["cycles_by_count"] = [str(c) for c in census.cycles_by_count]
        rows.append(row)
    verdicts.sort(key=congruence.Verdict.sort_key)
    config = {"n_max": args.nmax, "partition_cap": args.partition_cap,
              "permutation_cap": args.permutation_cap}
    doc = report.build_report("oracle", config, verdicts, extra={"census": rows})
    failed = any(v.status == congruence.FAILS for v in verdicts)
    return report.render(doc, args.format), EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "sweep": cmd_sweep, "oracle": cmd_oracle}


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    default_format = os.environ.get(ENV_FORMAT, "text")
    if default_format not in report.FORMATS:
        print(f"ucl: {ENV_FORMAT}={default_format!r} is not one of {report.FORMATS}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(default_format)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"ucl {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"ucl: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
