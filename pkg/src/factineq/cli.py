"""Command-line interface: ``factineq verify | search | check | registry``.

Exit codes: 0 when every checked subject holds (known-refuted printed
variants excepted unless ``--strict-printed``), 1 when a subject is refuted
or errors, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import numeric
from .claimfile import load_claim_file
from .errors import ClaimFileError, FactineqError, UnknownSubjectError
from .harness import (
    DEFAULT_N_MAX,
    Registry,
    failing_reports,
    run_tasks,
    search_counterexample,
    to_csv,
    to_json,
    to_table,
)
from .report import rat_json

EXIT_OK, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"range must start at 1, got {value}")
    return value


def build_parser():
    p = argparse.ArgumentParser(prog="factineq", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="sweep identities and claims over a range of n")
    sel = v.add_mutually_exclusive_group()
    sel.add_argument("--app", action="append", metavar="ID", help="claim id, e.g. app1 or app6-printed")
    sel.add_argument("--identity", action="append", metavar="ID", help="identity id, e.g. I2p")
    sel.add_argument("--all", action="store_true", help="every registered subject (default)")
    v.add_argument("--n-min", type=_positive, default=1)
    v.add_argument("--n-max", type=_positive, default=DEFAULT_N_MAX)
    _common_output(v)

    s = sub.add_parser("search", help="smallest n violating a subject")
    s.add_argument("subject")
    s.add_argument("--n-max", type=_positive, default=DEFAULT_N_MAX)

    c = sub.add_parser("check", help="verify claims from a .ineq file")
    c.add_argument("file")
    c.add_argument("--n-max", type=_positive, default=DEFAULT_N_MAX)
    _common_output(c)

    r = sub.add_parser("registry", help="dump sequences, identities and claims")
    r.add_argument("--format", choices=("json", "table"), default="json")
    return p


def _common_output(p):
    p.add_argument("--strict-printed", action="store_true",
                   help="known-refuted printed variants also make the exit code 1")
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--workers", type=_positive, default=1, help="worker processes for the sweep")
    p.add_argument("--timings", action="store_true", help="include runtimeMillis (output no longer byte-stable)")


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(reports, args, n_min):
    if args.format == "csv":
        return to_csv(reports)
    if args.format == "table":
        return to_table(reports)
    return to_json(reports, n_min, args.n_max, timings=args.timings)


def _finish(reports, args, n_min):
    _emit(_render(reports, args, n_min), args.out)
    return EXIT_REFUTED if failing_reports(reports, args.strict_printed) else EXIT_OK


def cmd_verify(args):
    if args.n_min > args.n_max:
        raise UsageError(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
    registry = Registry()
    if args.app:
        tasks = registry.tasks(identity_ids=[], claim_ids=args.app)
    elif args.identity:
        tasks = registry.tasks(identity_ids=args.identity, claim_ids=[])
    else:
        tasks = registry.tasks()
    reports = run_tasks(tasks, args.n_min, args.n_max, args.workers)
    return _finish(reports, args, args.n_min)


def cmd_search(args):
    found = search_counterexample(args.subject, args.n_max)
    doc = {"subject": args.subject, "nMax": args.n_max, "counterexample": None}
    if found is not None:
        doc["counterexample"] = {"n": found.n, "lhs": rat_json(found.lhs), "rhs": rat_json(found.rhs)}
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if found is None else EXIT_REFUTED


def cmd_check(args):
    claim_file = load_claim_file(args.file)
    registry = Registry()
    registry.add_claims(claim_file)
    tasks = registry.tasks(identity_ids=[], claim_ids=[c.id for c in claim_file.claims])
    reports = run_tasks(tasks, 1, args.n_max, args.workers)
    return _finish(reports, args, 1)


def cmd_registry(args):
    doc = Registry().to_dict()
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for ident in doc["identities"]:
            sys.stdout.write(f"{ident['id']:<6} [{ident['provenance']}] sum {ident['summand']} = {ident['closedForm']}\n")
        for claim in doc["claims"]:
            sys.stdout.write(f"{claim['id']:<15} [{claim['variant']}] sum {claim['summand']} {claim['relation']} {claim['rhs']}\n")
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "search": cmd_search, "check": cmd_check, "registry": cmd_registry}


def main(argv=None):
    # Report numerators can exceed the default int->str digit limit.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        numeric.set_factorial_cap(numeric._cap_from_env())
        return COMMANDS[args.command](args)
    except (UsageError, ClaimFileError, UnknownSubjectError) as exc:
        print(f"factineq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FactineqError as exc:
        print(f"factineq: error: {exc}", file=sys.stderr)
        return EXIT_REFUTED


if __name__ == "__main__":
    sys.exit(main())
