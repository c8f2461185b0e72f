"""Command-line driver.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget guard.
"""

import argparse
from dataclasses import dataclass
import sys

from ._parallel import THREADS_ENV, default_workers
from .avoidance import classification_to_json, classify
from .boundary import boundary_profile, kostant_cohomology, kuga_sato_profile
from .constituents import (
    DEFAULT_SUBSET_BUDGET,
    EnumerationSpec,
    decomposition_to_json,
    enumerate_constituents,
    oracle_decompose,
)
from .degeneration import brute_force_by_degree, closed_form_weights, compare, load_ledger
from .errors import BudgetExceeded, CharacterParseError, OracleFailure
from .lattice import parse_character
from .verify import SUITES, dumps, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass(frozen=True)
class CliConfig:
    threads: int = 1
    subset_budget: int = DEFAULT_SUBSET_BUDGET
    format: str = "json"
    ledger_path: str = None

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.subset_budget < 1:
            raise ValueError("subset budget must be >= 1")


class UsageError(Exception):
    pass


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _add_common(parser, default):
    # subcommands repeat the global flags with suppressed defaults so either position works
    def dflt(value):
        return value if default else argparse.SUPPRESS

    parser.add_argument("--threads", type=_positive, default=dflt(None),
                        help=f"worker processes (default: ${THREADS_ENV} or CPU count)")
    parser.add_argument("--subset-budget", type=_positive, default=dflt(DEFAULT_SUBSET_BUDGET))
    parser.add_argument("--format", choices=("json", "tsv"), default=dflt("json"))
    parser.add_argument("--ledger", dest="ledger_path", default=dflt(None),
                        help="known-discrepancy ledger (default: bundled file)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="picard-boundary",
        description="Boundary weights of Kuga-Sato families over Picard modular varieties.",
    )
    _add_common(parser, default=True)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, default=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add("enumerate", help="constituents via the inequality system")
    _add_grp(p)
    p = add("oracle", help="constituents via brute-force character peeling")
    _add_grp(p)

    p = add("kostant", help="sigma.lambda over Weyl elements of length q")
    p.add_argument("--g", type=_positive, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--q", type=int, default=None)

    p = add("profile", help="boundary weight profile of lambda")
    p.add_argument("--g", type=_positive, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--kuga-sato", action="store_true", help="shift degrees by p")

    p = add("classify", help="interior-motive verdict for lambda")
    p.add_argument("--g", type=_positive, required=True)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--lambda", dest="lam", required=True)

    p = add("degeneration", help="weights of i*R^k j_* R^p f_* Q")
    _add_grp(p)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--source", choices=("closed", "brute", "both"), default="both")

    p = add("compare", help="closed form vs brute force over all (p, k)")
    p.add_argument("--g", type=_positive, required=True)
    p.add_argument("--r", type=_positive, required=True)

    p = add("verify", help="run a verification suite")
    p.add_argument("--g", type=_positive, default=None)
    p.add_argument("--r", type=_positive, default=None)
    p.add_argument("--suite", choices=SUITES, default="all")
    return parser


def _add_grp(sp):
    sp.add_argument("--g", type=_positive, required=True)
    sp.add_argument("--r", type=_positive, required=True)
    sp.add_argument("--p", type=int, required=True)


def _tsv(rows):
    return "".join("\t".join(str(x) for x in row) + "\n" for row in rows)


def _cmd_enumerate(args, cfg):
    spec = EnumerationSpec(args.g, args.r, args.p)
    cset = enumerate_constituents(spec)
    if cfg.format == "tsv":
        return _tsv([["character"]] + [[str(c)] for c in cset]), EXIT_OK
    return dumps(cset.to_json()), EXIT_OK


def _cmd_oracle(args, cfg):
    spec = EnumerationSpec(args.g, args.r, args.p)
    dec = oracle_decompose(spec, cfg.subset_budget)
    if cfg.format == "tsv":
        return _tsv([["character", "multiplicity"]] + [[str(c), m] for c, m in dec]), EXIT_OK
    return dumps(decomposition_to_json(spec, dec)), EXIT_OK


def _cmd_kostant(args, cfg):
    lam = parse_character(args.lam, args.g)
    qs = range(3 * args.g + 1) if args.q is None else [args.q]
    if args.q is not None and not 0 <= args.q <= 3 * args.g:
        raise UsageError(f"--q must lie in [0, {3 * args.g}]")
    data = {str(q): [str(mu) for mu in kostant_cohomology(lam, q)] for q in qs}
    if cfg.format == "tsv":
        return _tsv([["q", "character"]] + [[q, mu] for q, mus in data.items() for mu in mus]), EXIT_OK
    return dumps({"lambda": str(lam), "g": args.g, "cohomology": data}), EXIT_OK


def _cmd_profile(args, cfg):
    lam = parse_character(args.lam, args.g)
    prof = kuga_sato_profile(lam) if args.kuga_sato else boundary_profile(lam)
    if cfg.format == "tsv":
        rows = [["degree", "weight", "multiplicity"]]
        rows += [[n, w, m] for n, c in prof.degrees.items() for w, m in sorted(c.items())]
        return _tsv(rows), EXIT_OK
    out = prof.to_json(lam, args.g)
    out["kuga_sato"] = bool(args.kuga_sato)
    return dumps(out), EXIT_OK


def _cmd_classify(args, cfg):
    lam = parse_character(args.lam, args.g)
    cls = classify(lam, args.r)
    if cfg.format == "tsv":
        return _tsv([["lambda", "verdict"], [lam, cls.verdict.value]]), EXIT_OK
    return dumps(classification_to_json(lam, args.r, cls)), EXIT_OK


def _cmd_degeneration(args, cfg):
    g, r, p = args.g, args.r, args.p
    ks = range(4 * g) if args.k is None else [args.k]
    if args.k is not None and not 0 <= args.k <= 4 * g - 1:
        raise UsageError(f"--k must lie in [0, {4 * g - 1}]")
    brute = brute_force_by_degree(g, r, p) if args.source != "closed" else None
    cells = []
    for k in ks:
        cell = {"k": k}
        if args.source in ("closed", "both"):
            cell["closed_form"] = sorted(closed_form_weights(g, r, p, k))
        if brute is not None:
            cell["brute_force"] = sorted(brute[k])
        if args.source == "both":
            cell["match"] = cell["closed_form"] == cell["brute_force"]
        cells.append(cell)
    if cfg.format == "tsv":
        keys = [k for k in ("closed_form", "brute_force") if k in cells[0]]
        rows = [["k"] + keys] + [[c["k"]] + [",".join(map(str, c[x])) for x in keys] for c in cells]
        return _tsv(rows), EXIT_OK
    return dumps({"g": g, "r": r, "p": p, "cells": cells}), EXIT_OK


def _cmd_compare(args, cfg):
    report = compare(args.g, args.r, workers=cfg.threads)
    if cfg.format == "tsv":
        return report.to_tsv(), EXIT_OK
    return dumps(report.to_json()), EXIT_OK


def _cmd_verify(args, cfg):
    if (args.g is None) != (args.r is None):
        raise UsageError("verify takes both --g and --r, or neither")
    ledger = load_ledger(cfg.ledger_path)
    report = run_suite(args.suite, args.g, args.r, ledger, cfg.subset_budget)
    status = EXIT_OK if report["passed"] else EXIT_FAIL
    if cfg.format == "tsv":
        rows = [["id", "name", "passed", "failures"]]
        rows += [[c["id"], c["name"], "pass" if c["passed"] else "FAIL", c["failure_count"]]
                 for c in report["checks"]]
        return _tsv(rows), status
    return dumps(report), status


COMMANDS = {
    "enumerate": _cmd_enumerate,
    "oracle": _cmd_oracle,
    "kostant": _cmd_kostant,
    "profile": _cmd_profile,
    "classify": _cmd_classify,
    "degeneration": _cmd_degeneration,
    "compare": _cmd_compare,
    "verify": _cmd_verify,
}


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = CliConfig(
            threads=args.threads or default_workers(),
            subset_budget=args.subset_budget,
            format=args.format,
            ledger_path=args.ledger_path,
        )
        text, status = COMMANDS[args.command](args, cfg)
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=stderr)
        return EXIT_BUDGET
    except (CharacterParseError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except OracleFailure as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_FAIL
    stdout.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
