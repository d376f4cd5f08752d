"""Command-line interface: ``pdcj lb|sort|verify|gen|bench|table``.

Exit codes: 0 success, 2 parse error or bad parameters, 3 invariant
violation, 4 scenario self-verification failed, 5 oracle cap exceeded,
6 verification suite failed, 7 no scenario within ``--budget``.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from . import __version__
from .breakpoint_graph import DecompositionError, signed_report, unsigned_report
from .formats import ParseError, format_genome, format_scenario, read_genome
from .generators import gen_gap_family, gen_random, gen_tight_family
from .genome import SignedGenome, identity_unsigned
from .oracle import (
    ALL_PREFIX_DCJ,
    MOVE_SETS,
    OracleCapExceeded,
    oracle_scenario,
    oracle_table,
    prefix_exchange_check,
    verify_approx_ratio,
    verify_decompositions,
    verify_fpt,
    verify_long_strip_observation,
    verify_lower_bounds,
)
from .solvers import (
    BudgetExceeded,
    sort_signed_exact,
    sort_unsigned_approx,
    sort_unsigned_fpt,
    verify_scenario,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3
EXIT_VERIFY = 4
EXIT_CAP = 5
EXIT_SUITE = 6
EXIT_BUDGET = 7

ALGOS = ("signed-exact", "approx", "fpt", "oracle")
SUITES = ("lower-bounds", "decomposition", "long-strip", "approx-ratio", "fpt", "prefix-exchange")


class UsageError(Exception):
    pass


def _fail(code, message):
    print(f"error: {message}", file=sys.stderr)
    return code


def _kind_of(g):
    return "signed" if isinstance(g, SignedGenome) else "unsigned"


def _load(path, expected_kind=None):
    """Read a genome; ``expected_kind`` must agree with the file header."""
    _, g = read_genome(path)
    kind = _kind_of(g)
    if expected_kind and expected_kind != kind:
        raise UsageError(f"--kind {expected_kind} but {path} declares {kind} input")
    return g


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report(g):
    if isinstance(g, SignedGenome):
        return signed_report(g)
    rep = unsigned_report(g)
    if rep.lb < rep.b:
        raise AssertionError(f"lower bound {rep.lb} below breakpoint count {rep.b}")
    return rep


# ----------------------------------------------------------------------------
# commands


def cmd_lb(args):
    g = _load(args.input, args.kind)
    print(_report(g).line())
    return EXIT_OK


def _solve(g, algo, budget=None):
    kind = _kind_of(g)
    if algo == "signed-exact":
        if kind != "signed":
            raise UsageError("signed-exact needs a signed genome")
        return sort_signed_exact(g)
    if algo == "oracle":
        return oracle_scenario(g)
    if kind != "unsigned":
        raise UsageError(f"{algo} needs an unsigned genome")
    if algo == "approx":
        return sort_unsigned_approx(g)
    return sort_unsigned_fpt(g, budget=budget)


def cmd_sort(args):
    g = _load(args.input)
    if args.budget is not None and args.algo != "fpt":
        raise UsageError("--budget applies to --algo fpt only")
    scenario = _solve(g, args.algo, args.budget)
    check = verify_scenario(g, scenario)
    if not check:
        return _fail(EXIT_VERIFY, f"scenario failed verification at move {check.step}: {check.reason}")
    if args.output:
        _write(args.output, format_scenario(scenario))
    else:
        sys.stdout.write(format_scenario(scenario))
    print(f"length={scenario.length}")
    return EXIT_OK


def _run_suite(name, n, kind):
    if name == "lower-bounds":
        return verify_lower_bounds(n, kind)
    if kind != "unsigned":
        raise UsageError(f"suite {name} is defined for unsigned genomes only")
    if name == "decomposition":
        return verify_decompositions(n)
    if name == "long-strip":
        return verify_long_strip_observation(n)
    if name == "approx-ratio":
        return verify_approx_ratio(n)
    if name == "fpt":
        return verify_fpt(n)
    return prefix_exchange_check(n)


def cmd_verify(args):
    if args.n < 1:
        raise UsageError("--n must be positive")
    report = _run_suite(args.suite, args.n, args.kind)
    print(report.summary())
    for item in report.violations[: args.show]:
        print(f"violation: {item}")
    for item in report.worst[: args.show]:
        print(f"worst: {item}")
    return EXIT_OK if report.passed else EXIT_SUITE


def _family_genome(family, p, kind="unsigned", seed=0):
    if family == "gap":
        return gen_gap_family(p)
    if family == "tight":
        return gen_tight_family(p)
    if family == "identity":
        return identity_unsigned(p)
    return gen_random(p, kind, seed)


def cmd_gen(args):
    if args.family in ("gap", "tight"):
        if args.p is None or args.p < 2:
            raise UsageError(f"--family {args.family} needs --p >= 2")
        g = _family_genome(args.family, args.p)
    else:
        if args.n is None or args.n < 1:
            raise UsageError("--family random needs --n >= 1")
        g = gen_random(args.n, args.kind, args.seed)
    _write(args.output, format_genome(g))
    return EXIT_OK


def parse_range(text):
    """Parse an inclusive range such as ``2..5`` or a comma list such as ``2,3,7``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


BENCH_ALGOS = ("lb", "approx", "fpt", "oracle")
BENCH_COLUMNS = ("family", "p", "n", "b", "lb", "algo", "length", "seconds")


def cmd_bench(args):
    ps = parse_range(args.p_range)
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    bad = [a for a in algos if a not in BENCH_ALGOS]
    if bad or not algos:
        raise UsageError(f"--algos must name some of {', '.join(BENCH_ALGOS)}")
    if args.family in ("gap", "tight") and min(ps) < 2:
        raise UsageError(f"--family {args.family} needs p >= 2")
    if min(ps) < 1:
        raise UsageError("p must be positive")

    out = sys.stdout if args.output in (None, "-") else open(args.output, "w", newline="", encoding="utf-8")
    status = EXIT_OK
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(BENCH_COLUMNS)
        for p in ps:
            g = _family_genome(args.family, p, "unsigned", args.seed)
            rep = _report(g)
            for algo in algos:
                t0 = time.perf_counter()
                if algo == "lb":
                    length = ""
                else:
                    try:
                        s = _solve(g, algo)
                    except OracleCapExceeded:
                        length = "cap-exceeded"
                        status = EXIT_CAP
                    else:
                        if not verify_scenario(g, s):
                            raise AssertionError(f"{algo} produced an invalid scenario for p={p}")
                        length = s.length
                seconds = time.perf_counter() - t0
                writer.writerow([args.family, p, g.n, rep.b, rep.lb, algo, length, f"{seconds:.6f}"])
                out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return status


def cmd_table(args):
    table = oracle_table(args.n, args.kind, args.move_set)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            table.dump(fh)
    else:
        table.dump(sys.stdout)
    return EXIT_OK


# ----------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="pdcj", description="Sorting genomes by prefix DCJ operations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lb", help="print the lower-bound report line")
    p.add_argument("input", help="genome file")
    p.add_argument("--kind", choices=("signed", "unsigned"), help="fail unless the file declares this kind")
    p.set_defaults(func=cmd_lb)

    p = sub.add_parser("sort", help="compute a sorting scenario")
    p.add_argument("input", help="genome file")
    p.add_argument("--algo", choices=ALGOS, required=True)
    p.add_argument("--budget", type=int, help="fpt only: fail with exit 7 unless distance <= budget")
    p.add_argument("-o", "--output", help="scenario file (default: stdout)")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("verify", help="run an exhaustive check against the BFS oracle")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("signed", "unsigned"), default="unsigned")
    p.add_argument("--show", type=int, default=5, help="violations and worst cases to print")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated genome")
    p.add_argument("--family", choices=("gap", "tight", "random"), required=True)
    p.add_argument("--p", type=int, help="family parameter for gap and tight")
    p.add_argument("--n", type=int, help="size for random")
    p.add_argument("--kind", choices=("signed", "unsigned"), default="unsigned")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="genome file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser(
        "bench",
        help="CSV of lengths and timings over a family",
        description="For identity and random the p column is n; random instances use --seed.",
    )
    p.add_argument("--family", choices=("gap", "tight", "random", "identity"), required=True)
    p.add_argument("--p-range", required=True, help="e.g. 2..10 or 2,3")
    p.add_argument("--algos", default="lb,approx", help=f"comma list of {','.join(BENCH_ALGOS)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="CSV file (default: stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("table", help="dump the oracle distance table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("signed", "unsigned"), default="unsigned")
    p.add_argument("--move-set", choices=MOVE_SETS, default=ALL_PREFIX_DCJ)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AssertionError, DecompositionError) as exc:
        return _fail(EXIT_INVARIANT, f"invariant violated: {exc}")
    except (ParseError, UsageError, OSError, ValueError) as exc:
        return _fail(EXIT_USAGE, str(exc))
    except OracleCapExceeded as exc:
        return _fail(EXIT_CAP, str(exc))
    except BudgetExceeded as exc:
        return _fail(EXIT_BUDGET, str(exc))


if __name__ == "__main__":
    sys.exit(main())
