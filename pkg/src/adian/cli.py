"""Command-line interface.

Exit codes: 0 closed / equal, 1 not equal, 2 budget exceeded,
3 parse or validation error.
"""

from __future__ import annotations

import argparse
import sys

from .adian_analysis import MultipleRelationsError, classify
from .presentation import PresentationError, load_presentation
from .rword_subgraph import OccurrenceMismatch, all_deltas_finite, delta, occurrences
from .stephen import Budget, BudgetExceeded, decide_equal, is_idempotent, schutzenberger
from .word_graph import to_dot

EXIT_OK, EXIT_NOT_EQUAL, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _budget(args) -> Budget:
    return Budget(max_full_expansions=args.budget, max_vertices=args.max_vertices)


def _write_dot(path, g) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_dot(g))


def cmd_analyze(args, p, out) -> int:
    print(classify(p).record(), file=out)
    return EXIT_OK


def cmd_sgraph(args, p, out) -> int:
    w = p.word(args.word)
    try:
        g, trace = schutzenberger(w, p, _budget(args))
        code = EXIT_OK
    except BudgetExceeded as exc:
        g, trace = exc.graph, exc.trace
        code = EXIT_BUDGET
    if args.trace:
        out.write(str(trace))
    else:
        state = "closed" if trace.closed else "budget-exceeded"
        print(f"{state} steps={len(trace.steps)} vertices={g.num_vertices()} "
              f"edges={g.num_edges()}", file=out)
    if args.dot:
        _write_dot(args.dot, g)
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as f:
            f.write(g.dump())
    return code


def cmd_subgraph(args, p, out) -> int:
    w = p.word(args.word)
    if not 1 <= args.relation <= len(p.relations):
        raise UsageError(f"relation {args.relation} out of range 1..{len(p.relations)}")
    r = p.relations[args.relation - 1].side(args.rword)
    occs = occurrences(r, w)
    if not 1 <= args.index <= len(occs):
        raise UsageError(f"{r} occurs {len(occs)} time(s) in {w}; no occurrence {args.index}")
    try:
        d = delta(w, occs[args.index - 1], p, _budget(args))
        code = EXIT_OK
    except BudgetExceeded as exc:
        d = exc.delta
        code = EXIT_BUDGET
    print(d.report_line(), file=out)
    if args.dot:
        _write_dot(args.dot, d.graph)
    return code


def cmd_deltas(args, p, out) -> int:
    report = all_deltas_finite(p.word(args.word), p, _budget(args))
    out.write(str(report))
    print(f"all_closed={str(report.all_closed).lower()}", file=out)
    return EXIT_OK if report.all_closed else EXIT_BUDGET


def cmd_decide(args, p, out) -> int:
    outcome = decide_equal(p.word(args.u), p.word(args.v), p, _budget(args))
    print(outcome.line(), file=out)
    return outcome.exit_code


def cmd_idempotent(args, p, out) -> int:
    outcome = is_idempotent(p.word(args.word), p, _budget(args))
    print(outcome.line(), file=out)
    return outcome.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adian",
        description="Word problem tools for Adian inverse semigroups (Stephen's procedure).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("-p", "--presentation", required=True, metavar="FILE")
        sp.set_defaults(func=func)
        return sp

    def budgeted(sp):
        sp.add_argument("--budget", type=int, default=Budget().max_full_expansions, metavar="N",
                        help="maximum number of full expansions / subgraph steps")
        sp.add_argument("--max-vertices", type=int, default=Budget().max_vertices, metavar="N")

    common("analyze", cmd_analyze, "classify a one-relation presentation")

    sp = common("sgraph", cmd_sgraph, "build the Schützenberger automaton of a word")
    sp.add_argument("-w", "--word", required=True)
    sp.add_argument("--trace", action="store_true", help="print one line per full expansion")
    sp.add_argument("--dot", metavar="OUT", help="write the graph in GraphViz DOT format")
    sp.add_argument("--dump", metavar="OUT", help="write the line-based graph dump")
    budgeted(sp)

    sp = common("subgraph", cmd_subgraph, "build the subgraph generated by one R-word occurrence")
    sp.add_argument("-w", "--word", required=True)
    sp.add_argument("-r", "--rword", choices=("lhs", "rhs"), required=True)
    sp.add_argument("-i", "--index", type=int, required=True, help="1-based occurrence number")
    sp.add_argument("--relation", type=int, default=1, help="1-based relation number")
    sp.add_argument("--dot", metavar="OUT")
    budgeted(sp)

    sp = common("deltas", cmd_deltas, "build the subgraphs for every R-word occurrence")
    sp.add_argument("-w", "--word", required=True)
    budgeted(sp)

    sp = common("decide", cmd_decide, "decide whether two words are equal")
    sp.add_argument("-u", required=True)
    sp.add_argument("-v", required=True)
    budgeted(sp)

    sp = common("idempotent", cmd_idempotent, "decide whether a word is idempotent")
    sp.add_argument("-w", "--word", required=True)
    budgeted(sp)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if getattr(args, "budget", 1) <= 0 or getattr(args, "max_vertices", 1) <= 0:
            raise UsageError("budget limits must be positive")
        p = load_presentation(args.presentation)
        return args.func(args, p, out)
    except (PresentationError, MultipleRelationsError, OccurrenceMismatch, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
