"""Command-line entry point: ``stellate <command> ...``.

Exit codes: 0 ok, 1 counterexample found, 2 budget exceeded, 3 input or
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .analysis import Budgets, analyze, binomial_json
from .contract import hertz_color
from .errors import BudgetExceeded, DomainError, GraphParseError, StellateError
from .graph import Graph, enumerate_stable_sets
from .io import encode_graph6, graph_to_json, read_graphs, vertex_list
from .recognize import (find_antihole, find_clique_cutset, find_hole, find_odd_stretcher,
                        find_perfect_ordering, is_generalized_split, is_meyniel)
from .sweep import CheckpointError, sweep
from .toric.fibers import is_quadratically_generated_oracle
from .toric.groebner import initial_ideal_profile, is_quadratically_generated, toric_groebner
from .toric.perfect_order import perfect_order_index

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3
RECOGNIZERS = ("hole", "antihole", "stretcher", "meyniel", "perfect-order", "gsp", "clique-cutset")
# "theorem32" is kept as an alias so scripts written against the original flag name still work
ORDERS = ("default", "perfect-order", "theorem32")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--budget-stable-sets", type=int, default=None)
    p.add_argument("--budget-gb-vars", type=int, default=None)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="stellate", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="full report per input graph")
    p.add_argument("file")
    p.add_argument("--check-conjecture1", action="store_true")

    p = sub.add_parser("recognize", parents=[common], help="run one recogniser")
    p.add_argument("file")
    p.add_argument("--what", choices=RECOGNIZERS, required=True)

    p = sub.add_parser("color", parents=[common], help="Hertz COLOR with rule R")
    p.add_argument("file")

    p = sub.add_parser("toric", parents=[common], help="toric ideal computations")
    tsub = p.add_subparsers(dest="toric_command", required=True, parser_class=_Parser)
    q = tsub.add_parser("gb", parents=[common])
    q.add_argument("file")
    q.add_argument("--order", choices=ORDERS, default="default")
    q = tsub.add_parser("quadgen", parents=[common])
    q.add_argument("file")
    q.add_argument("--oracle", action="store_true")
    q.add_argument("--max-degree", type=int, default=None)

    p = sub.add_parser("family", parents=[common], help="emit a named graph")
    p.add_argument("kind", choices=("stretcher", "antihole", "hole", "type2"))
    p.add_argument("params", nargs="+")

    p = sub.add_parser("sweep", parents=[common], help="conjecture sweep")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--n", type=int)
    src.add_argument("--input")
    p.add_argument("--check-conjecture1", action="store_true")
    p.add_argument("--resume", default=None, help="checkpoint file of an earlier run")
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--report", default=None, help="JSON-lines report file")
    p.add_argument("--every", type=int, default=25)
    return parser


# -- helpers ---------------------------------------------------------------------------


def _graphs(path: str) -> list[Graph]:
    if path == "-":
        return list(read_graphs(sys.stdin))
    try:
        with open(path) as fh:
            return list(read_graphs(fh))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(obj, fmt, text_lines=None):
    if fmt == "text" and text_lines is not None:
        for line in text_lines:
            print(line)
    else:
        print(json.dumps(obj, sort_keys=True))


def _budgets(args) -> Budgets:
    return Budgets.from_env(stable_sets=args.budget_stable_sets, gb_vars=args.budget_gb_vars)


# -- commands ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    code = EXIT_OK
    budgets = _budgets(args)
    for g in _graphs(args.file):
        rep = analyze(g, budgets, check_conjecture1=args.check_conjecture1, hertz_seed=args.seed)
        lines = [f"graph {rep['graph6']} n={rep['n']} m={rep['m']}",
                 f"verdict {rep['verdict']}",
                 f"quadratically_generated {rep['toric'].get('quadratically_generated')}"]
        lines += [f"{k} {v}" for k, v in rep["flags"].items()]
        lines += [f"{k} {json.dumps(v)}" for k, v in rep["certificates"].items() if v]
        _emit(rep, args.fmt, lines)
        if rep["counterexample"]:
            code = EXIT_COUNTEREXAMPLE
        elif rep["skipped"] and code == EXIT_OK:
            code = EXIT_BUDGET
    return code


def _recognize_one(g: Graph, what: str):
    if what == "hole":
        c = find_hole(g, "any", 5)
        return None if c is None else {"hole": [v + 1 for v in c.cycle]}
    if what == "antihole":
        c = find_antihole(g, "any")
        return None if c is None else {"antihole": [v + 1 for v in c.cycle]}
    if what == "stretcher":
        e = find_odd_stretcher(g)
        return None if e is None else {"stretcher": {"s": e.s, "t": e.t, "u": e.u,
                                                     "map": {k: v + 1 for k, v in e.mapping}}}
    if what == "meyniel":
        ok, bad = is_meyniel(g)
        return {"meyniel": ok, "bad_cycle": None if bad is None else
                {"cycle": [v + 1 for v in bad.cycle], "chords": bad.chords}}
    if what == "perfect-order":
        order = find_perfect_ordering(g)
        return None if order is None else {"ordering": [v + 1 for v in order]}
    if what == "gsp":
        p = is_generalized_split(g)
        return None if p is None else {"gsp_partition": {"side": p.side, "c0": vertex_list(p.c0),
                                                         "blocks": [vertex_list(b) for b in p.blocks]}}
    split = find_clique_cutset(g)
    return None if split is None else {"clique_cutset": {"cutset": vertex_list(split.cutset),
                                                         "h1": vertex_list(split.h1),
                                                         "h2": vertex_list(split.h2)}}


def cmd_recognize(args) -> int:
    for g in _graphs(args.file):
        res = _recognize_one(g, args.what)
        _emit({"graph6": encode_graph6(g), "what": args.what, "found": res is not None, "result": res},
              args.fmt, [f"{args.what}: {'absent' if res is None else json.dumps(res)}"])
    return EXIT_OK


def cmd_color(args) -> int:
    for g in _graphs(args.file):
        seed = args.seed - 1 if args.seed >= 1 else 0
        run = hertz_color(g, seed, check=False)
        obj = {"graph6": encode_graph6(g), "seed": seed + 1, "coloring": run.coloring,
               "colors": run.num_colors, "stable_set": vertex_list(run.stable_set),
               "trace": run.trace.to_json()}
        _emit(obj, args.fmt, [f"colors {run.num_colors}: {run.coloring}",
                              f"stable set {vertex_list(run.stable_set)}"])
    return EXIT_OK


def cmd_toric(args) -> int:
    budgets = _budgets(args)
    for g in _graphs(args.file):
        if args.toric_command == "gb":
            if args.order == "default":
                idx = enumerate_stable_sets(g, budgets.stable_sets)
                gb = toric_groebner(idx, max_vars=budgets.gb_vars)
            else:
                order = find_perfect_ordering(g)
                if order is None:
                    raise DomainError("graph has no perfect ordering")
                idx, mono = perfect_order_index(g, order, budgets.stable_sets)
                gb = toric_groebner(idx, mono, max_vars=budgets.gb_vars)
            prof = initial_ideal_profile(gb)
            obj = {"graph6": encode_graph6(g), "order": list(gb.order.priority),
                   "stable_sets": [vertex_list(s) for s in idx.sets],
                   "basis": [binomial_json(b, idx.sets) for b in gb.elements],
                   "max_degree": prof.max_degree, "quadratic": prof.quadratic,
                   "squarefree": prof.squarefree}
            _emit(obj, args.fmt, [str(b) for b in gb.elements] + [
                f"size {len(gb)} max_degree {prof.max_degree} squarefree {prof.squarefree}"])
        else:
            idx = enumerate_stable_sets(g, budgets.stable_sets)
            res = is_quadratically_generated(idx, max_vars=budgets.gb_vars)
            obj = {"graph6": encode_graph6(g), "quadratically_generated": res.quadratic,
                   "witness": None if res.witness is None else binomial_json(res.witness, idx.sets),
                   "gb_max_degree": res.basis.max_degree}
            if args.oracle:
                d = args.max_degree if args.max_degree is not None else res.basis.max_degree
                obj["oracle"] = is_quadratically_generated_oracle(idx, d)
                obj["oracle_max_degree"] = d
            _emit(obj, args.fmt, [f"quadratically_generated {res.quadratic}"]
                  + ([f"oracle {obj['oracle']}"] if args.oracle else []))
    return EXIT_OK


def cmd_family(args) -> int:
    try:
        if args.kind == "stretcher":
            if len(args.params) != 3:
                raise UsageError("stretcher needs S T U")
            g = families.odd_stretcher(*(int(x) for x in args.params))
        elif args.kind in ("antihole", "hole"):
            if len(args.params) != 1:
                raise UsageError(f"{args.kind} needs K")
            g = getattr(families, args.kind)(int(args.params[0]))
        else:
            sizes = [int(x) for p in args.params for x in p.split(",") if x]
            g = families.complete_multipartite(sizes)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.fmt == "json":
        print(json.dumps(graph_to_json(g)))
    else:
        print(encode_graph6(g))
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.resume is None and args.n is None and args.input is None:
        raise UsageError("sweep needs --n, --input or --resume")
    state = sweep(max_n=args.n, input_path=args.input, budgets=_budgets(args),
                  check_conjecture1=args.check_conjecture1, report_path=args.report,
                  checkpoint_path=args.checkpoint, resume=args.resume, jobs=args.jobs,
                  every=args.every, seed=args.seed)
    summary = {"source": state.source, "graphs": state.cursor, "tallies": state.tallies,
               "counterexamples": state.counterexamples,
               "conjecture1_discrepancies": state.conjecture1_discrepancies}
    _emit(summary, args.fmt, [f"graphs {state.cursor}"]
          + [f"{k} {v}" for k, v in sorted(state.tallies.items())]
          + [f"counterexamples {len(state.counterexamples)}"])
    if state.found_counterexample:
        return EXIT_COUNTEREXAMPLE
    if state.tallies.get("skipped"):
        return EXIT_BUDGET
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "recognize": cmd_recognize, "color": cmd_color,
            "toric": cmd_toric, "family": cmd_family, "sweep": cmd_sweep}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.fmt is None:
        args.fmt = "text" if args.command == "family" else "json"
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"stellate: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphParseError, DomainError, UsageError, CheckpointError, ValueError) as exc:
        print(f"stellate: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StellateError as exc:
        print(f"stellate: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
