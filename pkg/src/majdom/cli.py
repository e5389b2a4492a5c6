"""Command-line entry point.

Exit codes: 0 success, 1 usage or parse error, 2 a size limit was exceeded,
3 the verification suite found a violated invariant.
"""
from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from . import structured
from .bounds import bound_report
from .digraph import Digraph, Graph
from .errors import LimitExceeded, MajdomError
from .io import format_instance, load_instance
from .orientation import (
    check_conjecture,
    dom1_bipartite_details,
    dom_via_theorem,
    orient_from_majority_set,
    spectrum,
)
from .perturbation import KINDS, critical_arcs, perturb, perturb_all
from .solver import (
    enumerate_minimal_mods,
    gamma_m_plus,
    gamma_m_undirected,
    gamma_plus,
    is_minimal_mods_by_loss,
    is_minimal_mods_characterized,
    is_minimal_mods_direct,
    is_mods,
)
from .suite import SuiteConfig, run_suite
from .vertexset import VertexSet

EXIT_OK, EXIT_USAGE, EXIT_LIMIT, EXIT_SUITE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _pair(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'u,v', got {text!r}") from None
    return u, v


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertices, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "structured"), default="table")
    common.add_argument("--method", choices=("exact", "oracle"), default="exact")
    common.add_argument("--limit-n", type=int, default=18, help="max vertices for subset DP and oracle enumeration")
    common.add_argument("--limit-edges", type=int, default=24, help="max edges for orientation enumeration")
    common.add_argument("--seed", type=int, default=7)
    common.add_argument("--cap", type=int, default=10**6, help="max results for enumerations")

    p = _Parser(prog="majdom", description="Exact majority out-domination toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    s = add("solve", "compute the set majority out-domination number (or a related number)")
    s.add_argument("instance")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--undirected", action="store_true", help="set majority domination number of a graph")
    g.add_argument("--full", action="store_true", help="out-domination number instead of the majority variant")

    s = add("bounds", "evaluate every published bound")
    s.add_argument("instance")

    s = add("minimal", "check or enumerate minimal MODSs")
    s.add_argument("action", choices=("check", "enumerate"))
    s.add_argument("instance")
    s.add_argument("--set", type=_vertex_list, help="vertices of the set to check, e.g. 0,2")

    s = add("perturb", "effect of one arc/vertex edit (all edits if none given)")
    s.add_argument("instance")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--remove-arc", type=_pair, metavar="U,V")
    g.add_argument("--remove-vertex", type=int, metavar="V")
    g.add_argument("--add-arc", type=_pair, metavar="U,V")
    g.add_argument("--reverse-arc", type=_pair, metavar="U,V")

    s = add("critical", "critical-arc verdicts for every arc")
    s.add_argument("instance")

    s = add("orient", "orientation spectrum of a graph")
    s.add_argument("instance")
    s.add_argument("--realize", action="store_true",
                   help="also orient edges away from a minimum majority dominating set")

    s = add("conjecture", "exhaustive check of the K_{r,s} conjecture")
    s.add_argument("r", type=int, nargs="?")
    s.add_argument("s", type=int, nargs="?")
    s.add_argument("--all", action="store_true", help="every r <= s with r*s <= --max-product")
    s.add_argument("--max-product", type=int, default=20)

    s = add("dom1", "check the K_{r,s} characterization of upper orientable number 1")
    s.add_argument("r", type=int)
    s.add_argument("s", type=int)

    s = add("suite", "verify every theorem invariant over a corpus")
    s.add_argument("--families", default="default", help="'default', 'none', or a comma list of family names")
    s.add_argument("--random", type=int, default=200, help="number of seeded random digraphs")
    s.add_argument("--max-n", type=int, default=10)
    s.add_argument("--orient-max-edges", type=int, default=12)
    s.add_argument("--perturb-max-n", type=int, default=9)
    s.add_argument("--random-graphs", type=int, default=20)
    s.add_argument("--random-mods", type=int, default=10)

    s = add("gen", "write a family instance in the text format")
    s.add_argument("instance")
    s.add_argument("-o", "--output")
    return p


# rendering ------------------------------------------------------------------------

def _fmt(value: Any) -> str:
    if isinstance(value, VertexSet):
        return repr(value)
    return structured.format_value(value)


def _table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [list(headers)] + [[_fmt(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _emit(args, pairs: list[tuple[str, Any]], table: str | None = None) -> None:
    if args.format == "structured":
        plain = [(k, v.sorted() if isinstance(v, VertexSet) else v) for k, v in pairs]
        sys.stdout.write(structured.dump([("command", args.command), *plain]))
    else:
        if table is None:
            table = "\n".join(f"{k:<{max(len(k) for k, _ in pairs)}}  {_fmt(v)}" for k, v in pairs)
        print(table)


def _digraph(args) -> Digraph:
    inst = load_instance(args.instance)
    if isinstance(inst, Graph):
        return inst.symmetric_digraph()
    return inst


def _graph(args) -> Graph:
    inst = load_instance(args.instance)
    if not isinstance(inst, Graph):
        raise UsageError(f"{args.instance!r} is a digraph; this command needs an undirected graph")
    return inst


def _check_oracle(args, n: int) -> None:
    if args.method == "oracle" and n > args.limit_n:
        raise LimitExceeded("vertex count for oracle enumeration", n, args.limit_n)


# commands ------------------------------------------------------------------------

def cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    if args.undirected:
        if not isinstance(inst, Graph):
            raise UsageError("--undirected needs an undirected graph instance")
        _check_oracle(args, inst.n)
        res, problem = gamma_m_undirected(inst, args.method), "majority-domination"
    else:
        D = inst.symmetric_digraph() if isinstance(inst, Graph) else inst
        _check_oracle(args, D.n)
        if args.full:
            res, problem = gamma_plus(D, args.method), "out-domination"
        else:
            res, problem = gamma_m_plus(D, args.method), "majority-out-domination"
    pairs = [
        ("instance", args.instance),
        ("problem", problem),
        ("n", inst.n),
        ("value", res.value),
        ("witness", res.witness),
        ("method", res.method),
        ("explored", res.explored),
    ]
    _emit(args, pairs)
    return EXIT_OK


def cmd_bounds(args) -> int:
    D = _digraph(args)
    rep = bound_report(D, dp_limit=args.limit_n)
    pairs: list[tuple[str, Any]] = [
        ("instance", args.instance), ("n", rep.n), ("delta_plus", rep.delta_plus),
        ("gamma_m_plus", rep.gamma_m_plus), ("gamma_plus", rep.gamma_plus),
        ("longest_path", rep.l), ("longest_cycle", rep.c),
    ]
    for e in rep.entries:
        key = f"bound.{e.name}"
        pairs += [(f"{key}.relation", e.relation), (f"{key}.lhs", e.lhs), (f"{key}.rhs", e.rhs),
                  (f"{key}.applicable", e.applicable), (f"{key}.holds", e.holds), (f"{key}.tight", e.tight)]
        if e.note:
            pairs.append((f"{key}.note", e.note))
    head = (f"n={rep.n}  delta+={rep.delta_plus}  gamma_m+={rep.gamma_m_plus}  gamma+={rep.gamma_plus}  "
            f"longest path={rep.l}  longest cycle={rep.c}")
    rows = [(e.name, e.relation, e.lhs, e.rhs,
             "n/a" if not e.applicable else ("yes" if e.holds else "NO"),
             "yes" if e.tight and e.applicable else "", e.note) for e in rep.entries]
    _emit(args, pairs, head + "\n" + _table(("bound", "relation", "lhs", "rhs", "holds", "tight", "note"), rows))
    return EXIT_OK


def cmd_minimal(args) -> int:
    D = _digraph(args)
    if args.action == "enumerate":
        res = enumerate_minimal_mods(D, cap=args.cap)
        sets = [S.sorted() for S in res]
        pairs = [("instance", args.instance), ("count", len(sets)), ("truncated", res.truncated)]
        pairs += [(f"set.{i}", s) for i, s in enumerate(sets)]
        table = "\n".join(repr(S) for S in res) + f"\n{len(sets)} minimal MODS" + (" (truncated)" if res.truncated else "")
        _emit(args, pairs, table)
        return EXIT_OK
    if args.set is None:
        raise UsageError("minimal check needs --set")
    S = VertexSet.of(D.n, args.set)
    pairs: list[tuple[str, Any]] = [("instance", args.instance), ("set", S), ("is_mods", is_mods(D, S))]
    if is_mods(D, S):
        pairs += [
            ("minimal_direct", is_minimal_mods_direct(D, S)),
            ("minimal_characterized", is_minimal_mods_characterized(D, S)),
            ("minimal_by_loss", is_minimal_mods_by_loss(D, S)),
        ]
    _emit(args, pairs)
    return EXIT_OK


def cmd_perturb(args) -> int:
    D = _digraph(args)
    if args.remove_arc:
        records = [perturb(D, "arc-removal", args.remove_arc)]
    elif args.remove_vertex is not None:
        records = [perturb(D, "vertex-removal", args.remove_vertex)]
    elif args.add_arc:
        records = [perturb(D, "arc-addition", args.add_arc)]
    elif args.reverse_arc:
        records = [perturb(D, "arc-reversal", args.reverse_arc)]
    else:
        records = perturb_all(D, KINDS)
    pairs: list[tuple[str, Any]] = [("instance", args.instance), ("records", len(records))]
    for i, r in enumerate(records):
        key = f"record.{i}"
        pairs += [(f"{key}.kind", r.kind), (f"{key}.target", r.target), (f"{key}.before", r.before),
                  (f"{key}.after", r.after), (f"{key}.bound_low", r.bound_low), (f"{key}.bound_high", r.bound_high),
                  (f"{key}.within_bounds", r.within_bounds)]
        if r.out_degree is not None:
            pairs.append((f"{key}.out_degree", r.out_degree))
    pairs.append(("violations", sum(not r.within_bounds for r in records)))
    rows = [(r.kind, r.target, r.before, r.after, f"[{r.bound_low},{r.bound_high}]",
             "yes" if r.within_bounds else "NO") for r in records]
    _emit(args, pairs, _table(("kind", "target", "before", "after", "range", "within"), rows))
    return EXIT_OK


def cmd_critical(args) -> int:
    D = _digraph(args)
    verdicts = critical_arcs(D)
    pairs: list[tuple[str, Any]] = [("instance", args.instance), ("arcs", len(verdicts)),
                                    ("critical", [v.arc for v in verdicts if v.direct])]
    for i, v in enumerate(verdicts):
        pairs += [(f"arc.{i}.arc", v.arc), (f"arc.{i}.direct", v.direct),
                  (f"arc.{i}.characterized", v.characterized), (f"arc.{i}.agree", v.agree)]
    rows = [(v.arc, v.direct, v.characterized, v.agree) for v in verdicts]
    _emit(args, pairs, _table(("arc", "direct", "characterized", "agree"), rows))
    return EXIT_OK


def cmd_orient(args) -> int:
    G = _graph(args)
    sp = spectrum(G, limit=args.limit_edges)
    ivt_ok = sp.attained == set(range(sp.min_value, sp.max_value + 1))
    dom = dom_via_theorem(G)
    pairs: list[tuple[str, Any]] = [
        ("instance", args.instance), ("n", G.n), ("edges", G.m), ("orientations", sp.total),
        ("dom", sp.min_value), ("DOM", sp.max_value),
        ("min_witness", list(sp.min_witness.direction)), ("max_witness", list(sp.max_witness.direction)),
        ("gamma_m", dom.value), ("dom_equals_gamma_m", dom.value == sp.min_value), ("ivt", ivt_ok),
    ]
    pairs += [(f"histogram.{v}", c) for v, c in sp.histogram.items()]
    if args.realize:
        o = orient_from_majority_set(G, dom.witness, seed=args.seed)
        pairs += [("realized.set", dom.witness), ("realized.arcs", list(o.direction)),
                  ("realized.value", gamma_m_plus(o.to_digraph()).value)]
    _emit(args, pairs)
    return EXIT_OK


def cmd_conjecture(args) -> int:
    if args.all:
        cases = [(r, s) for r in range(1, args.max_product + 1) for s in range(r, args.max_product + 1)
                 if r * s <= args.max_product]
    elif args.r is not None and args.s is not None:
        cases = [(args.r, args.s)]
    else:
        raise UsageError("give r and s, or --all")
    pairs: list[tuple[str, Any]] = []
    rows = []
    for r, s in cases:
        v = check_conjecture(r, s, limit=args.limit_edges)
        key = f"case.{r}.{s}"
        pairs += [(f"{key}.computed", v.computed_DOM), (f"{key}.conjectured", v.conjectured),
                  (f"{key}.applicable", v.applicable), (f"{key}.agrees", v.agrees), (f"{key}.method", v.method)]
        rows.append((f"K{r},{s}", v.computed_DOM, "n/a" if not v.applicable else v.conjectured,
                     "n/a" if not v.applicable else ("yes" if v.agrees else "no")))
    _emit(args, pairs, _table(("graph", "computed", "conjectured", "agrees"), rows))
    return EXIT_OK


def cmd_dom1(args) -> int:
    c = dom1_bipartite_details(args.r, args.s, limit=args.limit_edges)
    pairs = [("r", c.r), ("s", c.s), ("computed", c.computed), ("predicted_one", c.predicted_one), ("agrees", c.agrees)]
    _emit(args, pairs)
    return EXIT_OK


def cmd_suite(args) -> int:
    cfg = SuiteConfig(families=args.families, random=args.random, seed=args.seed, max_n=args.max_n,
                      orient_max_edges=args.orient_max_edges, perturb_max_n=args.perturb_max_n,
                      dp_limit=args.limit_n, random_graphs=args.random_graphs, random_mods=args.random_mods)
    report = run_suite(cfg)
    if args.format == "structured":
        sys.stdout.write(structured.dump(report.pairs()))
    else:
        rows = [(r.theorem, r.instances, r.checks, r.violations,
                 ("pass" if r.passed else "FAIL") + ("" if r.gating else " (not gating)"), r.first_violation)
                for r in report.sorted_rows()]
        print(_table(("theorem", "instances", "checks", "violations", "status", "first violation"), rows))
        print("all gating rows pass" if report.ok else "gating violations found")
    return EXIT_OK if report.ok else EXIT_SUITE


def cmd_gen(args) -> int:
    text = format_instance(load_instance(args.instance))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve, "bounds": cmd_bounds, "minimal": cmd_minimal, "perturb": cmd_perturb,
    "critical": cmd_critical, "orient": cmd_orient, "conjecture": cmd_conjecture, "dom1": cmd_dom1,
    "suite": cmd_suite, "gen": cmd_gen,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except LimitExceeded as exc:
        print(f"majdom: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, MajdomError, ValueError, OSError) as exc:
        print(f"majdom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
