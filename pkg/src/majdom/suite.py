"""Corpus-wide verification of every theorem-level invariant.

Each row names one published statement (or one construction claim) and counts
instances, individual checks and violations. Rows marked non-gating (the
K_{r,s} conjecture) are reported but never affect the exit status.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Iterator

from .bounds import BOUND_NAMES, DEFAULT_DP_LIMIT, bound_report
from .digraph import Digraph, Graph, is_totally_disconnected, spanning_subdigraph
from .families import (
    FAMILIES,
    bipartite,
    complete,
    cycle,
    dicomplete,
    dicycle,
    dipath,
    distar,
    doublestar,
    empty,
    figure1,
    path,
    random_digraph,
    random_graph,
    star,
    wheel,
)
from .orientation import (
    _closed_mask_stream,
    closed_forms,
    conjectured_upper_bipartite,
    construct_named_orientation,
    dom1_condition,
    dom_via_theorem,
    small_graph_upper,
    spectrum,
)
from .perturbation import KINDS, critical_arcs, perturb_all
from .solver import (
    enumerate_minimal_mods,
    gamma_m_plus,
    greedy_mods,
    is_minimal_mods_by_loss,
    is_minimal_mods_characterized,
    is_minimal_mods_direct,
    is_mods,
    majority_threshold,
)
from .vertexset import VertexSet


@dataclass
class SuiteConfig:
    families: str = "default"
    random: int = 200
    seed: int = 7
    max_n: int = 10
    orient_max_edges: int = 12
    perturb_max_n: int = 9
    dp_limit: int = DEFAULT_DP_LIMIT
    random_graphs: int = 20
    random_mods: int = 10
    minimal_cap: int = 2000


@dataclass
class Row:
    theorem: str
    gating: bool = True
    checks: int = 0
    violations: int = 0
    first_violation: str = ""
    labels: set = field(default_factory=set)

    def record(self, label: str, ok: bool, detail: str = "") -> None:
        self.labels.add(label)
        self.checks += 1
        if not ok:
            self.violations += 1
            if not self.first_violation:
                self.first_violation = f"{label} {detail}".strip()

    @property
    def instances(self) -> int:
        return len(self.labels)

    @property
    def passed(self) -> bool:
        return self.violations == 0


@dataclass
class SuiteReport:
    config: SuiteConfig
    rows: dict[str, Row]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.rows.values() if r.gating)

    def sorted_rows(self) -> list[Row]:
        return [self.rows[k] for k in sorted(self.rows)]

    def pairs(self) -> list[tuple[str, Any]]:
        c = self.config
        out: list[tuple[str, Any]] = [
            ("command", "suite"),
            ("config.families", c.families),
            ("config.random", c.random),
            ("config.seed", c.seed),
            ("config.max_n", c.max_n),
            ("config.orient_max_edges", c.orient_max_edges),
            ("config.perturb_max_n", c.perturb_max_n),
        ]
        for row in self.sorted_rows():
            key = f"row.{row.theorem}"
            out += [
                (f"{key}.gating", row.gating),
                (f"{key}.instances", row.instances),
                (f"{key}.checks", row.checks),
                (f"{key}.violations", row.violations),
                (f"{key}.status", "pass" if row.passed else "FAIL"),
            ]
            if row.first_violation:
                out.append((f"{key}.first_violation", row.first_violation))
        out.append(("all_gating_rows_pass", self.ok))
        return out


# corpus ------------------------------------------------------------------------

def _wanted(cfg: SuiteConfig, name: str) -> bool:
    if cfg.families == "default":
        return True
    if cfg.families == "none":
        return False
    return name in {x.strip() for x in cfg.families.split(",")}


def digraph_corpus(cfg: SuiteConfig) -> Iterator[tuple[str, Digraph]]:
    N = cfg.max_n
    fams = [
        ("dipath", range(1, N + 1), dipath),
        ("dicycle", range(3, N + 1), dicycle),
        ("empty", range(1, N + 1), empty),
        ("distar", range(1, N + 1), distar),
        ("dicomplete", range(1, min(N, 6) + 1), dicomplete),
    ]
    for name, sizes, fn in fams:
        if _wanted(cfg, name):
            for n in sizes:
                yield f"{name}:{n}", fn(n)
    if _wanted(cfg, "figure1"):
        k = 3
        while 2 * k + 4 <= N:
            yield f"figure1:{k}", figure1(k)
            k += 1
    rng = random.Random(cfg.seed)
    probs = (0.1, 0.3, 0.5)
    for i in range(cfg.random):
        n = rng.randint(1, N)
        sub = rng.randrange(2**31)
        p = probs[i % 3]
        yield f"randdigraph:{n},{p},{sub}", random_digraph(n, p, sub)


def graph_corpus(cfg: SuiteConfig, max_n: int | None = None, max_edges: int | None = None) -> Iterator[tuple[str, str, tuple, Graph]]:
    """``(label, family, params, graph)`` for connected family members within the size caps, then random graphs."""
    N = cfg.max_n if max_n is None else max_n
    E = cfg.orient_max_edges if max_edges is None else max_edges

    def fits(G):
        return G.n <= N and G.m <= E

    singles = [("path", 1, path), ("cycle", 3, cycle), ("complete", 1, complete), ("star", 2, star), ("wheel", 4, wheel)]
    for name, lo, fn in singles:
        if not _wanted(cfg, name):
            continue
        for n in range(lo, N + 1):
            G = fn(n)
            if fits(G):
                yield f"{name}:{n}", name, (n,), G
    if _wanted(cfg, "doublestar"):
        for a in range(1, N):
            for b in range(a, N):
                G = doublestar(a, b)
                if fits(G):
                    yield f"doublestar:{a},{b}", "doublestar", (a, b), G
    if _wanted(cfg, "bipartite"):
        for r in range(1, N + 1):
            for s in range(r, N + 1):
                G = bipartite(r, s)
                if fits(G):
                    yield f"bipartite:{r},{s}", "bipartite", (r, s), G
    rng = random.Random(cfg.seed + 1)
    for i in range(cfg.random_graphs):
        n = rng.randint(1, min(7, N))
        sub = rng.randrange(2**31)
        p = (0.3, 0.5)[i % 2]
        G = random_graph(n, p, sub)
        if G.m <= E:
            yield f"randgraph:{n},{p},{sub}", "random", (), G


def random_mods(D: Digraph, rng: random.Random) -> VertexSet:
    """Random MODS: a shuffled prefix that first reaches the threshold, plus a few random extras."""
    order = list(range(D.n))
    rng.shuffle(order)
    chosen: list[int] = []
    for v in order:
        chosen.append(v)
        if is_mods(D, chosen):
            break
    rest = [v for v in order if v not in chosen]
    chosen += rng.sample(rest, rng.randint(0, len(rest)))
    return VertexSet.of(D.n, chosen)


# checks ------------------------------------------------------------------------

class _Rows(dict):
    def __missing__(self, key):
        row = self[key] = Row(key)
        return row


def check_digraph(label: str, D: Digraph, cfg: SuiteConfig, rows: dict[str, Row], rng: random.Random) -> None:
    exact = gamma_m_plus(D)
    if D.n <= 12:
        oracle = gamma_m_plus(D, "oracle")
        rows["oracle_equivalence"].record(label, (exact.value, exact.witness) == (oracle.value, oracle.witness),
                                          f"exact={exact.witness!r} oracle={oracle.witness!r}")
    greedy = greedy_mods(D)
    rows["greedy_upper"].record(label, is_mods(D, greedy.witness) and greedy.value >= exact.value)

    arcs = D.arc_list()
    for _ in range(3):
        H = spanning_subdigraph(D, [a for a in arcs if rng.random() < 0.5])
        rows["spanning_monotonicity"].record(label, exact.value <= gamma_m_plus(H).value)

    minimal = enumerate_minimal_mods(D, cap=cfg.minimal_cap)
    odd_empty = is_totally_disconnected(D) and D.n % 2 == 1
    for S in minimal:
        ok = is_minimal_mods_direct(D, S)
        rows["minimal_enumeration_sound"].record(label, ok, repr(S))
        if not odd_empty:
            rows["complement_of_minimal"].record(label, is_mods(D, S.complement()), f"S={S!r}")
    tested = list(minimal) + [random_mods(D, rng) for _ in range(cfg.random_mods)]
    for S in tested:
        direct = is_minimal_mods_direct(D, S)
        rows["minimal_characterization"].record(label, direct == is_minimal_mods_characterized(D, S), f"S={S!r}")
        rows["minimal_by_loss"].record(label, direct == is_minimal_mods_by_loss(D, S), f"S={S!r}")

    if D.n <= cfg.dp_limit:
        report = bound_report(D, cfg.dp_limit)
        for e in report.entries:
            if e.applicable:
                rows[f"bound.{e.name}"].record(label, e.holds, f"lhs={e.lhs} rhs={e.rhs}")

    if D.n <= cfg.perturb_max_n:
        for rec in perturb_all(D):
            rows[f"perturb.{rec.kind}"].record(
                label, rec.within_bounds,
                f"target={rec.target} before={rec.before} after={rec.after} range=[{rec.bound_low},{rec.bound_high}]")
        for verdict in critical_arcs(D):
            rows["critical_arc_characterization"].record(label, verdict.agree, f"arc={verdict.arc}")


def check_graph(label: str, family: str, params: tuple, G: Graph, rows: dict[str, Row]) -> None:
    sp = spectrum(G)
    rows["dom_equals_gamma_m"].record(label, sp.min_value == dom_via_theorem(G).value,
                                      f"spectrum_min={sp.min_value}")
    attained = sp.attained
    rows["intermediate_values"].record(label, attained == set(range(sp.min_value, sp.max_value + 1)),
                                       f"values={sorted(attained)}")
    if family != "random":
        for key, expected in closed_forms(family, *params).items():
            got = sp.min_value if key == "dom" else sp.max_value
            rows[f"closed_form.{family}.{key}"].record(label, got == expected, f"expected={expected} got={got}")
    small = small_graph_upper(G)
    if small is not None:
        rows["small_graph_upper"].record(label, sp.max_value == small, f"DOM={sp.max_value}")
    if family == "complete":
        need = (G.n - 1 + 1) // 2
        ok = all(max(c.bit_count() for c in closed) - 1 >= need for _, closed in _closed_mask_stream(G))
        rows["tournament_out_degree"].record(label, ok)
    if family == "bipartite":
        r, s = params
        rows["dom1_bipartite"].record(label, (sp.max_value == 1) == dom1_condition(r, s), f"DOM={sp.max_value}")
        if sp.max_value != 1:
            conj = rows["conjecture_bipartite"]
            conj.gating = False
            conj.record(label, sp.max_value == conjectured_upper_bipartite(r, s),
                        f"DOM={sp.max_value} conjectured={conjectured_upper_bipartite(r, s)}")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def check_constructions(cfg: SuiteConfig, rows: dict[str, Row]) -> None:
    N = cfg.max_n
    for n in range(2, N + 1):
        spec = f"path-dom:{n}"
        rows["construction.path_dom"].record(spec, gamma_m_plus(construct_named_orientation(spec)).value == _ceil_div(n, 6))
    for n in range(3, N + 1):
        spec = f"star-sink:{n}"
        rows["construction.star_sink"].record(spec, gamma_m_plus(construct_named_orientation(spec)).value == (n - 1) // 2)
    for n in range(4, N + 1):
        spec = f"wheel-sink-hub:{n}"
        rows["construction.wheel_sink_hub"].record(spec, gamma_m_plus(construct_named_orientation(spec)).value == _ceil_div(n - 2, 4))
    for a in range(1, N):
        for b in range(a, N):
            n = a + b + 2
            if n > N:
                continue
            spec = f"doublestar-source:{a},{b}"
            rep = bound_report(construct_named_orientation(spec), cfg.dp_limit)
            rows["construction.doublestar_source_lower_tight"].record(spec, rep.entry("degree_lower").tight)
            if n >= 5:
                spec = f"doublestar-stem:{a},{b}"
                rows["construction.doublestar_stem"].record(
                    spec, gamma_m_plus(construct_named_orientation(spec)).value == 2 + max(0, _ceil_div(n - 8, 2)))
    for r in range(1, N + 1):
        for s in range(r, N + 1 - r):
            if dom1_condition(r, s):
                continue
            if s > r + 2:
                spec = f"bipartite-sink:{r},{s}"
                rows["construction.bipartite_sink"].record(spec, gamma_m_plus(construct_named_orientation(spec)).value > 1)
            else:
                spec = f"bipartite-two-out:{r},{s}"
                rows["construction.bipartite_two_out"].record(spec, gamma_m_plus(construct_named_orientation(spec)).value > 1)


def run_suite(cfg: SuiteConfig | None = None) -> SuiteReport:
    cfg = cfg or SuiteConfig()
    rows: dict[str, Row] = _Rows()
    rng = random.Random(cfg.seed + 2)
    for label, D in digraph_corpus(cfg):
        check_digraph(label, D, cfg, rows, rng)
    for label, family, params, G in graph_corpus(cfg):
        check_graph(label, family, params, G, rows)
    check_constructions(cfg, rows)
    return SuiteReport(cfg, dict(rows))
