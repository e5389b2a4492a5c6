"""Orientations of undirected graphs: exhaustive spectra, the explicit constructions, and the K_{r,s} checks.

Orientations are enumerated as a binary counter ``code = 0 .. 2^m - 1`` over the
sorted edge list; bit ``j`` of ``code`` reverses edge ``j`` (see
:class:`~majdom.digraph.Orientation`). "First attaining orientation" always
means smallest code.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .digraph import Digraph, Graph, Orientation, cover_mask, max_out_degree, out_degree
from .errors import FamilyError, LimitExceeded, NotAMODSError
from .families import bipartite, doublestar, parse_params, path, star, wheel
from .solver import (
    SolveResult,
    gamma_m_plus,
    gamma_m_undirected,
    has_cover_within,
    majority_threshold,
    min_cover_size,
    undirected_closed_masks,
)
from .vertexset import SetLike, VertexSet, as_mask

DEFAULT_EDGE_LIMIT = 24


def _check_edges(G: Graph, limit: int) -> None:
    if G.m > limit:
        raise LimitExceeded("edge count for orientation enumeration", G.m, limit)


def enumerate_orientations(G: Graph, limit: int = DEFAULT_EDGE_LIMIT) -> Iterator[Orientation]:
    _check_edges(G, limit)
    for code in range(1 << G.m):
        yield Orientation(G, code)


def _closed_mask_stream(G: Graph) -> Iterator[tuple[int, tuple[int, ...]]]:
    """``(code, closed out-masks)`` for every orientation, in code order.

    The edge list is split in two halves; each half's contribution to the
    out-masks is tabulated once, so one orientation costs one OR per vertex.
    """
    n, edges = G.n, G.edge_list
    m = len(edges)
    h = m // 2

    def table(part, offset):
        rows = []
        for bits in range(1 << len(part)):
            out = [0] * n
            for j, (u, v) in enumerate(part):
                if bits >> j & 1:
                    out[v] |= 1 << u
                else:
                    out[u] |= 1 << v
            rows.append(out)
        return rows

    low = table(edges[:h], 0)
    high = table(edges[h:], h)
    for row in low:
        for v in range(n):
            row[v] |= 1 << v
    low_mask = (1 << h) - 1
    for hi_bits, hi_row in enumerate(high):
        base = hi_bits << h
        for lo_bits, lo_row in enumerate(low):
            yield base | lo_bits, tuple([a | b for a, b in zip(lo_row, hi_row)])


@dataclass(frozen=True)
class OrientationSpectrum:
    base: Graph
    histogram: dict[int, int]
    min_value: int
    max_value: int
    min_witness: Orientation
    max_witness: Orientation

    @property
    def values(self) -> list[int]:
        """Sorted multiset of values over all orientations."""
        return [v for v in sorted(self.histogram) for _ in range(self.histogram[v])]

    @property
    def total(self) -> int:
        return sum(self.histogram.values())

    @property
    def attained(self) -> set[int]:
        return set(self.histogram)


def spectrum(G: Graph, limit: int = DEFAULT_EDGE_LIMIT) -> OrientationSpectrum:
    """Exact value for every orientation; witnesses are the first orientations attaining min and max."""
    _check_edges(G, limit)
    t = majority_threshold(G.n)
    hist: Counter = Counter()
    lo = hi = None
    lo_code = hi_code = 0
    for code, closed in _closed_mask_stream(G):
        value = min_cover_size(closed, t)
        hist[value] += 1
        if lo is None or value < lo or (value == lo and code < lo_code):
            lo, lo_code = value, code
        if hi is None or value > hi or (value == hi and code < hi_code):
            hi, hi_code = value, code
    return OrientationSpectrum(G, dict(sorted(hist.items())), lo, hi, Orientation(G, lo_code), Orientation(G, hi_code))


def upper_orientable(G: Graph, limit: int = DEFAULT_EDGE_LIMIT) -> tuple[int, Orientation]:
    """Exhaustive maximum over orientations.

    An orientation is only solved in full when it has no MODS within the running
    maximum; otherwise it cannot raise the maximum and is skipped.
    """
    _check_edges(G, limit)
    t = majority_threshold(G.n)
    best, best_code = 0, 0
    for code, closed in _closed_mask_stream(G):
        if best and has_cover_within(closed, t, best):
            continue
        value = min_cover_size(closed, t)
        if value > best or (value == best and code < best_code):
            best, best_code = value, code
    return best, Orientation(G, best_code)


def dom_via_theorem(G: Graph) -> SolveResult:
    """Lower orientable number through the identity with the undirected set majority domination number."""
    return gamma_m_undirected(G)


def check_ivt(G: Graph, limit: int = DEFAULT_EDGE_LIMIT) -> tuple[bool, set[int]]:
    sp = spectrum(G, limit)
    values = sp.attained
    return values == set(range(sp.min_value, sp.max_value + 1)), values


def orient_from_majority_set(G: Graph, M: SetLike, seed: int = 0) -> Orientation:
    """Edges leaving M point away from M; the remaining edges take a seeded coin flip each (edge-list order)."""
    mask = as_mask(G.n, M)
    covered = cover_mask(undirected_closed_masks(G), mask).bit_count()
    if covered < majority_threshold(G.n):
        raise NotAMODSError(f"{VertexSet(G.n, mask)!r} dominates {covered} < {majority_threshold(G.n)} vertices")
    rng = random.Random(seed)
    code = 0
    for j, (u, v) in enumerate(G.edge_list):
        u_in, v_in = mask >> u & 1, mask >> v & 1
        if u_in != v_in:
            if v_in:
                code |= 1 << j
        elif rng.random() < 0.5:
            code |= 1 << j
    return Orientation(G, code)


# explicit constructions -------------------------------------------------------

def _path_dom(n: int) -> Digraph:
    # 1-based v_i = vertex i-1; d+(v_i) = 2 exactly for interior i = 2 (mod 3)
    if n < 2:
        raise FamilyError("path-dom needs n >= 2")
    arcs = []
    for i in range(1, n):
        if i % 3 == 1:
            arcs.append((i, i - 1))
        else:
            arcs.append((i - 1, i))
    D = Digraph(n, arcs)
    for v in range(n):
        interior = 0 < v < n - 1
        _ensure((out_degree(D, v) == 2) == (interior and (v + 1) % 3 == 2), f"path-dom: d+({v}) wrong")
    return D


def _star_sink(n: int) -> Digraph:
    if n < 3:
        raise FamilyError("star-sink needs n >= 3")
    D = Orientation.from_arcs(star(n), [(v, 0) for v in range(1, n)]).to_digraph()
    _ensure(out_degree(D, 0) == 0, "star-sink: center must be a sink")
    return D


def _doublestar_stem(a: int, b: int) -> Digraph:
    # u is the stem of smaller degree; u -> v, every leaf points at its stem
    G = doublestar(a, b)
    u, v = (0, 1) if a <= b else (1, 0)
    arcs = [(u, v)] + [(x, y) for x, y in G.edge_list if {x, y} != {0, 1} for x, y in [(max(x, y), min(x, y))]]
    D = Orientation.from_arcs(G, arcs).to_digraph()
    _ensure(out_degree(D, u) == 1 and out_degree(D, v) == 0, "doublestar-stem: stem degrees wrong")
    return D


def _doublestar_source(a: int, b: int) -> Digraph:
    # stems point at all their leaves; the stem edge is 0 -> 1
    G = doublestar(a, b)
    D = Orientation(G, 0).to_digraph()
    _ensure(D.in_masks[0] == 0 and D.in_masks[1] == 1, "doublestar-source: stems must only receive the stem arc")
    return D


def _wheel_sink_hub(n: int) -> Digraph:
    G = wheel(n)
    rim = n - 1
    arcs = [(i, 0) for i in range(1, n)] + [(i, i % rim + 1) for i in range(1, n)]
    D = Orientation.from_arcs(G, arcs).to_digraph()
    _ensure(out_degree(D, 0) == 0 and all(D.in_masks[x].bit_count() == 1 for x in range(1, n)),
            "wheel-sink-hub: hub must be a sink and the rim a directed cycle")
    return D


def _wheel_source_hub(n: int) -> Digraph:
    G = wheel(n)
    rim = n - 1
    arcs = [(0, i) for i in range(1, n)] + [(i, i % rim + 1) for i in range(1, n)]
    D = Orientation.from_arcs(G, arcs).to_digraph()
    _ensure(D.in_masks[0] == 0, "wheel-source-hub: hub must be a source")
    return D


def _bipartite_sink(r: int, s: int) -> Digraph:
    G = bipartite(r, s)
    D = Orientation.from_arcs(G, [(v, u) for u, v in G.edge_list]).to_digraph()
    _ensure(all(out_degree(D, u) == 0 for u in range(r)), "bipartite-sink: first part must be sinks")
    return D


def _bipartite_source(r: int, s: int) -> Digraph:
    # vertex 0 is a source, everything else sinks into part one
    G = bipartite(r, s)
    arcs = [(u, v) if u == 0 else (v, u) for u, v in G.edge_list]
    D = Orientation.from_arcs(G, arcs).to_digraph()
    _ensure(D.in_masks[0] == 0, "bipartite-source: vertex 0 must be a source")
    return D


def _bipartite_two_out(r: int, s: int) -> Digraph:
    # u_i (i = 1..r) -> v_j for j = 2i-1, 2i taken in 1..s cyclically; all other edges point back at part one
    if s < 2:
        raise FamilyError("bipartite-two-out needs s >= 2")
    G = bipartite(r, s)
    heads = {}
    for i in range(1, r + 1):
        j1 = (2 * i - 2) % s + 1
        j2 = (2 * i - 1) % s + 1
        heads[i - 1] = {r + j1 - 1, r + j2 - 1}
    arcs = [(u, v) if v in heads[u] else (v, u) for u, v in G.edge_list]
    D = Orientation.from_arcs(G, arcs).to_digraph()
    _ensure(all(out_degree(D, u) == 2 for u in range(r)), "bipartite-two-out: every u_i needs out-degree 2")
    return D


def _ensure(cond: bool, message: str) -> None:
    if not cond:
        raise RuntimeError(f"construction invariant broken: {message}")


NAMED_ORIENTATIONS = {
    "path-dom": (_path_dom, (int,)),
    "star-sink": (_star_sink, (int,)),
    "doublestar-stem": (_doublestar_stem, (int, int)),
    "doublestar-source": (_doublestar_source, (int, int)),
    "wheel-sink-hub": (_wheel_sink_hub, (int,)),
    "wheel-source-hub": (_wheel_source_hub, (int,)),
    "bipartite-sink": (_bipartite_sink, (int, int)),
    "bipartite-source": (_bipartite_source, (int, int)),
    "bipartite-two-out": (_bipartite_two_out, (int, int)),
}


def construct_named_orientation(spec: str) -> Digraph:
    """Build one of the explicit orientations, e.g. ``wheel-sink-hub:7`` or ``bipartite-two-out:4,5``."""
    name, sep, rest = spec.partition(":")
    if not sep or name not in NAMED_ORIENTATIONS:
        raise FamilyError(f"unknown construction {spec!r}; known: {', '.join(NAMED_ORIENTATIONS)}")
    fn, types = NAMED_ORIENTATIONS[name]
    return fn(*parse_params(name, rest, types))


# closed forms and K_{r,s} ---------------------------------------------------------

def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def dom1_condition(r: int, s: int) -> bool:
    """Published condition for the upper orientable number of K_{r,s} (r <= s) to equal 1."""
    return r + s <= 4 or (r, s) in {(2, 3), (2, 4), (3, 3)}


@dataclass(frozen=True)
class Dom1Check:
    r: int
    s: int
    computed: int
    predicted_one: bool

    @property
    def agrees(self) -> bool:
        return (self.computed == 1) == self.predicted_one


def dom1_bipartite_details(r: int, s: int, limit: int = DEFAULT_EDGE_LIMIT) -> Dom1Check:
    if not 1 <= r <= s:
        raise ValueError("need 1 <= r <= s")
    value, _ = upper_orientable(bipartite(r, s), limit)
    return Dom1Check(r, s, value, dom1_condition(r, s))


def check_dom1_bipartite(r: int, s: int, limit: int = DEFAULT_EDGE_LIMIT) -> bool:
    return dom1_bipartite_details(r, s, limit).agrees


def conjectured_upper_bipartite(r: int, s: int) -> int:
    return 2 if s <= r + 2 else _ceil_div(s - r, 2)


@dataclass(frozen=True)
class ConjectureVerdict:
    r: int
    s: int
    computed_DOM: int
    conjectured: int | None
    applicable: bool
    method: str = "exhaustive"
    witness: Orientation | None = field(default=None, compare=False)

    @property
    def agrees(self) -> bool | None:
        return self.computed_DOM == self.conjectured if self.applicable else None


def check_conjecture(r: int, s: int, limit: int = DEFAULT_EDGE_LIMIT) -> ConjectureVerdict:
    """Exhaustive upper orientable number of K_{r,s} next to the conjectured value. Reports only."""
    if not 1 <= r <= s:
        raise ValueError("need 1 <= r <= s")
    value, witness = upper_orientable(bipartite(r, s), limit)
    if value == 1:
        return ConjectureVerdict(r, s, value, None, False, witness=witness)
    return ConjectureVerdict(r, s, value, conjectured_upper_bipartite(r, s), True, witness=witness)


def closed_forms(family: str, *params: int) -> dict[str, int]:
    """Published closed-form lower/upper orientable values for a family instance (only those that apply)."""
    if family == "complete":
        (n,) = params
        return {"dom": 1, "DOM": 1}
    if family in ("path", "cycle"):
        (n,) = params
        out = {"dom": _ceil_div(n, 6)}
        if n >= 3:
            out["DOM"] = _ceil_div(n, 4)
        return out
    if family == "star":
        (n,) = params
        return {"DOM": (n - 1) // 2} if n >= 3 else {}
    if family == "doublestar":
        a, b = params
        n = a + b + 2
        out = {"dom": 1}
        if n >= 5:
            out["DOM"] = 2 + max(0, _ceil_div(n - 8, 2))
        return out
    if family == "wheel":
        (n,) = params
        return {"dom": 1, "DOM": _ceil_div(n - 2, 4)}
    if family == "bipartite":
        r, s = sorted(params)
        out = {"dom": 1}
        if dom1_condition(r, s):
            out["DOM"] = 1
        return out
    raise ValueError(f"no closed forms for {family!r}")


def small_graph_upper(G: Graph) -> int | None:
    """Every graph with at most four vertices and at least one edge has upper orientable number 1."""
    return 1 if G.n <= 4 and G.m > 0 else None


def tournament_max_outdegree_ok(D: Digraph) -> bool:
    """Every tournament has a vertex with out-degree at least ceil((n-1)/2)."""
    return max_out_degree(D) >= _ceil_div(D.n - 1, 2)
