"""Generators for the named graph and digraph families, plus seeded random instances.

Random instances use ``random.Random(seed)`` (CPython's MT19937 Mersenne Twister,
which produces the same stream for the same integer seed on every platform).
Candidate pairs are visited in ascending lexicographic order and each one draws a
single ``rng.random()``; the pair is kept iff the draw is ``< p``.
"""
from __future__ import annotations

import random
from typing import Union

from .digraph import Digraph, Graph, Orientation
from .errors import FamilyError

Instance = Union[Digraph, Graph]


def _need(cond: bool, what: str) -> None:
    if not cond:
        raise FamilyError(what)


def dipath(n: int) -> Digraph:
    _need(n >= 1, "dipath needs n >= 1")
    return Digraph(n, [(i, i + 1) for i in range(n - 1)])


def dicycle(n: int) -> Digraph:
    _need(n >= 3, "dicycle needs n >= 3")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def figure1(k: int) -> Digraph:
    """u=0, v=1, s-block 2..k+1 (arcs to u and v), t-block k+2..2k+3 (arcs to v)."""
    _need(k >= 3, "figure1 needs k >= 3")
    s_block = range(2, k + 2)
    t_block = range(k + 2, 2 * k + 4)
    arcs = [(s, 0) for s in s_block] + [(s, 1) for s in s_block] + [(t, 1) for t in t_block]
    return Digraph(2 * k + 4, arcs)


def empty(n: int) -> Digraph:
    _need(n >= 1, "empty needs n >= 1")
    return Digraph(n)


def distar(n: int) -> Digraph:
    """Vertex 0 with an arc to every other vertex."""
    _need(n >= 1, "distar needs n >= 1")
    return Digraph(n, [(0, v) for v in range(1, n)])


def dicomplete(n: int) -> Digraph:
    """Complete symmetric digraph."""
    _need(n >= 1, "dicomplete needs n >= 1")
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    _need(n >= 2, "star needs n >= 2")
    return Graph(n, [(0, v) for v in range(1, n)])


def doublestar(a: int, b: int) -> Graph:
    """Stems 0 and 1; stem 0 carries leaves 2..a+1, stem 1 carries leaves a+2..a+b+1."""
    _need(a >= 1 and b >= 1, "doublestar needs a >= 1 and b >= 1")
    edges = [(0, 1)] + [(0, 2 + i) for i in range(a)] + [(1, 2 + a + j) for j in range(b)]
    return Graph(a + b + 2, edges)


def wheel(n: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..n-1."""
    _need(n >= 4, "wheel needs n >= 4")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)] + [(i, i % rim + 1) for i in range(1, n)]
    return Graph(n, edges)


def bipartite(r: int, s: int) -> Graph:
    """K_{r,s} with parts 0..r-1 and r..r+s-1."""
    _need(r >= 1 and s >= 1, "bipartite needs r >= 1 and s >= 1")
    return Graph(r + s, [(u, r + v) for u in range(r) for v in range(s)])


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    _need(n >= 1, "random digraph needs n >= 1")
    _need(0.0 <= p <= 1.0, f"probability {p} outside [0, 1]")
    rng = random.Random(seed)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return Digraph(n, arcs)


def random_graph(n: int, p: float, seed: int) -> Graph:
    _need(n >= 1, "random graph needs n >= 1")
    _need(0.0 <= p <= 1.0, f"probability {p} outside [0, 1]")
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_orientation(G: Graph, seed: int) -> Orientation:
    rng = random.Random(seed)
    code = 0
    for j in range(G.m):
        if rng.random() < 0.5:
            code |= 1 << j
    return Orientation(G, code)


# name -> (constructor, parameter types)
FAMILIES = {
    "dipath": (dipath, (int,)),
    "dicycle": (dicycle, (int,)),
    "figure1": (figure1, (int,)),
    "empty": (empty, (int,)),
    "distar": (distar, (int,)),
    "dicomplete": (dicomplete, (int,)),
    "path": (path, (int,)),
    "cycle": (cycle, (int,)),
    "complete": (complete, (int,)),
    "star": (star, (int,)),
    "doublestar": (doublestar, (int, int)),
    "wheel": (wheel, (int,)),
    "bipartite": (bipartite, (int, int)),
    "randdigraph": (random_digraph, (int, float, int)),
    "randgraph": (random_graph, (int, float, int)),
}


def parse_params(name: str, text: str, types) -> list:
    parts = [p.strip() for p in text.split(",")] if text.strip() else []
    if len(parts) != len(types):
        raise FamilyError(f"{name} takes {len(types)} parameter(s), got {len(parts)}")
    try:
        return [t(p) for t, p in zip(types, parts)]
    except ValueError as exc:
        raise FamilyError(f"bad parameter for {name}: {exc}") from None


def make_family(spec: str) -> Instance:
    """Build an instance from a spec string such as ``dipath:8`` or ``doublestar:3,4``."""
    name, sep, rest = spec.partition(":")
    if not sep or name not in FAMILIES:
        raise FamilyError(f"unknown family spec {spec!r}; known families: {', '.join(FAMILIES)}")
    fn, types = FAMILIES[name]
    return fn(*parse_params(name, rest, types))


def is_family_spec(text: str) -> bool:
    return text.partition(":")[0] in FAMILIES
