"""Immutable digraph / graph / orientation values and their primitives.

Vertices are the integers ``0..n-1``. Every edit returns a new value.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    DuplicateArcError,
    GraphError,
    LastVertexError,
    LoopError,
    MissingArcError,
    VertexRangeError,
)
from .vertexset import SetLike, VertexSet, as_mask, iter_bits

Arc = tuple[int, int]


class Digraph:
    """Finite digraph without loops or parallel arcs; opposite arcs are allowed."""

    __slots__ = ("n", "out_masks", "in_masks", "__dict__")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 1:
            raise GraphError("a digraph needs at least one vertex")
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"arc ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if out[u] >> v & 1:
                raise DuplicateArcError(f"arc ({u}, {v}) given twice")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.out_masks: tuple[int, ...] = tuple(out)
        self.in_masks: tuple[int, ...] = tuple(inn)

    @classmethod
    def from_out_masks(cls, out_masks: Iterable[int]) -> "Digraph":
        out_masks = list(out_masks)
        return cls(len(out_masks), ((u, v) for u, m in enumerate(out_masks) for v in iter_bits(m)))

    @cached_property
    def arcs(self) -> frozenset[Arc]:
        return frozenset(self.arc_list())

    def arc_list(self) -> list[Arc]:
        """Arcs in ascending lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.out_masks[u])]

    @property
    def m(self) -> int:
        return sum(m.bit_count() for m in self.out_masks)

    @cached_property
    def closed_out_masks(self) -> tuple[int, ...]:
        return tuple(m | (1 << v) for v, m in enumerate(self.out_masks))

    def has_arc(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.out_masks[u] >> v & 1)

    def _vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} outside 0..{self.n - 1}")
        return v

    def out_neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.out_masks[self._vertex(v)])

    def in_neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.in_masks[self._vertex(v)])

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.out_masks == other.out_masks

    def __hash__(self):
        return hash(("Digraph", self.out_masks))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arc_list()})"


class Graph:
    """Finite simple undirected graph."""

    __slots__ = ("n", "adj_masks", "__dict__")

    def __init__(self, n: int, edges: Iterable[Arc] = ()):
        if n < 1:
            raise GraphError("a graph needs at least one vertex")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise DuplicateArcError(f"edge {{{u}, {v}}} given twice")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj_masks: tuple[int, ...] = tuple(adj)

    @cached_property
    def edge_list(self) -> tuple[Arc, ...]:
        """Edges as ``(u, v)`` with ``u < v``, ascending lexicographically."""
        return tuple((u, v) for u in range(self.n) for v in iter_bits(self.adj_masks[u] >> (u + 1) << (u + 1)))

    @property
    def edges(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edge_list)

    @property
    def m(self) -> int:
        return len(self.edge_list)

    def degree(self, v: int) -> int:
        return self.adj_masks[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj_masks[v])

    def is_connected(self) -> bool:
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj_masks[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def symmetric_digraph(self) -> Digraph:
        """Digraph with both arcs ``uv`` and ``vu`` for each edge; closed out-neighborhoods equal closed neighborhoods."""
        return Digraph(self.n, [a for u, v in self.edge_list for a in ((u, v), (v, u))])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj_masks == other.adj_masks

    def __hash__(self):
        return hash(("Graph", self.adj_masks))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edge_list)})"


@dataclass(frozen=True)
class Orientation:
    """One direction per edge of ``base``.

    ``code`` bit ``j`` refers to ``base.edge_list[j]`` = ``(u, v)`` with ``u < v``:
    0 orients it ``u -> v``, 1 orients it ``v -> u``.
    """

    base: Graph
    code: int

    def __post_init__(self):
        if self.code < 0 or self.code >> self.base.m:
            raise GraphError(f"orientation code {self.code} out of range for {self.base.m} edges")

    @classmethod
    def from_arcs(cls, base: Graph, arcs: Iterable[Arc]) -> "Orientation":
        index = {e: j for j, e in enumerate(base.edge_list)}
        code = 0
        seen = set()
        for u, v in arcs:
            key = (min(u, v), max(u, v))
            if key not in index:
                raise MissingArcError(f"({u}, {v}) is not an edge of the base graph")
            if key in seen:
                raise DuplicateArcError(f"edge {{{u}, {v}}} oriented twice")
            seen.add(key)
            if u > v:
                code |= 1 << index[key]
        if len(seen) != base.m:
            raise GraphError("every edge needs exactly one direction")
        return cls(base, code)

    @property
    def direction(self) -> tuple[Arc, ...]:
        return tuple((v, u) if self.code >> j & 1 else (u, v) for j, (u, v) in enumerate(self.base.edge_list))

    def to_digraph(self) -> Digraph:
        return Digraph(self.base.n, self.direction)


# neighbourhood primitives -------------------------------------------------

def closed_out_neighborhood(D: Digraph, S: SetLike) -> VertexSet:
    """N+[S]: S together with every head of an arc leaving S."""
    mask = as_mask(D.n, S)
    cover = mask
    for u in iter_bits(mask):
        cover |= D.out_masks[u]
    return VertexSet(D.n, cover)


def cover_mask(closed: tuple[int, ...], mask: int) -> int:
    cover = 0
    for u in iter_bits(mask):
        cover |= closed[u]
    return cover


def private_out_neighbors(D: Digraph, S: SetLike, u: int) -> VertexSet:
    """pn+(u, S): vertices outside S whose only in-neighbor in S is u."""
    mask = as_mask(D.n, S)
    if not (0 <= u < D.n and mask >> u & 1):
        raise ValueError(f"vertex {u} is not a member of S")
    result = 0
    for w in iter_bits(D.out_masks[u] & ~mask):
        if D.in_masks[w] & mask == 1 << u:
            result |= 1 << w
    return VertexSet(D.n, result)


def out_degree(D: Digraph, v: int) -> int:
    return D.out_masks[D._vertex(v)].bit_count()


def in_degree(D: Digraph, v: int) -> int:
    return D.in_masks[D._vertex(v)].bit_count()


def max_out_degree(D: Digraph) -> int:
    return max(m.bit_count() for m in D.out_masks)


def induced_subdigraph(D: Digraph, X: SetLike) -> tuple[Digraph, tuple[int, ...]]:
    """D[X] relabeled to ``0..|X|-1`` in ascending order; second item maps new label -> old label."""
    mask = as_mask(D.n, X)
    if not mask:
        raise GraphError("induced subdigraph of an empty vertex set")
    old = tuple(iter_bits(mask))
    new = {v: i for i, v in enumerate(old)}
    arcs = [(new[u], new[v]) for u in old for v in iter_bits(D.out_masks[u] & mask)]
    return Digraph(len(old), arcs), old


# functional edits ----------------------------------------------------------

def remove_arc(D: Digraph, e: Arc) -> Digraph:
    u, v = e
    if not D.has_arc(u, v):
        raise MissingArcError(f"arc ({u}, {v}) not in digraph")
    return Digraph(D.n, (a for a in D.arc_list() if a != (u, v)))


def add_arc(D: Digraph, e: Arc) -> Digraph:
    u, v = e
    if u == v:
        raise LoopError(f"cannot add loop at {u}")
    if D.has_arc(u, v):
        raise DuplicateArcError(f"arc ({u}, {v}) already present")
    return Digraph(D.n, [*D.arc_list(), (u, v)])


def reverse_arc(D: Digraph, e: Arc) -> Digraph:
    u, v = e
    if not D.has_arc(u, v):
        raise MissingArcError(f"arc ({u}, {v}) not in digraph")
    if D.has_arc(v, u):
        raise DuplicateArcError(f"reversed arc ({v}, {u}) already present")
    return Digraph(D.n, [(v, u) if a == (u, v) else a for a in D.arc_list()])


def remove_vertex(D: Digraph, v: int) -> tuple[Digraph, dict[int, int]]:
    """Delete ``v``; labels above ``v`` shift down by one. Returns the old->new label map."""
    D._vertex(v)
    if D.n < 2:
        raise LastVertexError("cannot remove the only vertex")
    relabel = {w: (w if w < v else w - 1) for w in range(D.n) if w != v}
    arcs = [(relabel[a], relabel[b]) for a, b in D.arc_list() if v not in (a, b)]
    return Digraph(D.n - 1, arcs), relabel


def spanning_subdigraph(D: Digraph, keep: Iterable[Arc]) -> Digraph:
    keep = list(keep)
    for a in keep:
        if not D.has_arc(*a):
            raise MissingArcError(f"arc {a} not in digraph")
    return Digraph(D.n, keep)


def is_totally_disconnected(D: Digraph) -> bool:
    return not any(D.out_masks)


def iter_arcs(D: Digraph) -> Iterator[Arc]:
    return iter(D.arc_list())
