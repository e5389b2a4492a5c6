"""Exact solvers for majority out-domination, out-domination and undirected majority domination.

All three problems are the same covering question: given the closed
neighbourhood mask of every vertex, find the fewest vertices whose union covers
at least ``t`` vertices. ``t = ceil(n/2)`` for the majority variants and
``t = n`` for plain out-domination. The solvers return the lexicographically
smallest optimal set (compare ascending vertex sequences), so the
branch-and-bound and the plain enumeration agree exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from .digraph import Digraph, Graph, cover_mask
from .errors import NotAMODSError
from .vertexset import SetLike, VertexSet, as_mask, iter_bits

Method = Literal["exact", "oracle"]


def majority_threshold(n: int) -> int:
    """Smallest integer ``>= n/2``. A set is majority out-dominating iff it covers this many vertices."""
    if n < 1:
        raise ValueError("majority threshold needs n >= 1")
    return (n + 1) // 2


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: VertexSet
    method: str
    explored: int = 0


# covering kernels on closed-neighbourhood masks --------------------------

def greedy_cover(closed: tuple[int, ...], t: int) -> int:
    """Pick the vertex with the largest number of newly covered vertices (lowest label on ties) until ``t`` are covered."""
    chosen = covered = 0
    while covered.bit_count() < t:
        best_v, best_gain = -1, 0
        for v, c in enumerate(closed):
            g = (c & ~covered).bit_count()
            if g > best_gain:
                best_v, best_gain = v, g
        if best_v < 0:
            raise ValueError(f"threshold {t} is not reachable")
        chosen |= 1 << best_v
        covered |= closed[best_v]
    return chosen


def branch_and_bound(closed: tuple[int, ...], t: int, limit: int | None = None) -> tuple[int | None, int]:
    """Lexicographically first minimum-cardinality cover of at least ``t`` vertices.

    Vertices are added in ascending order (the search tree is the tree of
    ascending sequences, visited in lexicographic order). A node is cut when
    the ``room`` largest marginal gains of the remaining vertices cannot make
    up the deficit; coverage is submodular, so this bound is admissible and it
    dominates ``ceil(deficit / (maxdeg + 1))``. Vertices with zero marginal
    gain are skipped since no minimum cover contains a redundant vertex.

    Only covers with at most ``limit`` vertices are reported (default: the
    greedy size). Returns ``(mask or None, explored node count)``.
    """
    n = len(closed)
    if t <= 0:
        return 0, 1
    if limit is None:
        limit = greedy_cover(closed, t).bit_count()
    best = None
    explored = 0

    def visit(start: int, chosen: int, size: int, covered: int) -> None:
        nonlocal best, limit, explored
        explored += 1
        need = t - covered.bit_count()
        room = limit - size
        if room <= 0:
            return
        gains = [(closed[j] & ~covered).bit_count() for j in range(start, n)]
        if room == 1:
            for j, g in enumerate(gains):
                if g >= need:
                    best = chosen | 1 << (start + j)
                    limit = size
                    return
            return
        top = sorted(gains, reverse=True)
        if sum(top[:room]) < need:
            return
        for j in range(start, n):
            if limit - size <= 0:
                return
            g = gains[j - start]
            if g == 0:
                continue
            if g >= need:
                best = chosen | 1 << j
                limit = size
                return
            visit(j + 1, chosen | 1 << j, size + 1, covered | closed[j])

    visit(0, 0, 0, 0)
    return best, explored


def min_cover_size(closed: tuple[int, ...], t: int) -> int:
    """Value-only fast path for bulk solving.

    Settles the common case without search: when the fewest largest
    neighbourhoods that could reach ``t`` already match the greedy size.
    """
    sizes = sorted((c.bit_count() for c in closed), reverse=True)
    if sizes[0] >= t:
        return 1
    lower = acc = 0
    for sz in sizes:
        acc += sz
        lower += 1
        if acc >= t:
            break
    upper = greedy_cover(closed, t).bit_count()
    if lower == upper:
        return upper
    mask, _ = branch_and_bound(closed, t, limit=upper - 1)
    return upper if mask is None else mask.bit_count()


def has_cover_within(closed: tuple[int, ...], t: int, k: int) -> bool:
    """Is there a set of at most ``k`` vertices covering ``t`` of them?"""
    if t <= 0:
        return True
    if k <= 0:
        return False
    if max(c.bit_count() for c in closed) >= t:
        return True
    mask, _ = branch_and_bound(closed, t, limit=k)
    return mask is not None


def oracle_cover(closed: tuple[int, ...], t: int) -> tuple[int, int]:
    """Plain enumeration by size, lexicographic within a size; first hit wins."""
    n = len(closed)
    explored = 0
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            explored += 1
            cover = 0
            for v in combo:
                cover |= closed[v]
            if cover.bit_count() >= t:
                mask = 0
                for v in combo:
                    mask |= 1 << v
                return mask, explored
    raise ValueError(f"threshold {t} is not reachable")


def _solve(closed: tuple[int, ...], t: int, n: int, method: str) -> SolveResult:
    if method == "exact":
        mask, explored = branch_and_bound(closed, t)
    elif method == "oracle":
        mask, explored = oracle_cover(closed, t)
    else:
        raise ValueError(f"unknown method {method!r}; expected 'exact' or 'oracle'")
    return SolveResult(mask.bit_count(), VertexSet(n, mask), method, explored)


def undirected_closed_masks(G: Graph) -> tuple[int, ...]:
    return tuple(a | (1 << v) for v, a in enumerate(G.adj_masks))


# public solvers -----------------------------------------------------------

def is_mods(D: Digraph, S: SetLike) -> bool:
    mask = as_mask(D.n, S)
    return cover_mask(D.closed_out_masks, mask).bit_count() >= majority_threshold(D.n)


def gamma_m_plus(D: Digraph, method: Method = "exact") -> SolveResult:
    """Set majority out-domination number with its lexicographically smallest witness."""
    return _solve(D.closed_out_masks, majority_threshold(D.n), D.n, method)


def gamma_plus(D: Digraph, method: Method = "exact") -> SolveResult:
    """Out-domination number: fewest vertices whose closed out-neighbourhood is everything."""
    return _solve(D.closed_out_masks, D.n, D.n, method)


def gamma_m_undirected(G: Graph, method: Method = "exact") -> SolveResult:
    return _solve(undirected_closed_masks(G), majority_threshold(G.n), G.n, method)


def greedy_mods(D: Digraph) -> SolveResult:
    mask = greedy_cover(D.closed_out_masks, majority_threshold(D.n))
    return SolveResult(mask.bit_count(), VertexSet(D.n, mask), "greedy", mask.bit_count())


# minimality -----------------------------------------------------------------

def _require_mods(D: Digraph, S: SetLike) -> tuple[int, int, int]:
    mask = as_mask(D.n, S)
    covered = cover_mask(D.closed_out_masks, mask).bit_count()
    t = majority_threshold(D.n)
    if covered < t:
        raise NotAMODSError(f"{VertexSet(D.n, mask)!r} covers {covered} < {t} vertices")
    return mask, covered, t


def is_minimal_mods_direct(D: Digraph, S: SetLike) -> bool:
    """No single-vertex deletion keeps S majority out-dominating (enough, as the property is monotone)."""
    mask, _, t = _require_mods(D, S)
    closed = D.closed_out_masks
    return all(cover_mask(closed, mask & ~(1 << v)).bit_count() < t for v in iter_bits(mask))


def _private_count(D: Digraph, mask: int, u: int) -> int:
    count = 0
    for w in iter_bits(D.out_masks[u] & ~mask):
        if D.in_masks[w] & mask == 1 << u:
            count += 1
    return count


def is_minimal_mods_characterized(D: Digraph, S: SetLike) -> bool:
    """Minimality via the private-neighbour characterization as published.

    (i) ``|N+[S]| > t`` and every ``v`` has ``|pn+[v,S]| > |N+[S]| - t``, or
    (ii) ``|N+[S]| = t`` and every ``v`` is isolated in ``D[S]`` (no arc to or
    from another member) or has a private out-neighbour.

    This is *not* always equivalent to :func:`is_minimal_mods_direct`: it
    assumes removing ``v`` always uncovers ``v`` itself, which fails when ``v``
    has an in-neighbour inside ``S``. See :func:`is_minimal_mods_by_loss`.
    """
    mask, covered, t = _require_mods(D, S)
    if covered > t:
        excess = covered - t
        return all(_private_count(D, mask, v) + 1 > excess for v in iter_bits(mask))
    for v in iter_bits(mask):
        others = mask & ~(1 << v)
        isolate = not (D.out_masks[v] & others) and not (D.in_masks[v] & others)
        if not isolate and _private_count(D, mask, v) == 0:
            return False
    return True


def coverage_loss(D: Digraph, S: SetLike, v: int) -> int:
    """``|N+[S]| - |N+[S - v]|``: the private out-neighbours of v, plus v itself when no other member points at it."""
    mask = as_mask(D.n, S)
    if not (0 <= v < D.n and mask >> v & 1):
        raise ValueError(f"vertex {v} is not a member of S")
    return _loss(D, mask, v)


def _loss(D: Digraph, mask: int, v: int) -> int:
    return _private_count(D, mask, v) + (0 if D.in_masks[v] & mask else 1)


def is_minimal_mods_by_loss(D: Digraph, S: SetLike) -> bool:
    """Exact minimality test: every member's coverage loss exceeds the surplus over the threshold."""
    mask, covered, t = _require_mods(D, S)
    excess = covered - t
    return all(_loss(D, mask, v) > excess for v in iter_bits(mask))


@dataclass(frozen=True)
class MinimalMODSList:
    sets: list[VertexSet] = field(default_factory=list)
    truncated: bool = False

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def enumerate_minimal_mods(D: Digraph, cap: int = 10**6) -> MinimalMODSList:
    """All minimal MODSs in lexicographic order, at most ``cap`` of them.

    Depth-first over ascending sequences; a prefix that is already a MODS is
    never extended, since its supersets cannot be minimal.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    n = D.n
    closed = D.closed_out_masks
    t = majority_threshold(n)
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] | closed[j]
    found: list[VertexSet] = []

    def minimal(mask: int) -> bool:
        return all(cover_mask(closed, mask & ~(1 << v)).bit_count() < t for v in iter_bits(mask))

    def visit(start: int, chosen: int, covered: int) -> bool:
        for j in range(start, n):
            nxt, cov = chosen | 1 << j, covered | closed[j]
            if cov.bit_count() >= t:
                if minimal(nxt):
                    found.append(VertexSet(n, nxt))
                    if len(found) > cap:
                        return False
            elif (cov | suffix[j + 1]).bit_count() >= t:
                if not visit(j + 1, nxt, cov):
                    return False
        return True

    complete = visit(0, 0, 0)
    return MinimalMODSList(found[:cap], not complete)


def enumerate_minimum_mods(D: Digraph) -> list[VertexSet]:
    """Every MODS of minimum cardinality, lexicographic order."""
    n = D.n
    closed = D.closed_out_masks
    t = majority_threshold(n)
    k = gamma_m_plus(D).value
    out: list[VertexSet] = []

    def visit(start: int, chosen: int, size: int, covered: int) -> None:
        need = t - covered.bit_count()
        if need <= 0:
            out.append(VertexSet(n, chosen))
            return
        room = k - size
        if room <= 0:
            return
        gains = sorted(((closed[j] & ~covered).bit_count() for j in range(start, n)), reverse=True)
        if sum(gains[:room]) < need:
            return
        for j in range(start, n):
            visit(j + 1, chosen | 1 << j, size + 1, covered | closed[j])

    visit(0, 0, 0, 0)
    return out
