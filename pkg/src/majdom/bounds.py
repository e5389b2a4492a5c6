"""Numeric evaluation of the published upper/lower bounds on the majority out-domination number."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .digraph import Digraph, max_out_degree
from .errors import LimitExceeded
from .solver import gamma_m_plus, gamma_plus, majority_threshold
from .vertexset import iter_bits

DEFAULT_DP_LIMIT = 18

Number = Union[int, Fraction, bool]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_limit(D: Digraph, limit: int) -> None:
    if D.n > limit:
        raise LimitExceeded("vertex count for subset DP", D.n, limit)


def longest_directed_path(D: Digraph, limit: int = DEFAULT_DP_LIMIT) -> tuple[int, list[int]]:
    """Longest path (arc count) with distinct vertices, by DP over (vertex subset, endpoint)."""
    _check_limit(D, limit)
    n, out = D.n, D.out_masks
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    best_mask, best_end = 1, 0
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        if mask.bit_count() > best_mask.bit_count():
            best_mask, best_end = mask, (e & -e).bit_length() - 1
        for v in iter_bits(e):
            for w in iter_bits(out[v] & ~mask):
                ends[mask | 1 << w] |= 1 << w
    # walk back from the best endpoint
    walk = [best_end]
    mask = best_mask
    while mask.bit_count() > 1:
        v = walk[-1]
        prev = mask & ~(1 << v)
        u = next(u for u in iter_bits(ends[prev]) if out[u] >> v & 1)
        walk.append(u)
        mask = prev
    walk.reverse()
    return len(walk) - 1, walk


def longest_directed_cycle(D: Digraph, limit: int = DEFAULT_DP_LIMIT) -> tuple[int, list[int] | None]:
    """Longest directed cycle length (opposite arcs form 2-cycles); ``(0, None)`` if acyclic.

    Paths are rooted at the smallest vertex of their vertex set so every cycle
    is counted from its minimum vertex exactly once.
    """
    _check_limit(D, limit)
    n, out = D.n, D.out_masks
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    best_len, best = 0, None
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        low = mask & -mask
        s = low.bit_length() - 1
        size = mask.bit_count()
        allowed = ~mask & ~((low << 1) - 1)
        for v in iter_bits(e):
            if size >= 2 and size > best_len and out[v] >> s & 1:
                best_len, best = size, (mask, v)
            for w in iter_bits(out[v] & allowed):
                ends[mask | 1 << w] |= 1 << w
    if best is None:
        return 0, None
    mask, v = best
    walk = [v]
    while mask.bit_count() > 1:
        v = walk[-1]
        prev = mask & ~(1 << v)
        u = next(u for u in iter_bits(ends[prev]) if out[u] >> v & 1)
        walk.append(u)
        mask = prev
    walk.reverse()
    return best_len, walk


@dataclass(frozen=True)
class BoundEntry:
    name: str
    relation: str  # "<=", ">=", "either" (lhs == 1 or lhs <= rhs), "iff" (lhs == rhs as booleans)
    lhs: Number
    rhs: Number
    holds: bool
    tight: bool
    applicable: bool = True
    note: str = ""

    @staticmethod
    def evaluate(relation: str, lhs: Number, rhs: Number) -> bool:
        if relation == "<=":
            return lhs <= rhs
        if relation == ">=":
            return lhs >= rhs
        if relation == "either":
            return lhs == 1 or lhs <= rhs
        if relation == "iff":
            return bool(lhs) == bool(rhs)
        raise ValueError(f"unknown relation {relation!r}")

    def recomputed_holds(self) -> bool:
        return True if not self.applicable else self.evaluate(self.relation, self.lhs, self.rhs)


def _entry(name, relation, lhs, rhs, applicable=True, note=""):
    if not applicable:
        return BoundEntry(name, relation, lhs, rhs, True, False, False, note or "not applicable")
    return BoundEntry(name, relation, lhs, rhs, BoundEntry.evaluate(relation, lhs, rhs), lhs == rhs, True, note)


@dataclass(frozen=True)
class BoundReport:
    n: int
    delta_plus: int
    gamma_m_plus: int
    gamma_plus: int
    l: int
    c: int
    entries: list[BoundEntry] = field(default_factory=list)

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    @property
    def all_hold(self) -> bool:
        return all(e.holds for e in self.entries)


BOUND_NAMES = (
    "hamiltonian_cycle",
    "longest_path",
    "longest_cycle",
    "half_out_domination",
    "degree_lower",
    "degree_upper",
    "degree_corollary",
    "equal_iff_full_degree",
    "unit_iff_degree",
)


def bound_report(D: Digraph, dp_limit: int = DEFAULT_DP_LIMIT) -> BoundReport:
    n = D.n
    t = majority_threshold(n)
    delta = max_out_degree(D)
    g = gamma_m_plus(D).value
    gp = gamma_plus(D).value
    l, _ = longest_directed_path(D, dp_limit)
    c, _ = longest_directed_cycle(D, dp_limit)

    entries = [
        _entry("hamiltonian_cycle", "<=", g, _ceil_div(n, 4), applicable=(c == n and n >= 2),
               note="" if c == n else "no hamiltonian cycle"),
        _entry("longest_path", "<=", g, _ceil_div(2 * n - l - 1, 4)),
        _entry("longest_cycle", "<=", g, _ceil_div(2 * n - c, 4) if c else 0, applicable=c >= 2,
               note="" if c else "acyclic"),
        _entry("half_out_domination", "<=", g, _ceil_div(gp, 2)),
        _entry("degree_lower", ">=", g, _ceil_div(n, 2 * (delta + 1))),
        _entry("degree_upper", "either", g, t - delta, note="unit" if g == 1 else "bound"),
        _entry("degree_corollary", "<=", g, Fraction(n - delta + 1, 2)),
        _entry("equal_iff_full_degree", "iff", g == gp, delta == n - 1),
        _entry("unit_iff_degree", "iff", g == 1, delta >= t - 1),
    ]
    return BoundReport(n, delta, g, gp, l, c, entries)
