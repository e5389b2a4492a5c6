"""How the majority out-domination number moves under single-arc and single-vertex edits."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Union

from .digraph import (
    Arc,
    Digraph,
    add_arc,
    closed_out_neighborhood,
    out_degree,
    private_out_neighbors,
    remove_arc,
    remove_vertex,
    reverse_arc,
)
from .errors import MissingArcError
from .solver import enumerate_minimum_mods, gamma_m_plus, majority_threshold
from .vertexset import VertexSet

Kind = Literal["arc-removal", "vertex-removal", "arc-addition", "arc-reversal"]
KINDS: tuple[str, ...] = ("arc-removal", "vertex-removal", "arc-addition", "arc-reversal")


@dataclass(frozen=True)
class PerturbationRecord:
    kind: str
    target: Union[Arc, int]
    before: int
    after: int
    bound_low: int
    bound_high: int
    within_bounds: bool
    out_degree: int | None = None  # d+(v) in D, vertex removal only


def perturb(D: Digraph, kind: str, target) -> PerturbationRecord:
    k = gamma_m_plus(D).value
    d = None
    if kind == "arc-removal":
        after = gamma_m_plus(remove_arc(D, tuple(target))).value
        low, high = k, k + 1
    elif kind == "vertex-removal":
        d = out_degree(D, target)
        after = gamma_m_plus(remove_vertex(D, target)[0]).value
        low, high = k - 1, max(k, k - 1 + d)
    elif kind == "arc-addition":
        after = gamma_m_plus(add_arc(D, tuple(target))).value
        low, high = k - 1, k
    elif kind == "arc-reversal":
        after = gamma_m_plus(reverse_arc(D, tuple(target))).value
        low, high = k - 1, k + 1
    else:
        raise ValueError(f"unknown perturbation kind {kind!r}; expected one of {', '.join(KINDS)}")
    target = tuple(target) if kind != "vertex-removal" else target
    return PerturbationRecord(kind, target, k, after, low, high, low <= after <= high, d)


def targets(D: Digraph, kind: str) -> Iterator:
    """Every valid target of ``kind`` in ascending order."""
    if kind == "arc-removal":
        yield from D.arc_list()
    elif kind == "vertex-removal":
        if D.n >= 2:
            yield from range(D.n)
    elif kind == "arc-addition":
        for u in range(D.n):
            for v in range(D.n):
                if u != v and not D.has_arc(u, v):
                    yield (u, v)
    elif kind == "arc-reversal":
        for u, v in D.arc_list():
            if not D.has_arc(v, u):
                yield (u, v)
    else:
        raise ValueError(f"unknown perturbation kind {kind!r}")


def perturb_all(D: Digraph, kinds=KINDS) -> list[PerturbationRecord]:
    return [perturb(D, kind, tgt) for kind in kinds for tgt in targets(D, kind)]


def _require_arc(D: Digraph, e: Arc) -> tuple[int, int]:
    u, v = e
    if not D.has_arc(u, v):
        raise MissingArcError(f"arc ({u}, {v}) not in digraph")
    return u, v


def is_critical_arc_direct(D: Digraph, e: Arc) -> bool:
    """Removing ``e`` raises the number by exactly one."""
    _require_arc(D, e)
    return gamma_m_plus(remove_arc(D, e)).value == gamma_m_plus(D).value + 1


def is_critical_arc_characterized(D: Digraph, e: Arc, minimum_sets: list[VertexSet] | None = None) -> bool:
    """For every minimum MODS S: u in S, v a private out-neighbour of u, and S covers exactly the threshold."""
    u, v = _require_arc(D, e)
    if minimum_sets is None:
        minimum_sets = enumerate_minimum_mods(D)
    t = majority_threshold(D.n)
    for S in minimum_sets:
        if u not in S:
            return False
        if v not in private_out_neighbors(D, S, u):
            return False
        if len(closed_out_neighborhood(D, S)) != t:
            return False
    return True


@dataclass(frozen=True)
class CriticalVerdict:
    arc: Arc
    direct: bool
    characterized: bool

    @property
    def agree(self) -> bool:
        return self.direct == self.characterized


def critical_arcs(D: Digraph) -> list[CriticalVerdict]:
    minimum_sets = enumerate_minimum_mods(D)
    return [
        CriticalVerdict(e, is_critical_arc_direct(D, e), is_critical_arc_characterized(D, e, minimum_sets))
        for e in D.arc_list()
    ]
