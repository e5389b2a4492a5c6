from fractions import Fraction

import pytest

import naive
from majdom.bounds import BOUND_NAMES, BoundEntry, bound_report, longest_directed_cycle, longest_directed_path
from majdom.digraph import Digraph
from majdom.errors import LimitExceeded
from majdom.families import dicycle, dipath, empty, make_family


def _walk_is_valid(D, walk, closed):
    pairs = list(zip(walk, walk[1:] + (walk[:1] if closed else [])))
    return len(set(walk)) == len(walk) and all(D.has_arc(u, v) for u, v in pairs)


def test_longest_path_and_cycle_families():
    assert longest_directed_path(dipath(5))[0] == 4
    assert longest_directed_cycle(dipath(5)) == (0, None)
    assert longest_directed_cycle(dicycle(6))[0] == 6


def test_two_cycles_count():
    D = Digraph(3, [(0, 1), (1, 0)])
    c, walk = longest_directed_cycle(D)
    assert c == 2 and _walk_is_valid(D, walk, True)


@pytest.mark.parametrize("seed", range(15))
def test_path_cycle_match_naive(seed):
    D = make_family(f"randdigraph:6,0.3,{seed}")
    l, pwalk = longest_directed_path(D)
    c, cwalk = longest_directed_cycle(D)
    assert l == naive.longest_path(D.n, D.arc_list())
    assert c == naive.longest_cycle(D.n, D.arc_list())
    assert len(pwalk) == l + 1 and _walk_is_valid(D, pwalk, False)
    if c:
        assert len(cwalk) == c and _walk_is_valid(D, cwalk, True)


def test_dp_limit():
    with pytest.raises(LimitExceeded):
        longest_directed_path(dipath(20), limit=18)


def test_dipath8_report():
    rep = bound_report(dipath(8))
    assert [e.name for e in rep.entries] == list(BOUND_NAMES)
    lp = rep.entry("longest_path")
    assert (lp.rhs, lp.holds, lp.tight) == (2, True, True)
    assert rep.all_hold


def test_dicycle8_cycle_bound_tight():
    e = bound_report(dicycle(8)).entry("longest_cycle")
    assert (e.rhs, e.applicable, e.tight) == (2, True, True)
    assert bound_report(dicycle(8)).entry("hamiltonian_cycle").tight


def test_acyclic_cycle_bound_not_applicable():
    e = bound_report(empty(5)).entry("longest_cycle")
    assert not e.applicable and e.holds


def test_p6_degree_upper_tight():
    e = bound_report(dipath(6)).entry("degree_upper")
    assert (e.lhs, e.rhs, e.tight, e.note) == (2, 2, True, "bound")


def test_corollary_rhs_is_exact_fraction():
    e = bound_report(dipath(5)).entry("degree_corollary")
    assert e.rhs == Fraction(5, 2)


def test_evaluate_relations():
    assert BoundEntry.evaluate("<=", 2, 3)
    assert not BoundEntry.evaluate(">=", 2, 3)
    assert BoundEntry.evaluate("iff", True, True)
    assert BoundEntry.evaluate("either", 1, 0)
    assert not BoundEntry.evaluate("either", 2, 1)


def test_doublestar_source_lower_bound_tight():
    from majdom.orientation import construct_named_orientation
    for spec in ("doublestar-source:1,1", "doublestar-source:2,3", "doublestar-source:4,4"):
        assert bound_report(construct_named_orientation(spec)).entry("degree_lower").tight
