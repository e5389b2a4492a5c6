import pytest

import naive
from majdom.digraph import Digraph
from majdom.errors import MissingArcError
from majdom.families import dicycle, dipath, make_family
from majdom.perturbation import (
    KINDS,
    critical_arcs,
    is_critical_arc_characterized,
    is_critical_arc_direct,
    perturb,
    perturb_all,
    targets,
)


def test_vertex_removal_dicycle4():
    r = perturb(dicycle(4), "vertex-removal", 0)
    assert (r.before, r.after, r.bound_low, r.bound_high, r.within_bounds) == (1, 1, 0, 1, True)
    assert r.out_degree == 1


def test_arc_removal_range():
    r = perturb(dicycle(4), "arc-removal", (0, 1))
    assert (r.bound_low, r.bound_high) == (1, 2)


def test_after_matches_naive():
    D = make_family("randdigraph:6,0.4,11")
    for r in perturb_all(D, ("arc-removal", "arc-reversal")):
        u, v = r.target
        arcs = [a for a in D.arc_list() if a != (u, v)]
        if r.kind == "arc-reversal":
            arcs.append((v, u))
        assert r.after == naive.gamma(D.n, arcs)[0]


def test_targets_cover_everything():
    D = dipath(4)
    assert len(list(targets(D, "arc-removal"))) == 3
    assert len(list(targets(D, "vertex-removal"))) == 4
    assert len(list(targets(D, "arc-addition"))) == 4 * 3 - 3
    assert len(perturb_all(D, KINDS)) == 3 + 4 + 9 + 3


def test_unknown_kind_and_missing_arc():
    with pytest.raises(ValueError):
        perturb(dipath(3), "arc-contraction", (0, 1))
    with pytest.raises(MissingArcError):
        perturb(dipath(3), "arc-removal", (1, 0))


def test_vertex_removal_upper_bound_counterexample():
    # k = 1, d+(1) = 0, yet the three remaining isolated vertices need 2
    r = perturb(Digraph(4, [(0, 1)]), "vertex-removal", 1)
    assert (r.before, r.after, r.bound_high, r.within_bounds) == (1, 2, 1, False)


def test_no_critical_arcs_on_dipath4():
    assert not any(v.direct for v in critical_arcs(dipath(4)))


def test_two_arc_star_both_critical():
    D = Digraph(5, [(0, 1), (0, 2)])
    verdicts = critical_arcs(D)
    assert [(v.arc, v.direct, v.characterized) for v in verdicts] == [((0, 1), True, True), ((0, 2), True, True)]


@pytest.mark.parametrize("seed", range(10))
def test_critical_methods_agree(seed):
    D = make_family(f"randdigraph:7,0.3,{seed}")
    for e in D.arc_list():
        assert is_critical_arc_direct(D, e) == is_critical_arc_characterized(D, e)
