import pytest

import naive
from majdom.errors import LimitExceeded
from majdom.families import bipartite, complete, cycle, make_family, path, star
from majdom.orientation import (
    NAMED_ORIENTATIONS,
    check_conjecture,
    check_dom1_bipartite,
    check_ivt,
    closed_forms,
    construct_named_orientation,
    dom1_condition,
    dom_via_theorem,
    enumerate_orientations,
    orient_from_majority_set,
    spectrum,
    upper_orientable,
)
from majdom.solver import gamma_m_plus


def test_cycle5_spectrum():
    sp = spectrum(cycle(5))
    assert (sp.min_value, sp.max_value, sp.total) == (1, 2, 32)
    assert sp.histogram == {1: 30, 2: 2}
    assert gamma_m_plus(sp.max_witness.to_digraph()).value == 2


@pytest.mark.parametrize("spec", ["path:5", "cycle:4", "star:5", "doublestar:1,2", "bipartite:2,3", "randgraph:6,0.5,3"])
def test_spectrum_matches_naive(spec):
    G = make_family(spec)
    values = naive.orientation_values(G.n, list(G.edge_list))
    sp = spectrum(G)
    assert sp.values == sorted(values)


def test_enumeration_count_and_limit():
    assert len(list(enumerate_orientations(path(4)))) == 8
    with pytest.raises(LimitExceeded):
        spectrum(complete(8), limit=24)


def test_dom_equals_undirected_gamma():
    for spec in ("path:7", "star:6", "wheel:6", "randgraph:7,0.4,2"):
        G = make_family(spec)
        assert spectrum(G).min_value == dom_via_theorem(G).value


def test_realizing_orientation():
    G = make_family("randgraph:7,0.5,9")
    M = dom_via_theorem(G).witness
    o = orient_from_majority_set(G, M, seed=3)
    assert gamma_m_plus(o.to_digraph()).value == len(M)


def test_ivt():
    ok, values = check_ivt(make_family("wheel:7"))
    assert ok and values == set(range(min(values), max(values) + 1))


def test_upper_orientable_star():
    assert upper_orientable(star(6))[0] == 2


def test_closed_forms_values():
    assert closed_forms("path", 7) == {"dom": 2, "DOM": 2}
    assert closed_forms("star", 6) == {"DOM": 2}
    assert closed_forms("wheel", 10) == {"dom": 1, "DOM": 2}
    with pytest.raises(ValueError):
        closed_forms("petersen", 10)


@pytest.mark.parametrize("name", sorted(NAMED_ORIENTATIONS))
def test_named_orientations_build(name):
    params = {1: "8", 2: "2,4"}
    for arity in (1, 2):
        try:
            D = construct_named_orientation(f"{name}:{params[arity]}")
        except ValueError:
            continue
        assert D.n >= 4
        return
    pytest.fail(f"{name} accepted no parameters")


def test_named_constructions_hit_their_values():
    assert gamma_m_plus(construct_named_orientation("star-sink:9")).value == 4
    assert gamma_m_plus(construct_named_orientation("path-dom:12")).value == 2
    assert gamma_m_plus(construct_named_orientation("wheel-sink-hub:10")).value == 2
    assert gamma_m_plus(construct_named_orientation("bipartite-two-out:3,4")).value > 1


def test_dom1_condition():
    for r in range(1, 5):
        for s in range(r, 17 // r + 1):
            if r * s <= 16:
                assert check_dom1_bipartite(r, s)
    assert dom1_condition(3, 3) and not dom1_condition(2, 5) and not dom1_condition(1, 4)


def test_conjecture_verdict():
    v = check_conjecture(2, 8)
    assert (v.computed_DOM, v.conjectured, v.applicable, v.agrees) == (3, 3, True, True)
    assert not check_conjecture(1, 2).applicable
    assert check_conjecture(1, 2).agrees is None
    with pytest.raises(ValueError):
        check_conjecture(3, 2)


def test_k_r_s_spectrum_extremes():
    assert spectrum(bipartite(2, 2)).max_value == 1
    assert spectrum(bipartite(2, 5)).max_value == 2
