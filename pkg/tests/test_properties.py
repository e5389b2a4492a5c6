from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from majdom.digraph import Digraph, Graph, remove_arc
from majdom.io import format_instance, parse_instance
from majdom.orientation import spectrum
from majdom.solver import (
    enumerate_minimal_mods,
    gamma_m_plus,
    gamma_plus,
    is_minimal_mods_by_loss,
    is_minimal_mods_direct,
    is_mods,
)


@st.composite
def digraphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Digraph(n, arcs)


@st.composite
def graphs(draw, max_n=6, max_m=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return Graph(n, edges)


@settings(max_examples=150, deadline=None)
@given(digraphs())
def test_exact_matches_naive(D):
    res = gamma_m_plus(D)
    assert (res.value, tuple(res.witness)) == naive.gamma(D.n, D.arc_list())
    assert gamma_plus(D).value == naive.gamma(D.n, D.arc_list(), full=True)[0]


@settings(max_examples=100, deadline=None)
@given(digraphs(max_n=6))
def test_minimal_enumeration_matches_naive(D):
    got = sorted(tuple(S) for S in enumerate_minimal_mods(D))
    assert got == sorted(naive.minimal_sets(D.n, D.arc_list()))
    for S in got:
        assert is_minimal_mods_direct(D, S) and is_minimal_mods_by_loss(D, S)


@settings(max_examples=100, deadline=None)
@given(digraphs(), st.data())
def test_superset_of_mods_is_mods(D, data):
    S = set(gamma_m_plus(D).witness)
    extra = data.draw(st.sets(st.integers(0, D.n - 1)))
    assert is_mods(D, S | extra)


@settings(max_examples=80, deadline=None)
@given(digraphs(), st.data())
def test_arc_removal_never_helps(D, data):
    if not D.m:
        return
    e = data.draw(st.sampled_from(D.arc_list()))
    k = gamma_m_plus(D).value
    assert k <= gamma_m_plus(remove_arc(D, e)).value <= k + 1


@settings(max_examples=100, deadline=None)
@given(digraphs())
def test_text_format_roundtrip(D):
    assert parse_instance(format_instance(D)) == D


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_spectrum_matches_naive(G):
    values = naive.orientation_values(G.n, list(G.edge_list))
    sp = spectrum(G)
    assert sp.values == sorted(values)
    assert sp.min_value == naive.undirected_gamma(G.n, list(G.edge_list))
