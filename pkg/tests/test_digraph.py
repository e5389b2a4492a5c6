import pytest

from majdom.digraph import (
    Digraph,
    Graph,
    Orientation,
    add_arc,
    closed_out_neighborhood,
    induced_subdigraph,
    private_out_neighbors,
    remove_arc,
    remove_vertex,
    reverse_arc,
)
from majdom.errors import DuplicateArcError, GraphError, LastVertexError, LoopError, MissingArcError
from majdom.vertexset import VertexSet


def test_construction_and_queries():
    D = Digraph(4, [(0, 1), (1, 2), (1, 0)])
    assert D.m == 3
    assert D.has_arc(1, 0) and not D.has_arc(2, 1)
    assert list(D.out_neighbors(1)) == [0, 2]
    assert list(D.in_neighbors(0)) == [1]
    assert D == Digraph(4, [(1, 0), (1, 2), (0, 1)])


def test_invalid_digraphs():
    with pytest.raises(LoopError):
        Digraph(3, [(1, 1)])
    with pytest.raises(DuplicateArcError):
        Digraph(3, [(0, 1), (0, 1)])
    with pytest.raises(IndexError):
        Digraph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Digraph(0, [])


def test_closed_neighborhood_and_private():
    D = Digraph(5, [(0, 1), (0, 2), (3, 2)])
    S = VertexSet.of(5, [0, 3])
    assert list(closed_out_neighborhood(D, S)) == [0, 1, 2, 3]
    assert list(private_out_neighbors(D, S, 0)) == [1]
    assert list(private_out_neighbors(D, S, 3)) == []
    with pytest.raises(ValueError):
        private_out_neighbors(D, S, 1)


def test_edits_are_pure():
    D = Digraph(3, [(0, 1)])
    assert add_arc(D, (1, 2)).m == 2
    assert remove_arc(D, (0, 1)).m == 0
    assert reverse_arc(D, (0, 1)).has_arc(1, 0)
    assert D.arc_list() == [(0, 1)]
    with pytest.raises(MissingArcError):
        remove_arc(D, (1, 2))
    with pytest.raises(DuplicateArcError):
        reverse_arc(Digraph(2, [(0, 1), (1, 0)]), (0, 1))


def test_remove_vertex_relabels():
    D = Digraph(4, [(0, 1), (2, 3), (3, 0)])
    H, old_to_new = remove_vertex(D, 1)
    assert old_to_new == {0: 0, 2: 1, 3: 2}
    assert H.arc_list() == [(1, 2), (2, 0)]
    with pytest.raises(LastVertexError):
        remove_vertex(Digraph(1, []), 0)


def test_induced_subdigraph_keeps_labels_map():
    D = Digraph(5, [(0, 4), (4, 2), (1, 3)])
    H, new_to_old = induced_subdigraph(D, [0, 2, 4])
    assert new_to_old == (0, 2, 4)
    assert H.arc_list() == [(0, 2), (2, 1)]


def test_orientation_codes():
    G = Graph(3, [(0, 1), (1, 2)])
    assert Orientation(G, 0).direction == ((0, 1), (1, 2))
    assert Orientation(G, 0b10).direction == ((0, 1), (2, 1))
    o = Orientation.from_arcs(G, [(1, 0), (2, 1)])
    assert o.code == 0b11
    with pytest.raises(GraphError):
        Orientation(G, 4)


def test_graph_basics():
    G = Graph(4, [(2, 0), (1, 2)])
    assert G.edge_list == ((0, 2), (1, 2))
    assert G.degree(2) == 2
    assert not G.is_connected()
    assert G.symmetric_digraph().m == 4
