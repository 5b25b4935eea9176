from math import comb

from hypothesis import given

from engine.triples import classify_triples
from graphs.core import VertexSet, complete_graph, empty_graph, induced_edges, path_graph

from .strategies import simple_graphs


def test_triangle_is_one_clique():
    classes = classify_triples(complete_graph(3))
    assert classes.foundations == [] and classes.extensions == []
    assert [q.vertices for q in classes.cliques] == [VertexSet.of((0, 1, 2))]


def test_path_on_three_is_one_foundation():
    classes = classify_triples(path_graph(3))
    (f,) = classes.foundations
    assert f.vertices == VertexSet.of((0, 1, 2))
    assert f.open_pair == (0, 2)
    assert f.midpoint == 1
    assert classes.extensions == [] and classes.cliques == []


def test_path_on_four():
    classes = classify_triples(path_graph(4))
    assert [(f.vertices.members, f.open_pair) for f in classes.foundations] == [
        ((0, 1, 2), (0, 2)),
        ((1, 2, 3), (1, 3)),
    ]
    assert [(t.vertices.members, sorted(t.non_edges)) for t in classes.extensions] == [
        ((0, 1, 3), [(0, 3), (1, 3)]),
        ((0, 2, 3), [(0, 2), (0, 3)]),
    ]
    assert classes.cliques == []


def test_edgeless_triples_are_dropped():
    classes = classify_triples(empty_graph(5))
    assert classes == ([], [], [])


def test_extension_other_non_edge():
    (t, _) = classify_triples(path_graph(4)).extensions
    assert t.other_non_edge((0, 3)) == (1, 3)
    assert t.other_non_edge((1, 3)) == (0, 3)


@given(simple_graphs())
def test_classes_match_induced_edge_counts(g):
    classes = classify_triples(g)
    independent = sum(
        1 for a in range(g.n) for b in range(a + 1, g.n) for c in range(b + 1, g.n)
        if not induced_edges(g, VertexSet.of((a, b, c)))
    )
    total = len(classes.foundations) + len(classes.extensions) + len(classes.cliques)
    assert total + independent == comb(g.n, 3)
    for f in classes.foundations:
        assert len(induced_edges(g, f.vertices)) == 2
        assert not g.adjacent(*f.open_pair)
        assert g.adjacent(f.midpoint, f.open_pair[0]) and g.adjacent(f.midpoint, f.open_pair[1])
    for t in classes.extensions:
        assert len(induced_edges(g, t.vertices)) == 1
        assert len(t.non_edges) == 2
        assert not any(g.adjacent(*p) for p in t.non_edges)
    for q in classes.cliques:
        assert len(induced_edges(g, q.vertices)) == 3


@given(simple_graphs())
def test_classification_is_lexicographic(g):
    classes = classify_triples(g)
    for group in classes:
        keys = [x.vertices.members for x in group]
        assert keys == sorted(keys)
