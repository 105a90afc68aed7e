from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from graphgen import random_graph, random_suite
from nilgraph.coherence import (
    CrossPair,
    Internal,
    Kind,
    coherent,
    coherent_decomposition,
    expand,
    expected_dimension,
    reduced_row,
    reduced_system,
    similar_edge_classes,
    solve_reduced,
    to_dot,
)
from nilgraph.errors import EmptySystem
from nilgraph.families import realize, right5, two_chain
from nilgraph.graph import complete_graph, empty_graph, path_graph
from nilgraph.positivity import edge_weights
from nilgraph.theorem import build_theorem_graph

SUITE = random_suite(seed=7, count=60)


def test_complete_graph_is_one_component():
    d = coherent_decomposition(complete_graph(5))
    assert d.components == ((1, 2, 3, 4, 5),)
    assert d.kinds == (Kind.COMPLETE,) and d.coherence_edges == ()


def test_path_decomposition():
    d = coherent_decomposition(path_graph(3))
    assert d.components == ((1, 3), (2,))
    assert d.kinds == (Kind.DISCRETE, Kind.SINGLETON)
    assert d.coherence_edges == ((0, 1),)


def test_theorem_graph_decomposition():
    q = 21
    d = coherent_decomposition(build_theorem_graph(q))
    assert d.components == ((1,), (2, 3), (4,), (5, 6), tuple(range(7, q + 1)))
    assert d.sizes == (1, 2, 1, 2, 15)
    assert set(d.coherence_edges) == {(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (1, 3)}


def test_similarity_class_examples():
    s = similar_edge_classes(complete_graph(3))
    assert s.descriptors == (Internal(0),) and s.members == ((0, 1, 2),)
    s = similar_edge_classes(realize(two_chain(2, 3)))
    assert s.descriptors == (CrossPair(0, 1), Internal(1))
    assert [len(m) for m in s.members] == [6, 3]
    assert len(similar_edge_classes(realize(right5(3, 4, 5)))) == 9


def test_two_chain_reduced_system_matches_direct_equations():
    g = realize(two_chain(2, 4))
    rs = reduced_system(g)
    # cross edge {1,3}: 3a, three more cross edges at 1, one at 3, three internal edges at 3
    # internal edge {3,4}: two cross edges at each end, two more internal edges at each end
    assert [list(r) for r in rs.matrix.rows] == [[7, 3], [4, 7]]
    assert expand(rs, solve_reduced(rs)) == edge_weights(g)


def test_single_discrete_vertex_merges_into_the_clique():
    g = realize(two_chain(1, 4))
    assert g == complete_graph(5)
    assert reduced_system(g).variable_order == (Internal(0),)


def test_one_class_system():
    assert solve_reduced(reduced_system(complete_graph(3))) == [Fraction(1, 5)]


def test_empty_graph_has_no_system():
    with pytest.raises(EmptySystem):
        reduced_system(empty_graph(3))


@pytest.mark.parametrize("seed", range(4))
def test_coherence_is_an_equivalence(seed):
    rng = random.Random(seed)
    for _ in range(15):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        nbrs = g.neighbors()
        vs = list(g.vertices)
        assert all(coherent(nbrs, a, a) for a in vs)
        for a, b in itertools.product(vs, repeat=2):
            assert coherent(nbrs, a, b) == coherent(nbrs, b, a)
        for a, b, c in itertools.product(vs, repeat=3):
            if coherent(nbrs, a, b) and coherent(nbrs, b, c):
                assert coherent(nbrs, a, c)
        where = coherent_decomposition(g).component_of()
        for a, b in itertools.combinations(vs, 2):
            assert (where[a] == where[b]) == coherent(nbrs, a, b)


@pytest.mark.parametrize("g", SUITE)
def test_component_laws(g):
    d = coherent_decomposition(g)
    for comp, kind in zip(d.components, d.kinds):
        pairs = list(itertools.combinations(comp, 2))
        if kind is Kind.COMPLETE:
            assert all(g.has_edge(a, b) for a, b in pairs)
        elif kind is Kind.DISCRETE:
            assert not any(g.has_edge(a, b) for a, b in pairs)
        else:
            assert len(comp) == 1
    for x, y in itertools.combinations(range(len(d.components)), 2):
        joined = [g.has_edge(a, b) for a in d.components[x] for b in d.components[y]]
        assert all(joined) or not any(joined)
        assert all(joined) == ((x, y) in d.coherence_edges)


@pytest.mark.parametrize("g", SUITE)
def test_reduction_soundness(g):
    s = similar_edge_classes(g)
    assert len(s) == expected_dimension(coherent_decomposition(g))
    rs = reduced_system(g, s)
    assert expand(rs, solve_reduced(rs)) == edge_weights(g)


@pytest.mark.parametrize("g", SUITE[:30])
def test_representative_independence(g):
    s = similar_edge_classes(g)
    for members in s.members:
        rows = {tuple(reduced_row(g, s, k)) for k in members}
        assert len(rows) == 1


def test_variable_order_convention():
    rs = reduced_system(build_theorem_graph(21))
    order = rs.variable_order
    cross = [d for d in order if isinstance(d, CrossPair)]
    internal = [d for d in order if isinstance(d, Internal)]
    assert order == tuple(cross + internal)
    assert cross == sorted(cross) and internal == sorted(internal)


def test_dot_export():
    dot = to_dot(coherent_decomposition(path_graph(3)))
    assert dot.startswith("graph coherence {")
    assert '"2:discrete"' in dot and '"1:singleton"' in dot and "c0 -- c1;" in dot
    dot = to_dot(coherent_decomposition(complete_graph(3)))
    assert "fillcolor=black" in dot
