import networkx as nx
import pytest
from hypothesis import given

from dgms_tools.digraph import (
    build_digraph,
    condense,
    normalize_terminals,
    scc_decompose,
)

from .strategies import digraphs


def test_build_digraph_rejects_duplicate_vertex():
    with pytest.raises(ValueError, match="duplicate vertex id 'a'"):
        build_digraph(['a', 'a'], [])


def test_build_digraph_rejects_duplicate_edge_id():
    with pytest.raises(ValueError, match='duplicate edge id 0'):
        build_digraph(['a', 'b'], [(0, 'a', 'b'), (0, 'b', 'a')])


def test_build_digraph_rejects_dangling_edge():
    with pytest.raises(ValueError, match="unknown vertex 'c'"):
        build_digraph(['a', 'b'], [(0, 'a', 'c')])


def test_build_digraph_rejects_second_loop():
    with pytest.raises(ValueError, match='already carries a loop'):
        build_digraph(['a'], [(0, 'a', 'a'), (1, 'a', 'a')])


def test_build_digraph_keeps_parallel_edges():
    digraph = build_digraph(['a', 'b'], [(0, 'a', 'b'), (1, 'a', 'b')])
    assert digraph.successors('a') == ('b', 'b')


def test_normalize_terminals_adds_flagged_loops():
    digraph = normalize_terminals(
        build_digraph(['a', 'b', 'c'], [(0, 'a', 'b'), (1, 'c', 'c')])
    )
    assert digraph.is_terminal('b') and digraph.is_terminal('c')
    assert not digraph.is_terminal('a')
    assert digraph.loop('b').id == 2
    assert digraph.terminal_loops == {1, 2}


def test_normalize_terminals_is_idempotent():
    digraph = normalize_terminals(build_digraph(['a', 'b'], [(0, 'a', 'b')]))
    assert normalize_terminals(digraph) == digraph


def test_household_decomposition(household2):
    decomposition = household2.decomposition
    assert decomposition.components == (('t2',), ('t1',), ('v1', 'v2'))
    assert decomposition.j_terminal == {0, 1}
    assert decomposition.j_zero == frozenset()
    assert decomposition.has_dicycle == (True, True, True)


def test_loop_free_singleton_is_in_j_zero():
    digraph = normalize_terminals(build_digraph(['a', 't'], [(0, 'a', 't')]))
    decomposition = scc_decompose(digraph)
    j = decomposition.component_of['a']
    assert decomposition.j_zero == {j}
    assert decomposition.component_of['t'] in decomposition.j_terminal


def test_deep_chain_does_not_recurse():
    n = 50_000
    digraph = build_digraph(
        range(n), ((k, k, k + 1) for k in range(n - 1))
    )
    assert len(scc_decompose(digraph)) == n


def test_household_condensation_is_a_star(household2):
    condensation = condense(household2.digraph, household2.decomposition)
    quotient = condensation.quotient
    assert {(e.source, e.target) for e in quotient.edges} == {(2, 1), (2, 0)}
    assert condensation.topological_order()[0] == 2
    lifted = [household2.digraph.edge_by_id[condensation.lift[e.id]] for e in quotient.edges]
    assert [(e.source, e.target) for e in lifted] == [('v1', 't1'), ('v2', 't2')]


def test_condense_rejects_foreign_decomposition(household2, household3):
    with pytest.raises(ValueError, match='does not cover'):
        condense(household2.digraph, household3.decomposition)


@given(digraphs())
def test_components_match_networkx(digraph):
    graph = nx.DiGraph()
    graph.add_nodes_from(digraph.vertices)
    graph.add_edges_from((e.source, e.target) for e in digraph.edges)

    decomposition = scc_decompose(digraph)
    expected = {frozenset(c) for c in nx.strongly_connected_components(graph)}
    assert {frozenset(c) for c in decomposition.components} == expected


@given(digraphs())
def test_component_ids_are_reverse_topological(digraph):
    decomposition = scc_decompose(digraph)
    for edge in digraph.edges:
        assert (
            decomposition.component_of[edge.source]
            >= decomposition.component_of[edge.target]
        )


@given(digraphs())
def test_mutual_reachability_within_components(digraph):
    graph = nx.DiGraph()
    graph.add_nodes_from(digraph.vertices)
    graph.add_edges_from((e.source, e.target) for e in digraph.edges)
    closure = nx.transitive_closure(graph, reflexive=True)

    decomposition = scc_decompose(digraph)
    for u in digraph.vertices:
        for w in digraph.vertices:
            same = decomposition.component_of[u] == decomposition.component_of[w]
            assert same == (closure.has_edge(u, w) and closure.has_edge(w, u))


@given(digraphs())
def test_dicycle_flags(digraph):
    graph = nx.DiGraph()
    graph.add_nodes_from(digraph.vertices)
    graph.add_edges_from((e.source, e.target) for e in digraph.edges)

    decomposition = scc_decompose(digraph)
    for component, cyclic in zip(decomposition.components, decomposition.has_dicycle):
        subgraph = graph.subgraph(component)
        assert cyclic == (len(component) > 1 or subgraph.number_of_edges() > 0)


@given(digraphs())
def test_condensation_is_acyclic(digraph):
    condensation = condense(digraph, scc_decompose(digraph))
    order = condensation.topological_order()
    position = {j: k for k, j in enumerate(order)}
    assert sorted(order) == list(range(len(condensation.quotient)))
    for edge in condensation.quotient.edges:
        assert position[edge.source] < position[edge.target]
