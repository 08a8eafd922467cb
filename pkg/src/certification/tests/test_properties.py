"""
Property tests over small random graphs.

Every witness produced by the verifiers is re-checked through an
independent path: the brute-force oracles or networkx.
"""

from itertools import combinations, permutations

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from certification import certify, oracle
from graphs.families import maximal_completion, mycielskian
from graphs.graph_core import Graph, rim_graph

PROPERTY_SETTINGS = settings(max_examples=60, deadline=None)


@st.composite
def small_graphs(draw: st.DrawFn, max_vertices: int = 8) -> Graph:
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return rim_graph(n, chosen)


@st.composite
def triangle_free_graphs(draw: st.DrawFn, max_vertices: int = 8) -> Graph:
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    pairs = list(combinations(range(n), 2))
    order = draw(st.permutations(pairs)) if pairs else []
    neighbors = [set() for _ in range(n)]
    edges = []
    for u, v in order:
        if draw(st.booleans()) and neighbors[u].isdisjoint(neighbors[v]):
            neighbors[u].add(v)
            neighbors[v].add(u)
            edges.append((u, v))
    return rim_graph(n, edges)


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices())
    graph.add_edges_from(g.edges())
    return graph


def has_hamiltonian_cycle(g: Graph) -> bool:
    if g.n < 3:
        return False
    return any(
        all(g.has_edge(cycle[i], cycle[(i + 1) % g.n]) for i in range(g.n))
        for cycle in ((0,) + rest for rest in permutations(range(1, g.n)))
    )


@PROPERTY_SETTINGS
@given(small_graphs())
def test_chromatic_number_matches_oracle(g):
    """Test chromatic number against brute force"""
    result = certify.chromatic_number(g)
    assert result.k == oracle.brute_force_chromatic(g)
    assert result.coloring.is_proper(g)
    assert result.coloring.color_count == result.k


@PROPERTY_SETTINGS
@given(small_graphs())
def test_triangle_witness_validates(g):
    """Test triangle witnesses"""
    check = certify.is_triangle_free(g)
    triangles = oracle.enumerate_triangles(g)
    assert check.triangle_free == (not triangles)
    if not check.triangle_free:
        assert check.witness.validate(g)


@PROPERTY_SETTINGS
@given(small_graphs())
def test_girth_matches_oracle(g):
    """Test girth against the oracle"""
    assert certify.girth(g) == oracle.fixed_girth_check(g).value


@PROPERTY_SETTINGS
@given(small_graphs(max_vertices=7))
def test_hamiltonian_search_matches_enumeration(g):
    """Test Hamiltonian certificates"""
    search = certify.find_hamiltonian_cycle(g)
    assert search.found == has_hamiltonian_cycle(g)
    if search.found:
        assert search.certificate.validate(g)


@PROPERTY_SETTINGS
@given(triangle_free_graphs())
def test_maximality_matches_oracle(g):
    """Test maximality verdicts and witnesses against the oracle"""
    fast = certify.maximality_check(g, audit=True)
    slow = oracle.exhaustive_maximality(g)
    assert fast.maximal == slow.maximal
    if fast.maximal:
        assert all(t.validate(g.with_edges([pair])) for pair, t in fast.audit.items())
    else:
        assert certify.is_triangle_free(g.with_edges([fast.witness])).triangle_free


@PROPERTY_SETTINGS
@given(triangle_free_graphs())
def test_completion_is_maximal_supergraph(g):
    """Test completion yields a maximal supergraph"""
    completed, added = maximal_completion(g)
    assert set(g.edges()) <= set(completed.edges())
    assert completed.edge_count == g.edge_count + len(added)
    assert oracle.exhaustive_maximality(completed).maximal


@PROPERTY_SETTINGS
@given(triangle_free_graphs(max_vertices=6))
def test_mycielskian_raises_chromatic_number(g):
    """Test the Mycielskian stays triangle-free and needs one more color"""
    if g.n == 0:
        return
    lifted = mycielskian(g)
    assert certify.is_triangle_free(lifted).triangle_free
    assert certify.chromatic_number(lifted).k == certify.chromatic_number(g).k + 1


@PROPERTY_SETTINGS
@given(small_graphs())
def test_nonplanarity_certificate_is_sound(g):
    """Test non-planarity certificates against networkx"""
    if certify.nonplanarity_edge_bound(g).certified:
        planar, _ = nx.check_planarity(to_networkx(g))
        assert not planar


@PROPERTY_SETTINGS
@given(small_graphs(max_vertices=7), st.data())
def test_isomorphism_matches_networkx(g, data):
    """Test isomorphism under random relabelling against networkx"""
    permutation = data.draw(st.permutations(list(g.vertices())))
    relabelled = rim_graph(g.n, [(permutation[u], permutation[v]) for u, v in g.edges()])
    result = certify.isomorphism_check(g, relabelled)
    assert result.isomorphic
    assert all(relabelled.has_edge(result.mapping[u], result.mapping[v]) for u, v in g.edges())

    other = data.draw(small_graphs(max_vertices=7))
    expected = nx.is_isomorphic(to_networkx(g), to_networkx(other))
    assert certify.isomorphism_check(g, other).isomorphic == expected
