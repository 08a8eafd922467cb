"""
Small graphs outside the families, for tests.

All of them are labelled p1..pk through graphs.graph_core.rim_graph.
"""

from itertools import combinations
from pathlib import Path

from graphs.graph_core import Graph, import_json, rim_graph

FIXTURES_DIR = Path(__file__).resolve().parent.parent / 'graphs' / 'fixtures'


def complete_graph(k: int) -> Graph:
    return rim_graph(k, combinations(range(k), 2))


def path_graph(k: int) -> Graph:
    return rim_graph(k, [(i, i + 1) for i in range(k - 1)])


def star_graph(leaves: int) -> Graph:
    """Centre p1 joined to p2..p_{leaves+1}."""
    return rim_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def cycle_graph(k: int) -> Graph:
    """C_k outside the family constructors (family metadata unset)."""
    return rim_graph(k, [(i, (i + 1) % k) for i in range(k)])


def two_disjoint_edges() -> Graph:
    return rim_graph(4, [(0, 1), (2, 3)])


def complete_bipartite(left: int, right: int) -> Graph:
    return rim_graph(left + right, [(i, left + j) for i in range(left) for j in range(right)])


def load_fixture(name: str) -> Graph:
    return import_json((FIXTURES_DIR / name).read_text(encoding='utf-8'))


def grotzsch_reference() -> Graph:
    """The 11-vertex drawing of the Grötzsch graph, hand-entered edge by edge."""
    return load_fixture('grotzsch_reference.json')


def petersen_graph() -> Graph:
    """Outer 5-cycle p1..p5, inner pentagram p6..p10, spokes p_i p_{i+5}."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return rim_graph(10, outer + inner + spokes)
