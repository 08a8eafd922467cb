"""
Brute-force reference implementations.

These follow the textbook definitions literally and share no search code
with certification.certify, so that agreement between the two is evidence.
Each oracle refuses inputs above its vertex budget instead of running
unbounded.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Set

from django.conf import settings

from certification.exceptions import InputHasTriangleError, OverBudgetError
from certification.witnesses import MaximalityReport, MaximalityVerdict, TriangleWitness
from graphs.graph_core import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleBudget:
    max_chromatic_vertices: int = 15
    max_structural_vertices: int = 41

    @classmethod
    def from_settings(cls) -> 'OracleBudget':
        """Vertex budgets from the GGG_ORACLE_* settings; class defaults outside Django."""
        if not settings.configured:
            return cls()
        return cls(
            max_chromatic_vertices=getattr(settings, 'GGG_ORACLE_MAX_COLORING_VERTICES', cls.max_chromatic_vertices),
            max_structural_vertices=getattr(settings, 'GGG_ORACLE_MAX_VERTICES', cls.max_structural_vertices),
        )


@dataclass(frozen=True)
class GirthOracleVerdict:
    girth_is_four: bool
    value: Optional[int]  # None for acyclic graphs


def _edge_set(g: Graph) -> Set[FrozenSet[int]]:
    return {frozenset(edge) for edge in g.edges()}


def _guard(oracle: str, g: Graph, limit: int) -> None:
    if g.n > limit:
        raise OverBudgetError(oracle, g.n, limit)


def brute_force_chromatic(g: Graph, budget: Optional[OracleBudget] = None) -> int:
    """
    Smallest k admitting a proper coloring, by exhaustive assignment.

    Vertices are assigned in index order and vertex 0 is fixed to the first
    color; a partial assignment is abandoned once it colors an edge
    monochromatically.
    """
    budget = budget or OracleBudget.from_settings()
    _guard('brute_force_chromatic', g, budget.max_chromatic_vertices)
    n = g.n
    if n == 0:
        return 0
    edges = _edge_set(g)
    earlier = [[u for u in range(v) if frozenset((u, v)) in edges] for v in range(n)]

    def colorable(k: int) -> bool:
        assignment = [0] * n

        def place(v: int) -> bool:
            if v == n:
                return True
            choices = [0] if v == 0 else range(k)
            for color in choices:
                if all(assignment[u] != color for u in earlier[v]):
                    assignment[v] = color
                    if place(v + 1):
                        return True
            return False

        return place(0)

    for k in range(1, n + 1):
        if colorable(k):
            return k
    return n


def enumerate_triangles(g: Graph, budget: Optional[OracleBudget] = None) -> List[TriangleWitness]:
    """Every triangle exactly once, in lexicographic order of vertex triples."""
    budget = budget or OracleBudget.from_settings()
    _guard('enumerate_triangles', g, budget.max_structural_vertices)
    edges = _edge_set(g)
    return [
        TriangleWitness((a, b, c))
        for a, b, c in combinations(range(g.n), 3)
        if frozenset((a, b)) in edges and frozenset((b, c)) in edges and frozenset((a, c)) in edges
    ]


def exhaustive_maximality(g: Graph, budget: Optional[OracleBudget] = None) -> MaximalityReport:
    """
    Add each absent edge in turn and re-enumerate triangles.

    Raises:
        OverBudgetError: Above the structural vertex budget
        InputHasTriangleError: If ``g`` already has a triangle
    """
    budget = budget or OracleBudget.from_settings()
    _guard('exhaustive_maximality', g, budget.max_structural_vertices)
    existing = enumerate_triangles(g, budget)
    if existing:
        raise InputHasTriangleError(existing[0])

    edges = list(g.edges())
    edge_set = _edge_set(g)
    for u, v in combinations(range(g.n), 2):
        if frozenset((u, v)) in edge_set:
            continue
        augmented = g.with_edges([(u, v)])
        if not enumerate_triangles(augmented, budget):
            logger.debug("Oracle: adding %s-%s keeps the graph triangle-free", u, v)
            return MaximalityReport(verdict=MaximalityVerdict.NOT_MAXIMAL, witness=(u, v))
    logger.debug("Oracle: all non-edges of a %s-edge graph close triangles", len(edges))
    return MaximalityReport(verdict=MaximalityVerdict.MAXIMAL)


def _has_four_cycle(g: Graph, edges: Set[FrozenSet[int]]) -> bool:
    def adjacent(x: int, y: int) -> bool:
        return frozenset((x, y)) in edges

    for a, b, c, d in combinations(range(g.n), 4):
        for w, x, y, z in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            if adjacent(w, x) and adjacent(x, y) and adjacent(y, z) and adjacent(z, w):
                return True
    return False


def _shortest_cycle_from_paths(g: Graph, edges: Set[FrozenSet[int]], start_length: int) -> Optional[int]:
    """Smallest cycle length >= start_length, enumerating simple paths from each cycle's least vertex."""
    n = g.n
    for length in range(start_length, n + 1):
        for start in range(n):
            stack = [(start, (start,))]
            while stack:
                end, path = stack.pop()
                if len(path) == length:
                    if frozenset((end, start)) in edges:
                        return length
                    continue
                for nxt in range(start + 1, n):
                    if nxt not in path and frozenset((end, nxt)) in edges:
                        stack.append((nxt, path + (nxt,)))
    return None


def fixed_girth_check(g: Graph, budget: Optional[OracleBudget] = None) -> GirthOracleVerdict:
    """
    Girth-is-4 test by triple and quadruple enumeration.

    When the answer is not 4 the actual girth is reported, found by
    enumerating simple cycles of increasing length.
    """
    budget = budget or OracleBudget.from_settings()
    _guard('fixed_girth_check', g, budget.max_structural_vertices)
    if enumerate_triangles(g, budget):
        return GirthOracleVerdict(girth_is_four=False, value=3)
    edges = _edge_set(g)
    if _has_four_cycle(g, edges):
        return GirthOracleVerdict(girth_is_four=True, value=4)
    return GirthOracleVerdict(girth_is_four=False, value=_shortest_cycle_from_paths(g, edges, 5))
