"""
Witness-carrying results of the verifiers.

Every witness re-validates against a graph through its own checking path,
without consulting the search that produced it.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from graphs.graph_core import Edge, Graph, VertexLabel


# ============================================================================
# COLORINGS
# ============================================================================

@dataclass(frozen=True)
class Coloring:
    """Vertex index -> color, colors are integers >= 1"""
    colors: Dict[int, int] = field(default_factory=dict)

    @property
    def color_count(self) -> int:
        return len(set(self.colors.values()))

    def color_of(self, v: int) -> Optional[int]:
        return self.colors.get(v)

    def is_proper(self, g: Graph) -> bool:
        if any(v not in self.colors for v in g.vertices()):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def labelled(self, g: Graph) -> Dict[str, int]:
        return {str(g.labels[v]): self.colors[v] for v in sorted(self.colors)}


@dataclass(frozen=True)
class ColoringCheck:
    proper: bool
    violating_edge: Optional[Edge] = None


# ============================================================================
# CYCLES AND TRIANGLES
# ============================================================================

@dataclass(frozen=True)
class CycleCertificate:
    """Hamiltonian cycle v_1 .. v_n; the closing pair (v_n, v_1) is implied"""
    vertices: Tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        order = self.vertices
        if len(order) != g.n or len(set(order)) != g.n or g.n < 3:
            return False
        return all(g.has_edge(order[i], order[(i + 1) % len(order)]) for i in range(len(order)))

    def labels(self, g: Graph) -> Tuple[VertexLabel, ...]:
        return tuple(g.labels[v] for v in self.vertices)


class HamiltonianStatus(str, Enum):
    FOUND = 'found'
    NOT_FOUND = 'not_found'


@dataclass(frozen=True)
class HamiltonianSearch:
    status: HamiltonianStatus
    certificate: Optional[CycleCertificate] = None
    steps: int = 0

    @property
    def found(self) -> bool:
        return self.status == HamiltonianStatus.FOUND


@dataclass(frozen=True)
class TriangleWitness:
    """Three vertex indices in ascending order"""
    vertices: Tuple[int, int, int]

    @classmethod
    def of(cls, u: int, v: int, w: int) -> 'TriangleWitness':
        a, b, c = sorted((u, v, w))
        return cls((a, b, c))

    def validate(self, g: Graph) -> bool:
        a, b, c = self.vertices
        return len({a, b, c}) == 3 and g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)

    def labels(self, g: Graph) -> Tuple[VertexLabel, VertexLabel, VertexLabel]:
        a, b, c = self.vertices
        return (g.labels[a], g.labels[b], g.labels[c])


@dataclass(frozen=True)
class TriangleCheck:
    triangle_free: bool
    witness: Optional[TriangleWitness] = None


# ============================================================================
# MAXIMALITY
# ============================================================================

class MaximalityVerdict(str, Enum):
    MAXIMAL = 'maximal'
    NOT_MAXIMAL = 'not_maximal'


@dataclass(frozen=True)
class MaximalityReport:
    """
    Maximal: every non-edge closes a triangle (``audit`` maps each non-edge
    to one when requested). NotMaximal: ``witness`` is a non-edge whose
    addition keeps the graph triangle-free.
    """
    verdict: MaximalityVerdict
    witness: Optional[Edge] = None
    audit: Optional[Dict[Edge, TriangleWitness]] = None

    @property
    def maximal(self) -> bool:
        return self.verdict == MaximalityVerdict.MAXIMAL

    def witness_labels(self, g: Graph) -> Optional[Tuple[VertexLabel, VertexLabel]]:
        if self.witness is None:
            return None
        u, v = self.witness
        return (g.labels[u], g.labels[v])


# ============================================================================
# OTHER VERDICTS
# ============================================================================

@dataclass(frozen=True)
class Lemma2PathAudit:
    """Literal vertex sequence of the published Hamiltonicity argument"""
    sequence: Tuple[VertexLabel, ...]
    edges_valid: bool
    covers_all: bool
    visited: int
    total: int
    invalid_pairs: Tuple[Tuple[VertexLabel, VertexLabel], ...] = ()


@dataclass(frozen=True)
class PlanarityVerdict:
    """Only non-planarity is ever certified; ``certified=False`` means inconclusive"""
    certified: bool
    edge_count: int
    bound: int
    triangle_free: bool


@dataclass(frozen=True)
class MycielskiContainment:
    holds: bool
    missing_edges: Tuple[Tuple[VertexLabel, VertexLabel], ...]
    extra_edges: int


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    mapping: Optional[Dict[int, int]] = None
    steps: int = 0


@dataclass(frozen=True)
class ChromaticResult:
    k: int
    coloring: Coloring
    lower_bound: int = 0
    greedy_upper_bound: int = 0
