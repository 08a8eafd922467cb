"""
Constructions of the generalized Grötzsch families and related graphs.

G_m (m odd, m >= 5) and H_m (m even, m >= 6) live on the hub a, the rim
cycle p_1..p_m and the spoke tips q_1..q_m. Every spoke tip joins the hub,
the rim is a cycle, and rim vertex p_i joins q_{i+o} for each offset o of the
family. Indices wrap modulo m with q_0 = q_m.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from graphs.exceptions import BadParityError, MTooSmallError, NotAnHGraphError
from graphs.graph_core import (
    Edge,
    EdgeList,
    Graph,
    VertexKind,
    VertexLabel,
    build_graph,
    family_labels,
    rim_labels,
)

logger = logging.getLogger(__name__)


class Family(str, Enum):
    G = 'G'
    H = 'H'
    CYCLE = 'Cycle'
    MYCIELSKI_CYCLE = 'MycielskiCycle'
    H_AUGMENTED = 'HAugmented'


# Command-line tags
FAMILY_TAGS: Dict[str, Family] = {
    'G': Family.G,
    'H': Family.H,
    'C': Family.CYCLE,
    'M': Family.MYCIELSKI_CYCLE,
    'HA': Family.H_AUGMENTED,
}

MIN_M = {
    Family.G: 5,
    Family.H: 6,
    Family.H_AUGMENTED: 6,
    Family.CYCLE: 3,
    Family.MYCIELSKI_CYCLE: 3,
}


@dataclass(frozen=True)
class FamilySpec:
    """Parameter record naming a constructible graph"""
    family: Family
    m: int

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, 'family', family)
        _check_parameters(family, self.m)

    @classmethod
    def from_tag(cls, tag: str, m: int) -> 'FamilySpec':
        return cls(FAMILY_TAGS[tag], m)

    @classmethod
    def for_survey(cls, m: int) -> 'FamilySpec':
        """G_m for odd m, H_m for even m."""
        return cls(Family.G if m % 2 else Family.H, m)

    def build(self) -> Graph:
        if self.family == Family.G:
            return build_G(self.m)
        if self.family == Family.H:
            return build_H(self.m)
        if self.family == Family.CYCLE:
            return build_cycle(self.m)
        if self.family == Family.MYCIELSKI_CYCLE:
            return mycielskian(build_cycle(self.m))
        return remark1_augment(build_H(self.m)).graph

    def __str__(self):
        return f"{self.family.value}_{self.m}"


def _check_parameters(family: Family, m: int) -> None:
    if family == Family.G and m % 2 == 0:
        raise BadParityError(family.value, m)
    if family in (Family.H, Family.H_AUGMENTED) and m % 2 == 1:
        raise BadParityError(family.value, m)
    if m < MIN_M[family]:
        raise MTooSmallError(family.value, m, MIN_M[family])


# ============================================================================
# OFFSETS
# ============================================================================

@dataclass(frozen=True)
class OffsetSet:
    """Residues o (mod m) such that p_i is adjacent to q_{i+o}"""
    m: int
    residues: Tuple[int, ...]

    def __contains__(self, residue: int) -> bool:
        return residue % self.m in self.residues

    def __len__(self) -> int:
        return len(self.residues)

    def spoke_of(self, i: int, offset: int) -> int:
        """1-based spoke index reached from rim index i."""
        return (i - 1 + offset) % self.m + 1


def edge_offsets(family: Family, m: int) -> OffsetSet:
    """
    Offsets 2k-1 of the family, as canonical residues in [0, m-1].

    k runs over 0..(m-3)/2 for G and 0..(m-2)/2 for H; k = 0 gives the
    offset -1 that joins p_1 to q_m.
    """
    family = Family(family)
    if family not in (Family.G, Family.H):
        raise ValueError(f"Offsets are defined for families G and H only, got {family.value}")
    _check_parameters(family, m)
    k_max = (m - 3) // 2 if family == Family.G else (m - 2) // 2
    residues = sorted({(2 * k - 1) % m for k in range(0, k_max + 1)})
    return OffsetSet(m=m, residues=tuple(residues))


def offset_classes(g: Graph) -> Dict[int, int]:
    """Number of rim-spoke edges per residue (spoke index - rim index) mod m."""
    classes: Dict[int, int] = {}
    for u, v in g.edges():
        a, b = g.labels[u], g.labels[v]
        if a.kind == VertexKind.RIM and b.kind == VertexKind.SPOKE:
            residue = (b.index - a.index) % g.m
            classes[residue] = classes.get(residue, 0) + 1
    return dict(sorted(classes.items()))


# ============================================================================
# BUILDERS
# ============================================================================

def _build_family(family: Family, m: int) -> Graph:
    offsets = edge_offsets(family, m)
    hub = 0

    def rim(i: int) -> int:
        return i

    def spoke(i: int) -> int:
        return m + i

    edges: List[Edge] = []
    for i in range(1, m + 1):
        edges.append((hub, spoke(i)))
        edges.append((rim(i), rim(i % m + 1)))
        for offset in offsets.residues:
            edges.append((rim(i), spoke(offsets.spoke_of(i, offset))))

    graph = build_graph(family_labels(m), edges, m=m, family=family.value)
    logger.debug("Built %s_%s with %s edges, offsets %s", family.value, m, graph.edge_count, offsets.residues)
    return graph


def build_G(m: int) -> Graph:
    """G_m for odd m >= 5; m(m+3)/2 edges."""
    _check_parameters(Family.G, m)
    return _build_family(Family.G, m)


def build_H(m: int) -> Graph:
    """H_m for even m >= 6; m(m+4)/2 edges."""
    _check_parameters(Family.H, m)
    return _build_family(Family.H, m)


def build_cycle(m: int) -> Graph:
    _check_parameters(Family.CYCLE, m)
    edges = [(i, (i + 1) % m) for i in range(m)]
    return build_graph(rim_labels(m), edges, m=m, family=Family.CYCLE.value)


def mycielskian(g: Graph) -> Graph:
    """
    Mycielski construction.

    The k-th vertex of ``g`` becomes p_k, its shadow q_k is joined to the
    images of its neighbours, and a new hub is joined to every shadow.
    """
    if g.n == 0:
        raise ValueError("Mycielski construction needs a nonempty graph")
    n = g.n
    hub = 0
    edges: List[Edge] = []
    for u, v in g.edges():
        edges.append((1 + u, 1 + v))
        edges.append((1 + n + u, 1 + v))
        edges.append((1 + n + v, 1 + u))
    for u in g.vertices():
        edges.append((hub, 1 + n + u))

    family = Family.MYCIELSKI_CYCLE.value if g.family == Family.CYCLE.value else None
    return build_graph(family_labels(n), edges, m=n, family=family)


# ============================================================================
# AUGMENTATION
# ============================================================================

@dataclass(frozen=True)
class Remark1Augmentation:
    """H_m plus its diametral chords, with the triangle check outcome"""
    graph: Graph
    added: EdgeList
    discrepancy: bool
    witness: Optional[Tuple[VertexLabel, VertexLabel, VertexLabel]] = None


def diametral_chords(m: int) -> EdgeList:
    """Rim pairs p_i p_{i+m/2} for 1 <= i <= m/2, as vertex indices."""
    half = m // 2
    return tuple((i, i + half) for i in range(1, half + 1))


def remark1_augment(h: Graph) -> Remark1Augmentation:
    """
    Add the m/2 diametral rim chords to an unmodified H_m.

    The claim that the result is maximal triangle-free is reported, never
    assumed: ``discrepancy`` is set when the chords close a triangle. The
    witness is the first chord p_i p_{i+m/2} that closes one, completed by the
    spoke tip q_{i-1} when it is a common neighbour and by the smallest
    common neighbour otherwise.

    Raises:
        NotAnHGraphError: If ``h`` is not exactly build_H(h.m)
    """
    from certification.certify import is_triangle_free  # local import to avoid cycles

    if h.family != Family.H.value or h.m % 2 or h.m < MIN_M[Family.H] or h != build_H(h.m):
        raise NotAnHGraphError(f"Expected an unmodified H_m graph, got family={h.family} m={h.m}")

    chords = diametral_chords(h.m)
    augmented = h.with_edges(chords, family=Family.H_AUGMENTED.value)
    check = is_triangle_free(augmented)
    witness = None
    if not check.triangle_free:
        witness = _chord_triangle(augmented, chords)
        logger.warning(
            "Diametral chords of H_%s close the triangle %s",
            h.m, '-'.join(str(label) for label in witness),
        )
    return Remark1Augmentation(
        graph=augmented,
        added=chords,
        discrepancy=not check.triangle_free,
        witness=witness,
    )


def _chord_triangle(g: Graph, chords: EdgeList) -> Tuple[VertexLabel, VertexLabel, VertexLabel]:
    for u, v in chords:
        common = g.common_neighbors(u, v)
        if not common:
            continue
        wrap = g.index_of(VertexLabel.spoke((u - 2) % g.m + 1))
        w = wrap if wrap in common else common[0]
        return tuple(sorted((g.labels[u], g.labels[v], g.labels[w])))
    raise ValueError("No diametral chord closes a triangle")


def maximal_completion(g: Graph) -> Tuple[Graph, EdgeList]:
    """
    Greedy maximal triangle-free supergraph.

    Non-edges are scanned in lexicographic index order and each one is
    added when its endpoints have no common neighbour at that moment.
    Deterministic; the number of added edges is not minimised.

    Raises:
        InputHasTriangleError: If ``g`` already contains a triangle
    """
    from certification.certify import is_triangle_free  # local import to avoid cycles
    from certification.exceptions import InputHasTriangleError

    check = is_triangle_free(g)
    if not check.triangle_free:
        raise InputHasTriangleError(check.witness)

    neighbors = [set(g.neighbors(v)) for v in g.vertices()]
    added: List[Edge] = []
    for u, v in g.non_edges():
        if neighbors[u].isdisjoint(neighbors[v]):
            neighbors[u].add(v)
            neighbors[v].add(u)
            added.append((u, v))

    logger.debug("Maximal completion added %s edges", len(added))
    return g.with_edges(added, family=None), tuple(added)
