"""
Immutable labelled simple graphs.

Vertices carry a semantic label (the hub ``a``, rim vertices ``p1..pm`` and
spoke tips ``q1..qm``) and are stored under dense 0-based indices fixed by the
canonical label order Hub < Rim(1..m) < Spoke(1..m). All iteration happens in
ascending index order so that exports and witnesses are reproducible.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import graphviz

from graphs.exceptions import (
    GraphFormatError,
    IndexOutOfRangeError,
    LabelOrderError,
    SelfLoopError,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
EdgeList = Tuple[Edge, ...]

_LABEL_PATTERN = re.compile(r'^(?:(a)|([pq])([1-9][0-9]*))$')


# ============================================================================
# LABELS
# ============================================================================

class VertexKind(IntEnum):
    HUB = 0
    RIM = 1
    SPOKE = 2


@dataclass(frozen=True, order=True)
class VertexLabel:
    """Semantic identity of a vertex; ordering is the canonical vertex order"""
    kind: VertexKind
    index: int = 0  # 1-based for rim and spoke vertices, 0 for the hub

    @classmethod
    def hub(cls) -> 'VertexLabel':
        return cls(VertexKind.HUB, 0)

    @classmethod
    def rim(cls, i: int) -> 'VertexLabel':
        return cls(VertexKind.RIM, i)

    @classmethod
    def spoke(cls, i: int) -> 'VertexLabel':
        return cls(VertexKind.SPOKE, i)

    @classmethod
    def parse(cls, text: str) -> 'VertexLabel':
        """Parse ``a``, ``p<i>`` or ``q<i>``."""
        match = _LABEL_PATTERN.match(text)
        if not match:
            raise GraphFormatError(f"Invalid vertex label '{text}'")
        if match.group(1):
            return cls.hub()
        kind = VertexKind.RIM if match.group(2) == 'p' else VertexKind.SPOKE
        return cls(kind, int(match.group(3)))

    def __str__(self) -> str:
        if self.kind == VertexKind.HUB:
            return 'a'
        prefix = 'p' if self.kind == VertexKind.RIM else 'q'
        return f"{prefix}{self.index}"


def family_labels(m: int) -> Tuple[VertexLabel, ...]:
    """Canonical labels of a 2m+1 vertex family graph."""
    return (
        (VertexLabel.hub(),)
        + tuple(VertexLabel.rim(i) for i in range(1, m + 1))
        + tuple(VertexLabel.spoke(i) for i in range(1, m + 1))
    )


def rim_labels(count: int) -> Tuple[VertexLabel, ...]:
    return tuple(VertexLabel.rim(i) for i in range(1, count + 1))


def normalize_edges(pairs: Iterable[Sequence[int]]) -> EdgeList:
    """Sort each pair, drop duplicates and sort the list lexicographically."""
    return tuple(sorted({(min(u, v), max(u, v)) for u, v in pairs}))


# ============================================================================
# GRAPH
# ============================================================================

@dataclass(frozen=True)
class Graph:
    """
    Immutable finite simple undirected graph.

    ``adjacency[v]`` is the ascending tuple of neighbours of vertex ``v``.
    Use :func:`build_graph` to construct instances; it validates the
    invariants this class relies on.
    """
    labels: Tuple[VertexLabel, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    m: int = 0
    family: Optional[str] = None
    edge_count: int = field(init=False)
    _neighbor_sets: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)
    _index: Dict[VertexLabel, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'edge_count', sum(len(n) for n in self.adjacency) // 2)
        object.__setattr__(self, '_neighbor_sets', tuple(frozenset(n) for n in self.adjacency))
        object.__setattr__(self, '_index', {label: i for i, label in enumerate(self.labels)})

    @property
    def n(self) -> int:
        return len(self.labels)

    def vertices(self) -> range:
        return range(len(self.labels))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def index_of(self, label: VertexLabel) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"Vertex {label} is not in this graph")

    def label_of(self, v: int) -> VertexLabel:
        return self.labels[v]

    def has_label(self, label: VertexLabel) -> bool:
        return label in self._index

    def edges(self) -> Iterator[Edge]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u, neighbors in enumerate(self.adjacency):
            for v in neighbors:
                if v > u:
                    yield (u, v)

    def non_edges(self) -> Iterator[Edge]:
        """Absent pairs (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            adjacent = self._neighbor_sets[u]
            for v in range(u + 1, self.n):
                if v not in adjacent:
                    yield (u, v)

    def edge_list(self) -> EdgeList:
        return tuple(self.edges())

    def common_neighbors(self, u: int, v: int) -> List[int]:
        """Ascending common neighbours, by merging the sorted neighbour tuples."""
        a, b = self.adjacency[u], self.adjacency[v]
        i = j = 0
        common = []
        while i < len(a) and j < len(b):
            if a[i] == b[j]:
                common.append(a[i])
                i += 1
                j += 1
            elif a[i] < b[j]:
                i += 1
            else:
                j += 1
        return common

    def with_edges(self, extra: Iterable[Edge], family: Optional[str] = None) -> 'Graph':
        """New graph with ``extra`` edges added; the receiver is left untouched."""
        return build_graph(self.labels, list(self.edges()) + list(extra), m=self.m, family=family)

    def describe(self, v: int) -> str:
        return str(self.labels[v])


def build_graph(
    labels: Sequence[VertexLabel],
    edges: Iterable[Sequence[int]],
    m: int = 0,
    family: Optional[str] = None,
) -> Graph:
    """
    Build an immutable graph from canonical labels and index pairs.

    Args:
        labels: Vertex labels in strictly increasing canonical order
        edges: Vertex-index pairs; duplicates are dropped silently
        m: Family parameter (0 for graphs outside the families)
        family: Family tag stored as metadata

    Returns:
        Graph satisfying symmetry, loop-freeness and sortedness

    Raises:
        SelfLoopError: If a pair (v, v) is given
        IndexOutOfRangeError: If an endpoint is not a vertex index
        LabelOrderError: If labels are duplicated or out of canonical order
    """
    labels = tuple(labels)
    _check_labels(labels, m)

    count = len(labels)
    neighbor_sets: List[set] = [set() for _ in range(count)]
    for u, v in edges:
        for endpoint in (u, v):
            if not 0 <= endpoint < count:
                raise IndexOutOfRangeError(endpoint, count)
        if u == v:
            raise SelfLoopError(u)
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)

    adjacency = tuple(tuple(sorted(neighbors)) for neighbors in neighbor_sets)
    return Graph(labels=labels, adjacency=adjacency, m=m, family=family)


def _check_labels(labels: Tuple[VertexLabel, ...], m: int) -> None:
    hubs = 0
    for position, label in enumerate(labels):
        if label.kind == VertexKind.HUB:
            hubs += 1
            if label.index != 0:
                raise LabelOrderError(f"Hub label carries index {label.index}")
        elif label.index < 1 or (m > 0 and label.index > m):
            raise LabelOrderError(f"Label {label} has index outside 1..{m or 'n'}")
        if position and not labels[position - 1] < label:
            raise LabelOrderError(f"Label {label} breaks the canonical order after {labels[position - 1]}")
    if hubs > 1:
        raise LabelOrderError("At most one hub vertex is allowed")


def rim_graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Graph outside the families, labelled p1..pk, edges on 0-based indices."""
    return build_graph(rim_labels(vertex_count), edges)


def degree_sequence(g: Graph) -> List[int]:
    """Vertex degrees in descending order."""
    return sorted((g.degree(v) for v in g.vertices()), reverse=True)


# ============================================================================
# EXPORT / IMPORT
# ============================================================================

def export_dot(g: Graph) -> str:
    """Undirected DOT document; one node statement per vertex, one edge statement per edge."""
    dot = graphviz.Graph(name='G')
    for label in g.labels:
        dot.node(str(label))
    for u, v in g.edges():
        dot.edge(str(g.labels[u]), str(g.labels[v]))
    return dot.source


def export_json(g: Graph) -> str:
    document = {
        'family': g.family,
        'm': g.m,
        'n': g.n,
        'vertices': [str(label) for label in g.labels],
        'edges': [[str(g.labels[u]), str(g.labels[v])] for u, v in g.edges()],
    }
    return json.dumps(document, indent=2) + '\n'


def import_json(text: str) -> Graph:
    """
    Inverse of :func:`export_json`.

    Raises:
        GraphFormatError: If the document is malformed or references unknown vertices
    """
    try:
        document = json.loads(text)
        family = document['family']
        m = int(document['m'])
        names = list(document['vertices'])
        pairs = [tuple(pair) for pair in document['edges']]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise GraphFormatError(f"Invalid adjacency-JSON document: {str(e)}")

    labels = [VertexLabel.parse(name) for name in names]
    position = {name: i for i, name in enumerate(names)}
    if len(position) != len(names):
        raise GraphFormatError("Duplicate vertex names in adjacency-JSON document")
    if 'n' in document and document['n'] != len(names):
        raise GraphFormatError(f"Field n={document['n']} does not match {len(names)} vertices")

    edges = []
    for pair in pairs:
        if len(pair) != 2 or pair[0] not in position or pair[1] not in position:
            raise GraphFormatError(f"Edge {list(pair)} references unknown vertices")
        edges.append((position[pair[0]], position[pair[1]]))

    graph = build_graph(labels, edges, m=m, family=family)
    logger.debug("Imported %s graph with %s vertices and %s edges", family, graph.n, graph.edge_count)
    return graph
