"""
Exact, witness-producing verifiers for the properties claimed for G_m and H_m.

Every search takes an explicit step budget. Running out of steps raises
BudgetExceededError, which is never reported as a negative answer.
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

from certification.exceptions import BudgetExceededError, InputHasTriangleError, MissingVertexError
from certification.witnesses import (
    ChromaticResult,
    Coloring,
    ColoringCheck,
    CycleCertificate,
    HamiltonianSearch,
    HamiltonianStatus,
    IsomorphismResult,
    Lemma2PathAudit,
    MaximalityReport,
    MaximalityVerdict,
    MycielskiContainment,
    PlanarityVerdict,
    TriangleCheck,
    TriangleWitness,
)
from graphs.exceptions import BadFamilyError
from graphs.families import Family, FamilySpec, build_cycle, mycielskian
from graphs.graph_core import Edge, Graph, VertexKind, VertexLabel, degree_sequence

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 9


class StepCounter:
    """Counts elementary search steps against a budget"""

    def __init__(self, search: str, budget: int):
        self.search = search
        self.budget = budget
        self.steps = 0

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            logger.warning("%s stopped after %s steps", self.search, self.steps)
            raise BudgetExceededError(self.search, self.steps)


# ============================================================================
# TRIANGLES, GIRTH, MAXIMALITY
# ============================================================================

def is_triangle_free(g: Graph) -> TriangleCheck:
    """Intersect the sorted neighbour tuples across every edge."""
    for u, v in g.edges():
        common = g.common_neighbors(u, v)
        if common:
            return TriangleCheck(triangle_free=False, witness=TriangleWitness.of(u, v, common[0]))
    return TriangleCheck(triangle_free=True)


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, None for forests (infinite girth)."""
    best: Optional[int] = None
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def _diametral_non_edges(g: Graph) -> List[Edge]:
    if g.m < 4 or g.m % 2:
        return []
    half = g.m // 2
    pairs = []
    for i in range(1, half + 1):
        a, b = VertexLabel.rim(i), VertexLabel.rim(i + half)
        if g.has_label(a) and g.has_label(b) and not g.has_edge(g.index_of(a), g.index_of(b)):
            pairs.append((g.index_of(a), g.index_of(b)))
    return pairs


def maximality_check(g: Graph, audit: bool = False) -> MaximalityReport:
    """
    Decide maximal triangle-freeness by scanning every non-edge.

    When the graph has even m, an addable diametral rim chord p_i p_{i+m/2}
    is preferred as the witness; otherwise the first addable non-edge in
    lexicographic order is returned.

    Args:
        g: Triangle-free graph
        audit: Attach, for a Maximal verdict, the triangle each non-edge would close

    Raises:
        InputHasTriangleError: If ``g`` is not triangle-free
    """
    check = is_triangle_free(g)
    if not check.triangle_free:
        raise InputHasTriangleError(check.witness)

    for u, v in _diametral_non_edges(g):
        if not g.common_neighbors(u, v):
            return MaximalityReport(verdict=MaximalityVerdict.NOT_MAXIMAL, witness=(u, v))

    closing: Dict[Edge, TriangleWitness] = {}
    for u, v in g.non_edges():
        common = g.common_neighbors(u, v)
        if not common:
            return MaximalityReport(verdict=MaximalityVerdict.NOT_MAXIMAL, witness=(u, v))
        if audit:
            closing[(u, v)] = TriangleWitness.of(u, v, common[0])
    return MaximalityReport(verdict=MaximalityVerdict.MAXIMAL, audit=closing if audit else None)


# ============================================================================
# HAMILTONICITY
# ============================================================================

def find_hamiltonian_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> HamiltonianSearch:
    """
    Backtracking search for a Hamiltonian cycle anchored at vertex 0.

    Vertex 0 is the hub in family graphs. The path grows towards the
    neighbour with the fewest unvisited neighbours of its own, ties broken by
    ascending index; a branch is cut as soon as some unvisited vertex keeps fewer
    than two neighbours it could still be joined to on a cycle.

    Returns:
        FOUND with a verified certificate, or NOT_FOUND after the search
        space is exhausted

    Raises:
        BudgetExceededError: If the budget runs out first
    """
    n = g.n
    if n < 3 or any(g.degree(v) < 2 for v in g.vertices()):
        return HamiltonianSearch(status=HamiltonianStatus.NOT_FOUND)

    anchor = 0
    counter = StepCounter('Hamiltonian cycle search', budget)
    visited = [False] * n
    visited[anchor] = True
    path = [anchor]

    def viable(end: int) -> bool:
        for w in range(n):
            if visited[w]:
                continue
            usable = 0
            for x in g.neighbors(w):
                if not visited[x] or x == end or x == anchor:
                    usable += 1
                    if usable == 2:
                        break
            if usable < 2:
                return False
        return True

    def open_degree(v: int) -> int:
        return sum(1 for x in g.neighbors(v) if not visited[x])

    def extend(end: int) -> bool:
        if len(path) == n:
            return g.has_edge(end, anchor)
        for w in sorted((w for w in g.neighbors(end) if not visited[w]), key=lambda w: (open_degree(w), w)):
            counter.tick()
            visited[w] = True
            path.append(w)
            if viable(w) and extend(w):
                return True
            visited[w] = False
            path.pop()
        return False

    if not extend(anchor):
        logger.debug("No Hamiltonian cycle after %s steps", counter.steps)
        return HamiltonianSearch(status=HamiltonianStatus.NOT_FOUND, steps=counter.steps)

    certificate = CycleCertificate(tuple(path))
    if not certificate.validate(g):
        raise RuntimeError(f"Hamiltonian search produced an invalid cycle {certificate.vertices}")
    logger.debug("Hamiltonian cycle found after %s steps", counter.steps)
    return HamiltonianSearch(status=HamiltonianStatus.FOUND, certificate=certificate, steps=counter.steps)


def lemma2_sequence(m: int) -> Tuple[VertexLabel, ...]:
    """
    The published cycle p_1 q_2 p_3 q_4 ... p_{m-1} q_m a_n q_1 p_m.

    The alternating run covers indices 1..m-2 (p at odd, q at even indices)
    and is followed by p_{m-1} q_m a_n q_1 p_m.
    """
    sequence = [
        VertexLabel.rim(i) if i % 2 else VertexLabel.spoke(i)
        for i in range(1, m - 1)
    ]
    sequence += [
        VertexLabel.rim(m - 1),
        VertexLabel.spoke(m),
        VertexLabel.hub(),
        VertexLabel.spoke(1),
        VertexLabel.rim(m),
    ]
    return tuple(sequence)


def check_lemma2_path(g: Graph, m: int) -> Lemma2PathAudit:
    """
    Check the literal published cycle against ``g``.

    This audit never decides Hamiltonicity; find_hamiltonian_cycle does.
    """
    sequence = lemma2_sequence(m)
    invalid = []
    for i, label in enumerate(sequence):
        following = sequence[(i + 1) % len(sequence)]
        if not (g.has_label(label) and g.has_label(following)) or not g.has_edge(
            g.index_of(label), g.index_of(following)
        ):
            invalid.append((label, following))

    visited = len({label for label in sequence if g.has_label(label)})
    covers_all = visited == g.n and len(sequence) == g.n
    if not covers_all:
        logger.info("Published cycle for m=%s visits %s of %s vertices", m, visited, g.n)
    return Lemma2PathAudit(
        sequence=sequence,
        edges_valid=not invalid,
        covers_all=covers_all,
        visited=visited,
        total=g.n,
        invalid_pairs=tuple(invalid),
    )


# ============================================================================
# COLORING
# ============================================================================

def is_bipartite(g: Graph) -> bool:
    side: Dict[int, int] = {}
    for root in g.vertices():
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def dsatur_coloring(g: Graph) -> Coloring:
    """Greedy coloring in saturation-degree order, ties by degree then lowest index."""
    colors: Dict[int, int] = {}
    neighbor_colors = [set() for _ in g.vertices()]
    while len(colors) < g.n:
        v = max(
            (v for v in g.vertices() if v not in colors),
            key=lambda v: (len(neighbor_colors[v]), g.degree(v), -v),
        )
        c = 1
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for w in g.neighbors(v):
            if w not in colors:
                neighbor_colors[w].add(c)
    return Coloring(colors)


def _k_coloring(g: Graph, k: int, counter: StepCounter) -> Optional[Dict[int, int]]:
    """Backtracking k-colorability with DSATUR branching; colors open in order 1, 2, ..."""
    n = g.n
    colors = [0] * n
    counts = [[0] * (k + 1) for _ in range(n)]
    saturation = [0] * n

    def select() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            key = (saturation[v], g.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for w in g.neighbors(v):
            if counts[w][c] == 0:
                saturation[w] += 1
            counts[w][c] += 1

    def unassign(v: int, c: int) -> None:
        colors[v] = 0
        for w in g.neighbors(v):
            counts[w][c] -= 1
            if counts[w][c] == 0:
                saturation[w] -= 1

    def search(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = select()
        if saturation[v] >= k:
            return False
        # a fresh color is only ever the next unused one
        for c in range(1, min(used + 1, k) + 1):
            if counts[v][c]:
                continue
            counter.tick()
            assign(v, c)
            if search(colored + 1, max(used, c)):
                return True
            unassign(v, c)
        return False

    if search(0, 0):
        return {v: colors[v] for v in range(n)}
    return None


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> ChromaticResult:
    """
    Exact chromatic number with a witness coloring.

    DSATUR gives the upper bound; the lower bound is 2 for graphs with an
    edge and 3 once an odd cycle is detected. Each k between them is decided
    by exhaustive backtracking.

    Raises:
        BudgetExceededError: If the budget runs out before k is decided
    """
    if g.n == 0:
        return ChromaticResult(k=0, coloring=Coloring({}))
    if g.edge_count == 0:
        return ChromaticResult(k=1, coloring=Coloring({v: 1 for v in g.vertices()}), lower_bound=1, greedy_upper_bound=1)

    greedy = dsatur_coloring(g)
    upper = greedy.color_count
    lower = 2 if is_bipartite(g) else 3
    counter = StepCounter('chromatic number search', budget)

    result = ChromaticResult(k=upper, coloring=greedy, lower_bound=lower, greedy_upper_bound=upper)
    for k in range(lower, upper):
        found = _k_coloring(g, k, counter)
        if found is not None:
            result = ChromaticResult(k=k, coloring=Coloring(found), lower_bound=lower, greedy_upper_bound=upper)
            break
        logger.debug("Graph is not %s-colorable (%s steps so far)", k, counter.steps)

    if not verify_coloring(g, result.coloring).proper:
        raise RuntimeError("Chromatic search produced an improper coloring")
    return result


def lemma1_coloring(spec: FamilySpec) -> Coloring:
    """
    The constructive coloring: hub 1, every spoke tip 2, the rim alternating
    1 and 3, and for odd m the last rim vertex p_m gets color 4.

    Raises:
        BadFamilyError: For families other than G and H
    """
    if spec.family not in (Family.G, Family.H):
        raise BadFamilyError(f"The constructive coloring covers G and H only, got {spec.family.value}")
    m = spec.m
    colors = {0: 1}
    for i in range(1, m + 1):
        colors[m + i] = 2
        colors[i] = 1 if i % 2 else 3
    if m % 2:
        colors[m] = 4
    return Coloring(colors)


def verify_coloring(g: Graph, c: Coloring) -> ColoringCheck:
    """
    Raises:
        MissingVertexError: If some vertex has no color
    """
    for v in g.vertices():
        if c.color_of(v) is None:
            raise MissingVertexError(v)
    for u, v in g.edges():
        if c.colors[u] == c.colors[v]:
            return ColoringCheck(proper=False, violating_edge=(u, v))
    return ColoringCheck(proper=True)


# ============================================================================
# PLANARITY, MYCIELSKI, ISOMORPHISM
# ============================================================================

def nonplanarity_edge_bound(g: Graph) -> PlanarityVerdict:
    """Euler bound: a triangle-free planar graph has at most 2|V| - 4 edges."""
    bound = 2 * g.n - 4
    triangle_free = is_triangle_free(g).triangle_free
    certified = triangle_free and g.n >= 3 and g.edge_count > bound
    return PlanarityVerdict(certified=certified, edge_count=g.edge_count, bound=bound, triangle_free=triangle_free)


def mycielski_subgraph_check(gm: Graph) -> MycielskiContainment:
    """Check that the Mycielskian of C_m sits inside G_m under the identity label map."""
    inner = mycielskian(build_cycle(gm.m))
    missing = []
    for u, v in inner.edges():
        a, b = inner.labels[u], inner.labels[v]
        if not (gm.has_label(a) and gm.has_label(b) and gm.has_edge(gm.index_of(a), gm.index_of(b))):
            missing.append((a, b))
    present = inner.edge_count - len(missing)
    return MycielskiContainment(
        holds=not missing,
        missing_edges=tuple(missing),
        extra_edges=gm.edge_count - present,
    )


def _signature(g: Graph, v: int) -> Tuple[int, Tuple[int, ...]]:
    return (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbors(v))))


def isomorphism_check(g1: Graph, g2: Graph, budget: int = DEFAULT_BUDGET) -> IsomorphismResult:
    """
    Backtracking vertex-map search, after comparing cheap invariants.

    Vertices of ``g1`` are mapped in descending degree order, candidates in
    ``g2`` must share the vertex signature (degree and neighbour degrees).

    Raises:
        BudgetExceededError: If the budget runs out before a decision
    """
    if g1.n != g2.n or g1.edge_count != g2.edge_count or degree_sequence(g1) != degree_sequence(g2):
        return IsomorphismResult(isomorphic=False)
    sig1 = [_signature(g1, v) for v in g1.vertices()]
    sig2 = [_signature(g2, v) for v in g2.vertices()]
    if sorted(sig1) != sorted(sig2):
        return IsomorphismResult(isomorphic=False)

    order = sorted(g1.vertices(), key=lambda v: (-g1.degree(v), v))
    counter = StepCounter('isomorphism search', budget)
    mapping: Dict[int, int] = {}
    used = set()

    def search(position: int) -> bool:
        if position == len(order):
            return True
        v = order[position]
        for w in g2.vertices():
            if w in used or sig2[w] != sig1[v]:
                continue
            counter.tick()
            if all(g1.has_edge(v, u) == g2.has_edge(w, image) for u, image in mapping.items()):
                mapping[v] = w
                used.add(w)
                if search(position + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    if not search(0):
        return IsomorphismResult(isomorphic=False, steps=counter.steps)

    forward = all(g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edges())
    inverse = {w: v for v, w in mapping.items()}
    backward = all(g1.has_edge(inverse[u], inverse[v]) for u, v in g2.edges())
    if not (forward and backward):
        raise RuntimeError("Isomorphism search produced a mapping that is not edge-preserving")
    return IsomorphismResult(isomorphic=True, mapping=dict(sorted(mapping.items())), steps=counter.steps)


def rim_rim(g: Graph, pair: Optional[Edge]) -> bool:
    if pair is None:
        return False
    return all(g.labels[v].kind == VertexKind.RIM for v in pair)


def is_diametral(g: Graph, pair: Optional[Edge]) -> bool:
    """True for rim chords p_i p_{i+m/2}."""
    if not rim_rim(g, pair) or g.m % 2:
        return False
    i, j = sorted(g.labels[v].index for v in pair)
    return j - i == g.m // 2

