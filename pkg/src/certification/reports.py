"""
Certification runs for one family instance and their JSON / CSV shapes.

A run executes the selected checks, embeds every witness as vertex label
strings, and evaluates the claims made for G_m and H_m. Discrepancies with
the published claims are recorded as data.
"""

import json
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

import jsonschema
from django.conf import settings

from certification import certify
from certification.exceptions import BudgetExceededError, InputHasTriangleError
from graphs.families import Family, FamilySpec, offset_classes, remark1_augment
from graphs.graph_core import Graph

logger = logging.getLogger(__name__)

REPORT_VERSION = '1'

CHECKS = ('color', 'triangle', 'maximal', 'hamilton', 'girth', 'planar', 'mycielski', 'remark1')

SCHEMA_PATH = Path(__file__).resolve().parent / 'schemas' / 'property_report.schema.json'

SURVEY_COLUMNS = (
    'm', 'family', 'n', 'edges', 'girth', 'chromatic', 'triangle_free', 'maximal_tf',
    'hamiltonian', 'nonplanar_certified', 'mycielski_subgraph', 'remark1', 'ms_elapsed',
)

NOT_APPLICABLE = 'not_applicable'
INCONCLUSIVE = 'inconclusive'


class ClaimStatus(str, Enum):
    VERIFIED = 'verified'
    FAILED = 'failed'
    DISCREPANCY = 'discrepancy'
    INCONCLUSIVE = 'inconclusive'


def parse_checks(raw: Optional[str]) -> List[str]:
    """Comma-separated check names, ``all`` or empty for every check."""
    if not raw or raw.strip() == 'all':
        return list(CHECKS)
    names = [name.strip() for name in raw.split(',') if name.strip()]
    if 'all' in names:
        return list(CHECKS)
    unknown = sorted(set(names) - set(CHECKS))
    if unknown:
        raise ValueError(f"Unknown checks: {', '.join(unknown)}; choose from {', '.join(CHECKS)} or all")
    return [name for name in CHECKS if name in names]


def _labels(g: Graph, vertices: Iterable[int]) -> List[str]:
    return [str(g.labels[v]) for v in vertices]


def degree_summary(g: Graph) -> Dict[str, Any]:
    """Degree range, degrees per vertex kind and rim-spoke edge counts per offset."""
    by_kind: Dict[str, List[int]] = {}
    for v in g.vertices():
        kind = g.labels[v].kind.name.lower()
        by_kind.setdefault(kind, []).append(g.degree(v))
    degrees = [g.degree(v) for v in g.vertices()]
    return {
        'min': min(degrees) if degrees else 0,
        'max': max(degrees) if degrees else 0,
        'by_kind': {kind: sorted(set(values)) for kind, values in sorted(by_kind.items())},
        'offset_classes': {
            str(residue): count for residue, count in (offset_classes(g).items() if g.m else ())
        },
    }


@dataclass
class PropertyReport:
    family: str
    m: int
    n: int
    edge_count: int
    degree_summary: Dict[str, Any]
    version: str = REPORT_VERSION
    checks: List[str] = field(default_factory=list)
    girth: Any = None
    chromatic_number: Optional[int] = None
    chromatic_witness: Optional[Dict[str, int]] = None
    lemma1_coloring: Optional[Dict[str, Any]] = None
    triangle_free: Optional[bool] = None
    triangle_witness: Optional[List[str]] = None
    maximal_triangle_free: Optional[bool] = None
    maximality_witness: Optional[List[str]] = None
    hamiltonian: Optional[bool] = None
    hamiltonian_certificate: Optional[List[str]] = None
    lemma2_literal_path: Optional[Dict[str, Any]] = None
    nonplanarity: Optional[Dict[str, Any]] = None
    mycielski_subgraph: Optional[Dict[str, Any]] = None
    remark1: Optional[Dict[str, Any]] = None
    claims: Dict[str, str] = field(default_factory=dict)
    discrepancies: List[str] = field(default_factory=list)
    inconclusive: List[str] = field(default_factory=list)
    elapsed_ms: Dict[str, float] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        """0 verified, 1 claim failed or discrepancy, 3 inconclusive."""
        statuses = set(self.claims.values())
        if ClaimStatus.FAILED.value in statuses or self.discrepancies:
            return 1
        if self.inconclusive:
            return 3
        return 0

    @property
    def total_ms(self) -> float:
        return round(sum(self.elapsed_ms.values()), 3)


# ============================================================================
# CHECK RUNNERS
# ============================================================================

class _Run:
    """State shared by the check runners of one certification"""

    def __init__(self, spec: FamilySpec, graph: Graph, budget: int, report: PropertyReport):
        self.spec = spec
        self.graph = graph
        self.budget = budget
        self.report = report

    @property
    def is_g(self) -> bool:
        return self.spec.family == Family.G

    @property
    def is_h(self) -> bool:
        return self.spec.family == Family.H

    def claim(self, name: str, holds: bool) -> None:
        self.report.claims[name] = (ClaimStatus.VERIFIED if holds else ClaimStatus.FAILED).value
        if not holds:
            logger.warning("Claim '%s' fails for %s", name, self.spec)


def _check_color(run: _Run) -> None:
    g = run.graph
    result = certify.chromatic_number(g, run.budget)
    run.report.chromatic_number = result.k
    run.report.chromatic_witness = result.coloring.labelled(g)
    if run.is_g or run.is_h:
        constructive = certify.lemma1_coloring(run.spec)
        proper = certify.verify_coloring(g, constructive).proper
        run.report.lemma1_coloring = {'proper': proper, 'color_count': constructive.color_count}
        expected = 4 if run.is_g else 3
        run.claim('chromatic_number', result.k == expected)
        run.claim('constructive_coloring', proper and constructive.color_count == result.k)


def _check_triangle(run: _Run) -> None:
    g = run.graph
    check = certify.is_triangle_free(g)
    run.report.triangle_free = check.triangle_free
    run.report.triangle_witness = None if check.triangle_free else _labels(g, check.witness.vertices)
    if run.is_g or run.is_h:
        run.claim('triangle_free', check.triangle_free)


def _check_maximal(run: _Run) -> None:
    g = run.graph
    try:
        result = certify.maximality_check(g)
    except InputHasTriangleError as e:
        run.report.maximal_triangle_free = False
        run.report.maximality_witness = None
        logger.info("Maximality skipped, input has triangle %s", e.witness.vertices)
        return
    run.report.maximal_triangle_free = result.maximal
    run.report.maximality_witness = None if result.maximal else _labels(g, result.witness)
    if run.is_g:
        run.claim('maximal', result.maximal)
    elif run.is_h:
        run.claim('not_maximal', not result.maximal and certify.rim_rim(g, result.witness))


def _check_hamilton(run: _Run) -> None:
    g = run.graph
    if run.is_g or run.is_h:
        audit = certify.check_lemma2_path(g, run.spec.m)
        run.report.lemma2_literal_path = {
            'edges_valid': audit.edges_valid,
            'covers_all': audit.covers_all,
            'visited': audit.visited,
            'total': audit.total,
            'sequence': [str(label) for label in audit.sequence],
        }
    search = certify.find_hamiltonian_cycle(g, run.budget)
    run.report.hamiltonian = search.found
    run.report.hamiltonian_certificate = _labels(g, search.certificate.vertices) if search.found else None
    if run.is_g or run.is_h:
        run.claim('hamiltonian', search.found)


def _check_girth(run: _Run) -> None:
    value = certify.girth(run.graph)
    run.report.girth = 'infinite' if value is None else value
    if run.is_g or run.is_h:
        run.claim('girth_4', value == 4)


def _check_planar(run: _Run) -> None:
    verdict = certify.nonplanarity_edge_bound(run.graph)
    run.report.nonplanarity = {
        'certified': verdict.certified,
        'edge_count': verdict.edge_count,
        'bound': verdict.bound,
    }
    if run.is_g or run.is_h:
        run.claim('nonplanar', verdict.certified)


def _check_mycielski(run: _Run) -> None:
    if not run.is_g:
        run.report.mycielski_subgraph = {'verdict': NOT_APPLICABLE, 'extra_edges': None, 'missing_edges': []}
        return
    m = run.spec.m
    result = certify.mycielski_subgraph_check(run.graph)
    run.report.mycielski_subgraph = {
        'verdict': 'holds' if result.holds else 'fails',
        'extra_edges': result.extra_edges,
        'missing_edges': [[str(a), str(b)] for a, b in result.missing_edges],
    }
    run.claim('mycielski_subgraph', result.holds and result.extra_edges == m * (m - 5) // 2)


def _check_remark1(run: _Run) -> None:
    if not run.is_h:
        run.report.remark1 = {'verdict': NOT_APPLICABLE, 'witness': None, 'added_edges': []}
        return
    augmentation = remark1_augment(run.graph)
    augmented = augmentation.graph
    entry = {
        'verdict': 'verified',
        'witness': None,
        'added_edges': _labels_pairs(augmented, augmentation.added),
    }
    if augmentation.discrepancy:
        entry['verdict'] = 'triangle_introduced'
        entry['witness'] = [str(label) for label in augmentation.witness]
        run.report.claims['chords_make_maximal'] = ClaimStatus.DISCREPANCY.value
        run.report.discrepancies.append(
            f"remark1: diametral chords of H_{run.spec.m} introduce the triangle {'-'.join(entry['witness'])}"
        )
    else:
        run.claim('chords_make_maximal', certify.maximality_check(augmented).maximal)
        if run.report.claims['chords_make_maximal'] != ClaimStatus.VERIFIED.value:
            entry['verdict'] = 'not_maximal'
    run.report.remark1 = entry


def _labels_pairs(g: Graph, pairs: Sequence) -> List[List[str]]:
    return [[str(g.labels[u]), str(g.labels[v])] for u, v in pairs]


RUNNERS: Dict[str, Callable[[_Run], None]] = {
    'color': _check_color,
    'triangle': _check_triangle,
    'maximal': _check_maximal,
    'hamilton': _check_hamilton,
    'girth': _check_girth,
    'planar': _check_planar,
    'mycielski': _check_mycielski,
    'remark1': _check_remark1,
}


def certify_instance(
    spec: FamilySpec,
    checks: Optional[Sequence[str]] = None,
    budget: int = certify.DEFAULT_BUDGET,
    omit_timings: bool = False,
) -> PropertyReport:
    """Build the graph named by ``spec`` and run the selected checks on it."""
    selected = [name for name in CHECKS if name in (checks or CHECKS)]
    graph = spec.build()
    report = PropertyReport(
        family=spec.family.value,
        m=spec.m,
        n=graph.n,
        edge_count=graph.edge_count,
        degree_summary=degree_summary(graph),
        checks=selected,
        version=getattr(settings, 'GGG_REPORT_VERSION', REPORT_VERSION),
    )
    run = _Run(spec, graph, budget, report)
    logger.info("Certifying %s with checks %s", spec, ','.join(selected))

    for name in selected:
        started = time.perf_counter()
        try:
            RUNNERS[name](run)
        except BudgetExceededError as e:
            report.inconclusive.append(name)
            logger.warning("Check '%s' on %s is inconclusive: %s", name, spec, e)
        elapsed = 0.0 if omit_timings else round((time.perf_counter() - started) * 1000, 3)
        report.elapsed_ms[name] = elapsed

    return report


# ============================================================================
# SERIALIZATION
# ============================================================================

def report_to_json(report: PropertyReport) -> str:
    from certification.serializers import PropertyReportSerializer  # local import to avoid cycles

    data = PropertyReportSerializer(report).data
    validate_report(data)
    return json.dumps(data, indent=2) + '\n'


def load_schema() -> Dict[str, Any]:
    path = Path(getattr(settings, 'GGG_REPORT_SCHEMA', SCHEMA_PATH))
    return json.loads(path.read_text(encoding='utf-8'))


def validate_report(data: Dict[str, Any]) -> None:
    """
    Raises:
        jsonschema.ValidationError: If ``data`` does not match the published schema
    """
    jsonschema.validate(instance=json.loads(json.dumps(data)), schema=load_schema())


def _csv_bool(value: Optional[bool]) -> str:
    if value is None:
        return INCONCLUSIVE
    return 'true' if value else 'false'


def survey_row(report: PropertyReport) -> Dict[str, Any]:
    """One survey CSV row; every column but ms_elapsed is deterministic."""
    myc = report.mycielski_subgraph or {}
    if report.family != Family.G.value:
        mycielski = NOT_APPLICABLE
    elif myc.get('verdict') in ('holds', 'fails'):
        mycielski = _csv_bool(myc['verdict'] == 'holds')
    else:
        mycielski = INCONCLUSIVE

    remark = report.remark1 or {}
    nonplanar = report.nonplanarity or {}
    return {
        'm': report.m,
        'family': report.family,
        'n': report.n,
        'edges': report.edge_count,
        'girth': report.girth if report.girth is not None else INCONCLUSIVE,
        'chromatic': report.chromatic_number if report.chromatic_number is not None else INCONCLUSIVE,
        'triangle_free': _csv_bool(report.triangle_free),
        'maximal_tf': _csv_bool(report.maximal_triangle_free),
        'hamiltonian': _csv_bool(report.hamiltonian),
        'nonplanar_certified': _csv_bool(nonplanar.get('certified')),
        'mycielski_subgraph': mycielski,
        'remark1': remark.get('verdict', INCONCLUSIVE),
        'ms_elapsed': report.total_ms,
    }

