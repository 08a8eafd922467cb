import logging

from django.core.management.base import BaseCommand

from certification.management.options import add_family_arguments, add_out_argument, emit, family_spec
from graphs.graph_core import export_dot, export_json

logger = logging.getLogger(__name__)

EXPORTERS = {
    'dot': export_dot,
    'json': export_json,
}


class Command(BaseCommand):
    help = 'Build a family graph and export it as DOT or adjacency JSON'
    requires_system_checks = []

    def add_arguments(self, parser):
        add_family_arguments(parser)
        parser.add_argument('--format', choices=sorted(EXPORTERS), default='dot')
        add_out_argument(parser)

    def handle(self, *args, **options):
        spec = family_spec(options['family'], options['m'])
        graph = spec.build()
        logger.info("Built %s with %s vertices and %s edges", spec, graph.n, graph.edge_count)
        emit(self, EXPORTERS[options['format']](graph), options['out'])
