import logging
from pathlib import Path

from django.core.management import CommandError
from django.core.management.base import BaseCommand

from certification.management.options import USAGE_ERROR, add_out_argument, emit
from certification.management.commands.build import EXPORTERS
from graphs.exceptions import GraphError
from graphs.graph_core import import_json

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Re-emit an adjacency JSON file as DOT or canonical JSON'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--input', required=True, help='Adjacency JSON file')
        parser.add_argument('--format', choices=sorted(EXPORTERS), default='dot')
        add_out_argument(parser)

    def handle(self, *args, **options):
        path = Path(options['input'])
        try:
            graph = import_json(path.read_text(encoding='utf-8'))
        except OSError as e:
            raise CommandError(f"Cannot read {path}: {e}", returncode=USAGE_ERROR)
        except GraphError as e:
            raise CommandError(f"{path}: {e}", returncode=USAGE_ERROR)

        logger.info("Loaded %s vertices and %s edges from %s", graph.n, graph.edge_count, path)
        emit(self, EXPORTERS[options['format']](graph), options['out'])
