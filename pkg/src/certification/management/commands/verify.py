import logging

from django.core.management import CommandError
from django.core.management.base import BaseCommand

from certification.management.options import (
    USAGE_ERROR,
    add_budget_argument,
    add_family_arguments,
    add_out_argument,
    emit,
    family_spec,
)
from certification.reports import CHECKS, certify_instance, parse_checks, report_to_json

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Certify the claimed properties of one family instance and write a JSON report'
    requires_system_checks = []

    def add_arguments(self, parser):
        add_family_arguments(parser)
        parser.add_argument(
            '--checks',
            default='all',
            help=f"Comma-separated subset of {','.join(CHECKS)}, or all",
        )
        add_out_argument(parser)
        add_budget_argument(parser)
        parser.add_argument('--omit-timings', action='store_true', help='Report every elapsed time as 0')

    def handle(self, *args, **options):
        spec = family_spec(options['family'], options['m'])
        try:
            checks = parse_checks(options['checks'])
        except ValueError as e:
            raise CommandError(str(e), returncode=USAGE_ERROR)

        report = certify_instance(spec, checks, options['budget'], omit_timings=options['omit_timings'])
        emit(self, report_to_json(report), options['out'])

        code = report.exit_code
        logger.info("Certified %s, exit code %s", spec, code)
        if code == 1:
            failed = [name for name, status in report.claims.items() if status != 'verified']
            raise CommandError(f"{spec}: claims not verified: {', '.join(failed)}", returncode=code)
        if code == 3:
            raise CommandError(
                f"{spec}: inconclusive within budget {options['budget']}: {', '.join(report.inconclusive)}",
                returncode=code,
            )
