import csv
import io
import logging

from celery import group
from django.conf import settings
from django.core.management import CommandError
from django.core.management.base import BaseCommand

from certification.management.options import USAGE_ERROR, add_budget_argument, add_out_argument, emit
from certification.reports import INCONCLUSIVE, SURVEY_COLUMNS
from certification.tasks import certify_survey_row

logger = logging.getLogger(__name__)

MIN_SURVEY_M = 5


class Command(BaseCommand):
    help = 'Certify G_m (odd m) and H_m (even m) over a range of m and write a CSV table'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--m-min', type=int, default=5)
        parser.add_argument('--m-max', type=int, default=13)
        add_out_argument(parser)
        add_budget_argument(parser)
        parser.add_argument('--unsafe-max', action='store_true', help='Allow m above the desk-scale limit')
        parser.add_argument('--omit-timings', action='store_true', help='Write 0 in the ms_elapsed column')

    def handle(self, *args, **options):
        m_min, m_max = options['m_min'], options['m_max']
        self._check_range(m_min, m_max, options['unsafe_max'])

        job = group(
            certify_survey_row.s(m, options['budget'], options['omit_timings'])
            for m in range(m_min, m_max + 1)
        ).apply_async()
        rows = sorted((result.get() for result in job.results), key=lambda row: row['m'])

        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=SURVEY_COLUMNS, lineterminator='\n', extrasaction='ignore')
        writer.writeheader()
        writer.writerows(rows)
        emit(self, buffer.getvalue(), options['out'])

        inconclusive = [row['m'] for row in rows if INCONCLUSIVE in row.values()]
        logger.info("Survey %s..%s wrote %s rows", m_min, m_max, len(rows))
        if inconclusive:
            raise CommandError(
                f"Rows inconclusive within budget {options['budget']}: m = {', '.join(map(str, inconclusive))}",
                returncode=3,
            )

    def _check_range(self, m_min: int, m_max: int, unsafe: bool) -> None:
        limit = getattr(settings, 'GGG_SURVEY_MAX_M', 15)
        if m_min < MIN_SURVEY_M:
            raise CommandError(f"--m-min must be at least {MIN_SURVEY_M}, got {m_min}", returncode=USAGE_ERROR)
        if m_min > m_max:
            raise CommandError(f"--m-min {m_min} exceeds --m-max {m_max}", returncode=USAGE_ERROR)
        if m_max > limit and not unsafe:
            raise CommandError(
                f"--m-max {m_max} exceeds the desk-scale limit {limit}; pass --unsafe-max to run it anyway",
                returncode=USAGE_ERROR,
            )
