"""
Celery tasks for survey rows.

Each row is an independent certification of one family instance; the survey
command fans them out as a group and gathers the results in order of m.
"""

import logging

from celery import shared_task

from certification.reports import certify_instance, survey_row
from certification.serializers import SurveyRowSerializer
from graphs.families import FamilySpec

logger = logging.getLogger(__name__)


@shared_task()
def certify_survey_row(m: int, budget: int, omit_timings: bool = False) -> dict:
    """
    Celery task certifying G_m (odd m) or H_m (even m) for one survey row.
    """
    logger.debug("Starting survey row for m=%s", m)
    return run_survey_row(m, budget, omit_timings)


def run_survey_row(m: int, budget: int, omit_timings: bool = False) -> dict:
    """
    Core logic of certify_survey_row, separated from the task for reuse.

    Returns:
        The serialized row plus the report's exit code under ``exit_code``
    """
    report = certify_instance(FamilySpec.for_survey(m), budget=budget, omit_timings=omit_timings)
    row = dict(SurveyRowSerializer(survey_row(report)).data)
    row['exit_code'] = report.exit_code
    return row
