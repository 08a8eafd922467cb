"""
Arguments and output handling shared by the certification commands.
"""

from pathlib import Path
from typing import Optional

from django.conf import settings
from django.core.management import CommandError

from certification.certify import DEFAULT_BUDGET
from graphs.exceptions import FamilyError
from graphs.families import FAMILY_TAGS, FamilySpec

USAGE_ERROR = 2


def add_family_arguments(parser) -> None:
    parser.add_argument('--family', required=True, choices=sorted(FAMILY_TAGS), help='Family tag')
    parser.add_argument('--m', type=int, required=True, help='Family parameter m')


def add_budget_argument(parser) -> None:
    parser.add_argument(
        '--budget',
        type=int,
        default=getattr(settings, 'GGG_BUDGET', DEFAULT_BUDGET),
        help='Search step budget for the exact searches',
    )


def add_out_argument(parser) -> None:
    parser.add_argument('--out', default=None, help='Write to this path instead of stdout')


def family_spec(tag: str, m: int) -> FamilySpec:
    """
    Raises:
        CommandError: With the usage exit code for bad parity or a too small m
    """
    try:
        return FamilySpec.from_tag(tag, m)
    except FamilyError as e:
        raise CommandError(str(e), returncode=USAGE_ERROR)


def emit(command, text: str, out: Optional[str]) -> None:
    """Write ``text`` verbatim to ``out`` or to the command's stdout."""
    if out:
        Path(out).write_text(text, encoding='utf-8')
    else:
        command.stdout.write(text, ending='')
