"""
Django command to run a census of the planes meeting the Veronese surface.
"""
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from core import cli
from core.models import CensusRun
from geometry.conf import geometry_setting
from geometry.exceptions import GeometryError
from geometry.orbits import GROUPS, census, verify_nonexistence
from geometry.planes import valid_labels
from geometry.reports import dumps_body, write_census

logger = logging.getLogger(__name__)

SAMPLED_CENSUS_SAMPLES = 1000


def census_checks(result):
    """Sub-checks of a finished census as (name, passed) pairs."""
    checks = [(
        'nonexistence',
        verify_nonexistence(
            result.q, result.distributions, result.witnesses,
        ).passed,
    )]
    if result.complete and result.group == 'pgl3':
        expected = [str(label) for label in valid_labels(result.q)]
        checks.append(('labels', result.labels() == expected))
    return checks


class Command(BaseCommand):
    """Classify every plane of PG(5,q) meeting V(F_q) and save the census."""
    help = __doc__

    def add_arguments(self, parser):
        cli.add_field_arguments(parser)
        cli.add_format_argument(parser, default='table')
        parser.add_argument('--group', choices=GROUPS, default='pgl3')
        parser.add_argument('--shards', type=int)
        parser.add_argument(
            '--slow', action='store_true',
            help='Run the exhaustive census at q=8.',
        )
        parser.add_argument(
            '--anchors', type=int, default=3,
            help='Veronese points enumerated by a sampled census.',
        )
        parser.add_argument(
            '--samples', type=int,
            help='Random planes classified on top of a sampled census '
                 f'(default {SAMPLED_CENSUS_SAMPLES}).',
        )
        parser.add_argument('--seed', type=int)
        parser.add_argument('--output-dir')

    def handle(self, *args, **options):
        """Entrypoint for command."""
        F = cli.field_from_options(options)
        shards = options['shards'] or geometry_setting('SHARDS')
        if shards < 1:
            raise CommandError('--shards must be positive', returncode=1)
        full = F.q <= 4 or options['slow'] or geometry_setting('SLOW_SUITE')
        samples = options['samples']
        if samples is None:
            samples = 0 if full else SAMPLED_CENSUS_SAMPLES
        if not full:
            self.stdout.write(
                f'q={F.q}: sampled census, pass --slow for all planes'
            )
        try:
            result = census(
                F,
                group=options['group'],
                shards=shards,
                full=full,
                anchors=options['anchors'],
                samples=samples,
                seed=options['seed'],
            )
        except GeometryError as exc:
            raise cli.command_error(exc) from exc

        directory = options['output_dir'] or geometry_setting('CENSUS_DIR')
        path = write_census(result, Path(directory))
        run = CensusRun.objects.create_from_census(result, shards, path)
        logger.info('saved census run %d', run.id)

        if options['format'] == 'json':
            self.stdout.write(dumps_body(result))
        else:
            rows = [[label, count] for label, count in result.counts.items()]
            rows.append(['total', result.total])
            cli.write_rows(
                self.stdout, options['format'], ['label', 'count'], rows,
            )
        self.stdout.write(f'census written to {path}')

        failed = [name for name, passed in census_checks(result) if not passed]
        if failed:
            raise CommandError(
                f'census checks failed: {", ".join(failed)}',
                returncode=cli.EXIT_VERIFY_FAILED,
            )
        self.stdout.write(self.style.SUCCESS(
            f'{len(result.counts)} classes, {result.total} planes'
        ))
