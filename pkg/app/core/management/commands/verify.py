"""
Django command to run named verification checks.
"""
from django.core.management.base import BaseCommand, CommandError

from core import cli
from geometry.checks import CHECKS, run_check
from geometry.exceptions import GeometryError
from geometry.orbits import census

CENSUS_CHECKS = ('nonexistence', 'orbit-stabilizer')


class Command(BaseCommand):
    """Run verification checks and report pass/fail per check."""
    help = __doc__

    def add_arguments(self, parser):
        cli.add_field_arguments(parser)
        cli.add_format_argument(parser)
        parser.add_argument(
            '--check', action='append', choices=sorted(CHECKS) + ['all'],
            help='Check to run; repeat for several. Defaults to table1.',
        )
        parser.add_argument('--samples', type=int, default=0)
        parser.add_argument('--seed', type=int)
        parser.add_argument('--shards', type=int)
        parser.add_argument(
            '--slow', action='store_true',
            help='Allow the census-based checks at q=8.',
        )
        parser.add_argument(
            '--exhaustive', action='store_true',
            help='Test every line of the paired orbit in bijection checks.',
        )

    def _census(self, F, names, options):
        wanted = set(CENSUS_CHECKS)
        if options['exhaustive']:
            wanted.update(name for name in CHECKS if 'bijection' in name)
        if not wanted.intersection(names):
            return None
        if F.q > 4 and not options['slow']:
            return None
        try:
            return census(F, shards=options['shards'])
        except GeometryError as exc:
            raise cli.command_error(exc) from exc

    def handle(self, *args, **options):
        """Entrypoint for command."""
        F = cli.field_from_options(options)
        names = options['check'] or ['table1']
        if 'all' in names:
            names = list(CHECKS)

        extra = {
            'samples': options['samples'],
            'seed': options['seed'],
            'exhaustive': options['exhaustive'],
        }
        shared = self._census(F, names, options)
        if shared is not None:
            extra['census'] = shared
        results = [run_check(name, F, **extra) for name in names]

        report = {
            'q': F.q,
            'modulus': F.modulus_bits,
            'checks': {
                r.name: {'passed': r.passed, 'details': r.details}
                for r in results
            },
        }
        if options['format'] == 'json':
            self.stdout.write(cli.dumps(report))
        else:
            cli.write_rows(
                self.stdout, options['format'], ['check', 'result'],
                [[r.name, 'pass' if r.passed else 'FAIL'] for r in results],
            )

        failed = [r.name for r in results if not r.passed]
        if failed:
            raise CommandError(
                f'checks failed: {", ".join(failed)}',
                returncode=cli.EXIT_VERIFY_FAILED,
            )
