"""
Django command to list the orbit representatives that exist at q.
"""
from django.core.management.base import BaseCommand

from core import cli
from geometry.exceptions import GeometryError
from geometry.reports import representative_rows


class Command(BaseCommand):
    """Print one representative plane per orbit with its distribution."""
    help = __doc__

    def add_arguments(self, parser):
        cli.add_field_arguments(parser)
        cli.add_format_argument(parser, default='table')
        parser.add_argument(
            '--stabilizers', action='store_true',
            help='Also compute stabilizer orders and orbit sizes.',
        )

    def handle(self, *args, **options):
        """Entrypoint for command."""
        F = cli.field_from_options(options)
        try:
            rows = representative_rows(F, options['stabilizers'])
        except GeometryError as exc:
            raise cli.command_error(exc) from exc

        if options['format'] == 'json':
            self.stdout.write(cli.dumps(rows))
            return
        headers = list(rows[0])
        cli.write_rows(
            self.stdout, options['format'], headers,
            [[row[key] for key in headers] for row in rows],
        )
