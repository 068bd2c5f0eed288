"""
Django command to classify one plane of PG(5,q).
"""
from django.core.management.base import BaseCommand

from core import cli
from geometry.exceptions import GeometryError
from geometry.planes import classify_plane_record, full_record
from geometry.reports import record_dict


class Command(BaseCommand):
    """Print the orbit label and invariants of a plane."""
    help = (
        'Classify a plane given as 18 hexadecimal field elements (3x6, '
        'row-major) or as a symmetric pencil such as "x y . ; y z . ; . . .".'
    )

    def add_arguments(self, parser):
        parser.add_argument('plane', nargs='+')
        cli.add_field_arguments(parser)
        cli.add_format_argument(parser)
        parser.add_argument(
            '--lines', action='store_true',
            help='Also compute the line-orbit distribution (q > 2).',
        )

    def handle(self, *args, **options):
        """Entrypoint for command."""
        F = cli.field_from_options(options)
        plane = cli.plane_from_text(F, ' '.join(options['plane']))
        try:
            if options['lines']:
                label, record = full_record(plane)
            else:
                label, record = classify_plane_record(plane)
        except GeometryError as exc:
            raise cli.command_error(exc) from exc

        data = record_dict(plane, label, record)
        if options['format'] == 'json':
            self.stdout.write(cli.dumps(data))
        else:
            cli.write_rows(
                self.stdout, options['format'], ['field', 'value'],
                [[key, data[key]] for key in sorted(data)],
            )
