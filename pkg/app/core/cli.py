"""
Options, exit codes and output formats shared by the geometry commands.
"""
import csv
import json

from django.core.management.base import CommandError

from geometry.exceptions import GeometryError, OutOfScopeError
from geometry.field import field_for
from geometry.parsing import parse_plane

EXIT_USAGE = 1
EXIT_OUT_OF_SCOPE = 2
EXIT_VERIFY_FAILED = 3

FORMATS = ('json', 'csv', 'table')


def add_field_arguments(parser):
    parser.add_argument(
        '--q', type=int, required=True,
        help='Order of the field, a power of two.',
    )
    parser.add_argument(
        '--modulus',
        help='Irreducible modulus as an MSB-first bit string.',
    )


def add_format_argument(parser, default='json'):
    parser.add_argument('--format', choices=FORMATS, default=default)


def command_error(exc):
    """CommandError carrying the exit code of a geometry error."""
    if isinstance(exc, OutOfScopeError):
        return CommandError(str(exc), returncode=EXIT_OUT_OF_SCOPE)
    return CommandError(str(exc), returncode=EXIT_USAGE)


def field_from_options(options):
    try:
        return field_for(options['q'], modulus=options.get('modulus'))
    except GeometryError as exc:
        raise command_error(exc) from exc


def plane_from_text(F, text):
    try:
        return parse_plane(F, text)
    except GeometryError as exc:
        raise command_error(exc) from exc


def dumps(data):
    return json.dumps(data, ensure_ascii=False, sort_keys=True, indent=2)


def cell(value):
    if isinstance(value, (list, tuple)):
        return ' '.join(cell(x) for x in value)
    if isinstance(value, dict):
        return ' '.join(f'{k}={cell(v)}' for k, v in value.items())
    return '' if value is None else str(value)


def write_rows(stdout, fmt, headers, rows):
    """Write rows as csv or as an aligned table."""
    rows = [[cell(x) for x in row] for row in rows]
    if fmt == 'csv':
        writer = csv.writer(stdout, lineterminator='\n')
        writer.writerow(headers)
        writer.writerows(rows)
        return
    widths = [max(len(x) for x in col) for col in zip(headers, *rows)]
    for row in [headers, *rows]:
        stdout.write(
            '  '.join(x.ljust(w) for x, w in zip(row, widths)).rstrip()
        )
