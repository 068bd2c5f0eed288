"""
Text input for planes.

Two formats are accepted:

* a 3x6 generator matrix of hexadecimal field elements, row-major, rows
  optionally separated by ';' or newlines;
* a symmetric 3x3 pencil such as ``x y . ; y z . ; . . .`` whose entries
  are F_q-linear combinations of x, y, z (``.`` is zero, coefficients are
  hexadecimal and written in front of the variable, e.g. ``3x+z``).
"""
import re

from geometry.exceptions import DependenceError, PlaneParseError
from geometry.projective import Plane
from geometry.veronese import PAIRS

VARIABLES = 'xyz'
TERM = re.compile(r'^(?:0x)?([0-9a-f]*)\*?([xyz])$')
SEPARATORS = re.compile(r'[\[\](),]')


def _element(F, token):
    try:
        value = int(token, 16)
    except ValueError:
        raise PlaneParseError(f'{token!r} is not a hexadecimal field element')
    if not 0 <= value < F.q:
        raise PlaneParseError(f'{token!r} is not an element of GF({F.q})')
    return value


def _linear_entry(F, text):
    """Coefficients (cx, cy, cz) of one pencil entry."""
    coeffs = [0, 0, 0]
    if text == '.':
        return coeffs
    for term in text.split('+'):
        match = TERM.match(term.strip().lower())
        if not match:
            raise PlaneParseError(f'cannot read pencil term {term!r}')
        coef, var = match.groups()
        value = _element(F, coef) if coef else 1
        coeffs[VARIABLES.index(var)] ^= value
    return coeffs


def parse_pencil(F, text):
    rows = [r.split() for r in text.strip().split(';')]
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise PlaneParseError('a pencil needs 3 rows of 3 entries')
    entries = [[_linear_entry(F, e) for e in row] for row in rows]
    for i in range(3):
        for j in range(i):
            if entries[i][j] != entries[j][i]:
                raise PlaneParseError(
                    f'pencil is not symmetric at ({i},{j})'
                )
    generators = [
        tuple(entries[i][j][v] for i, j in PAIRS) for v in range(3)
    ]
    return _plane(F, generators)


def parse_matrix(F, text):
    tokens = SEPARATORS.sub(' ', text).replace(';', ' ').split()
    if len(tokens) != 18:
        raise PlaneParseError(
            f'expected 18 field elements, got {len(tokens)}'
        )
    values = [_element(F, t) for t in tokens]
    return _plane(F, [tuple(values[6 * i:6 * i + 6]) for i in range(3)])


def _plane(F, generators):
    try:
        return Plane(F, generators)
    except DependenceError as exc:
        raise PlaneParseError(
            f'generators span a subspace of rank {exc.rank}, not a plane'
        ) from exc


def parse_plane(F, text):
    """Read either input format; pencils are recognised by x, y or z."""
    if not text or not text.strip():
        raise PlaneParseError('empty plane')
    if re.search(r'[xyz.]', text.lower().replace('0x', '')):
        return parse_pencil(F, text)
    return parse_matrix(F, text)


def format_plane(plane):
    """Generator matrix as three rows of hexadecimal elements."""
    return ' ; '.join(
        ' '.join(f'{x:x}' for x in row) for row in plane.generators
    )
