"""
K-orbits of lines of PG(5,q), q even.
"""
import enum
import logging
from collections import Counter
from dataclasses import astuple, dataclass
from functools import lru_cache

from geometry.exceptions import (
    InternalInvariantError,
    InvalidLabelError,
    UnsupportedFieldError,
)
from geometry.field import extension
from geometry.projective import (
    LinePG5,
    iter_lines,
    lines_of_plane,
    projective_points,
)
from geometry.veronese import class_code, pack, point_class_table, sym_det

logger = logging.getLogger(__name__)


class LineOrbitLabel(enum.Enum):
    O5 = 'o5'
    O6 = 'o6'
    O8_1 = 'o8_1'
    O8_2 = 'o8_2'
    O9 = 'o9'
    O10 = 'o10'
    O12_1 = 'o12_1'
    O12_2 = 'o12_2'
    O13_1 = 'o13_1'
    O13_2 = 'o13_2'
    O14 = 'o14'
    O15 = 'o15'
    O16_1 = 'o16_1'
    O16_2 = 'o16_2'
    O17 = 'o17'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PointOrbitDistribution:
    """[r1, r2n, r2s, r3] of a line or plane."""
    r1: int
    r2n: int
    r2s: int
    r3: int

    def as_list(self):
        return list(astuple(self))

    @property
    def total(self):
        return sum(astuple(self))

    @property
    def r2(self):
        return self.r2n + self.r2s

    def __str__(self):
        return '[{},{},{},{}]'.format(*astuple(self))


def line_ods(q):
    """Point-orbit distribution of each line orbit."""
    od = PointOrbitDistribution
    L = LineOrbitLabel
    return {
        L.O5: od(2, 0, q - 1, 0),
        L.O6: od(1, 1, q - 1, 0),
        L.O8_1: od(1, 0, 1, q - 1),
        L.O8_2: od(1, 1, 0, q - 1),
        L.O9: od(1, 0, 0, q),
        L.O10: od(0, 0, q + 1, 0),
        L.O12_1: od(0, q + 1, 0, 0),
        L.O12_2: od(0, 1, q, 0),
        L.O13_1: od(0, 1, 1, q - 1),
        L.O13_2: od(0, 0, 2, q - 1),
        L.O14: od(0, 0, 3, q - 2),
        L.O15: od(0, 0, 1, q),
        L.O16_1: od(0, 1, 0, q),
        L.O16_2: od(0, 0, 1, q),
        L.O17: od(0, 0, 0, q + 1),
    }


@lru_cache(maxsize=None)
def _label_by_od(q):
    by_od = {}
    for label, od in line_ods(q).items():
        by_od.setdefault(od, []).append(label)
    return by_od


def class_codes(flat):
    """Class code of every point of a line or plane, in parameter order."""
    F = flat.spec
    table = point_class_table(F)
    if table is None:
        return [class_code(F, v) for v in flat.vectors()]
    return [table[pack(F, v)] for v in flat.vectors()]


def point_od(flat):
    counts = [0, 0, 0, 0]
    for code in class_codes(flat):
        counts[code] += 1
    return PointOrbitDistribution(*counts)


def determinant_zeros_over_extension(line, degree=2):
    """Points of the line over GF(q^degree) with a singular matrix."""
    embedding = extension(line.spec, degree)
    E = embedding.ext
    u, v = (
        tuple(embedding.embed(x) for x in g) for g in line.generators
    )
    zeros = []
    for s, t in projective_points(E, 1):
        y = tuple(E.mul(s, a) ^ E.mul(t, b) for a, b in zip(u, v))
        if not sym_det(E, y):
            zeros.append((s, t))
    return zeros


def classify_line(L):
    F = L.spec
    if F.q == 2:
        raise UnsupportedFieldError(
            'line labels at q=2 come from the orbit table'
        )
    od = point_od(L)
    candidates = _label_by_od(F.q).get(od)
    if not candidates:
        raise InternalInvariantError(
            f'no line orbit has point distribution {od}', record=L,
        )
    if len(candidates) == 1:
        return candidates[0]

    zeros = determinant_zeros_over_extension(L)
    if len(zeros) == 3:
        return LineOrbitLabel.O15
    if len(zeros) == 1:
        return LineOrbitLabel.O16_2
    raise InternalInvariantError(
        f'{len(zeros)} singular points over the quadratic extension '
        f'on a line with distribution {od}',
        record=L,
    )


def line_od(plane):
    """Label -> number of lines of the plane in that orbit."""
    if plane.spec.q == 2:
        raise UnsupportedFieldError('line labels are not defined at q=2')
    return dict(Counter(classify_line(L) for _, L in lines_of_plane(plane)))


def _e(i):
    v = [0] * 6
    v[i] = 1
    return tuple(v)


CANDIDATE_LINES = {
    LineOrbitLabel.O5: (_e(0), _e(3)),
    LineOrbitLabel.O6: (_e(0), _e(1)),
    LineOrbitLabel.O8_1: (_e(0), (0, 0, 0, 1, 0, 1)),
    LineOrbitLabel.O8_2: (_e(0), _e(4)),
    LineOrbitLabel.O9: (_e(0), (0, 0, 1, 1, 0, 0)),
    LineOrbitLabel.O12_1: (_e(1), _e(2)),
    LineOrbitLabel.O12_2: ((1, 0, 0, 1, 0, 0), (0, 0, 1, 0, 1, 0)),
    LineOrbitLabel.O13_1: (_e(1), (0, 0, 0, 1, 0, 1)),
    LineOrbitLabel.O13_2: ((0, 1, 0, 1, 0, 0), (0, 0, 0, 1, 0, 1)),
    LineOrbitLabel.O14: ((1, 0, 0, 1, 0, 0), (0, 0, 0, 1, 0, 1)),
    LineOrbitLabel.O16_2: ((0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 1)),
}


@lru_cache(maxsize=None)
def representative_line(label, F):
    """A line in the given orbit: a known one, else the first found."""
    label = LineOrbitLabel(label)
    if F.q == 2:
        raise UnsupportedFieldError('line labels are not defined at q=2')
    candidate = CANDIDATE_LINES.get(label)
    if candidate is not None:
        L = LinePG5(F, candidate)
        if classify_line(L) is label:
            return L
    target = line_ods(F.q)[label]
    for L in iter_lines(F):
        if point_od(L) == target and classify_line(L) is label:
            logger.debug('representative of %s found by search: %r', label, L)
            return L
    raise InvalidLabelError(f'no line of type {label} at q={F.q}')
