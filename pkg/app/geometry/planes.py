"""
K-orbits of planes of PG(5,q), q even, meeting the Veronese surface.

classify_plane runs a decision tree on invariants ordered by cost: the
point-orbit distribution first, then the cubic curve of the plane and
its factorization, and the inflexion count last. At q=2 labels come from
an exhaustive PGL(3,2) orbit table.
"""
import enum
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from geometry import cubics
from geometry.cubics import FactorizationType, Form, conic_is_nonsingular
from geometry.exceptions import (
    InternalInvariantError,
    InvalidLabelError,
    OutOfScopeError,
    PreconditionError,
)
from geometry.field import field_for
from geometry.lines import PointOrbitDistribution, line_od
from geometry.parsing import parse_pencil
from geometry.projective import (
    collinear,
    cross,
    dot,
    normalize,
    null_space,
    pg2_points,
    projective_points,
)
from geometry.veronese import class_code, pack, point_class_table

logger = logging.getLogger(__name__)


class PlaneOrbitLabel(enum.Enum):
    S1 = 'Σ1'
    S2 = 'Σ2'
    S3 = 'Σ3'
    S4 = 'Σ4'
    S5 = 'Σ5'
    S6 = 'Σ6'
    S7 = 'Σ7'
    S8 = 'Σ8'
    S9 = 'Σ9'
    S10 = 'Σ10'
    S11 = 'Σ11'
    S12 = 'Σ12'
    S13 = 'Σ13'
    S14 = 'Σ14'
    S14P = 'Σ14′'
    S15 = 'Σ15'
    S15P = 'Σ15′'

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text):
        """Accept 'Σ14′', 'S14P', "S14'" or '14p'."""
        raw = str(text).strip()
        try:
            return cls(raw)
        except ValueError:
            pass
        key = raw.upper().lstrip('ΣS').replace("'", 'P').replace('′', 'P')
        try:
            return cls['S' + key]
        except KeyError:
            raise InvalidLabelError(f'unknown plane orbit label {text!r}')


L = PlaneOrbitLabel
ORDER = list(PlaneOrbitLabel)


def valid_labels(q):
    """Labels of the orbits that exist at q, in table order."""
    if q == 2:
        skip = {L.S13, L.S14}
    elif q == 4:
        skip = {L.S14, L.S15P}
    else:
        skip = {L.S14P, L.S15P}
    return [label for label in ORDER if label not in skip]


def plane_ods(q):
    """Point-orbit distribution of each orbit for q >= 4."""
    od = PointOrbitDistribution
    h = q.bit_length() - 1
    sigma14 = od(1, 0, q - 1, q * q + 1) if h % 2 == 0 else od(
        1, 0, q + 1, q * q - 1
    )
    table = {
        L.S1: od(q + 1, 1, q * q - 1, 0),
        L.S2: od(3, 0, 3 * q - 3, q * q - 2 * q + 1),
        L.S3: od(2, 1, 2 * q - 2, q * q - q),
        L.S4: od(2, 1, 2 * q - 2, q * q - q),
        L.S5: od(2, 0, 2 * q - 2, q * q - q + 1),
        L.S6: od(1, 0, q + 1, q * q - 1),
        L.S7: od(1, q + 1, q * q - 1, 0),
        L.S8: od(1, q + 1, q - 1, q * q - q),
        L.S9: od(1, 1, 2 * q - 1, q * q - q),
        L.S10: od(1, 1, 2 * q - 1, q * q - q),
        L.S11: od(1, 1, q - 1, q * q),
        L.S12: od(1, 0, q + 1, q * q - 1),
        L.S13: od(1, 0, q - 1, q * q + 1),
        L.S14: sigma14,
        L.S14P: od(1, 0, q - 1, q * q + 1),
        L.S15: od(1, 1, q - 1, q * q),
    }
    return {label: table[label] for label in valid_labels(q)}


@dataclass
class PlaneInvariantRecord:
    """Invariants computed while classifying a plane; None when skipped."""
    point_od: PointOrbitDistribution
    nucleus_meet_dim: int
    cubic: object = None
    cubic_type: FactorizationType = None
    rank_le2_collinear: bool = None
    inflexion_count: int = None
    line_od: dict = None
    label: PlaneOrbitLabel = None


class PlaneProbe:
    """
    Lazily computed invariants of one plane.

    codes[i] is the class code of the point with parameters pg2_points[i]
    with respect to the plane's generators.
    """

    def __init__(self, plane, codes=None):
        self.plane = plane
        self.spec = plane.spec
        if codes is None:
            codes = self._codes()
        self.codes = codes

    def _codes(self):
        F, plane = self.spec, self.plane
        table = point_class_table(F)
        if table is None:
            return [class_code(F, plane.lift(p)) for p in pg2_points(F)]
        return [table[pack(F, plane.lift(p))] for p in pg2_points(F)]

    @cached_property
    def point_od(self):
        counts = [0, 0, 0, 0]
        for code in self.codes:
            counts[code] += 1
        return PointOrbitDistribution(*counts)

    @cached_property
    def nucleus_meet_dim(self):
        q = self.spec.q
        sizes = {0: -1, 1: 0, q + 1: 1, q * q + q + 1: 2}
        return sizes[self.point_od.r2n]

    def parameters(self, *codes):
        points = pg2_points(self.spec)
        return [points[i] for i, c in enumerate(self.codes) if c in codes]

    @cached_property
    def cubic(self):
        return cubics.cubic_of_plane(self.plane)

    @cached_property
    def factorization(self):
        return cubics.factorization_type(self.cubic)

    @cached_property
    def rank_le2_collinear(self):
        return collinear(self.spec, self.parameters(0, 1, 2))

    @cached_property
    def rank2_collinear(self):
        return collinear(self.spec, self.parameters(1, 2))

    @cached_property
    def inflexion_count(self):
        try:
            return len(cubics.inflexion_points(self.cubic))
        except PreconditionError as exc:
            raise InternalInvariantError(
                'inflexion branch reached with a012 = 0', record=self.record()
            ) from exc

    def complete(self):
        """Compute the cubic invariants the decision tree may have skipped."""
        for name in ('factorization', 'rank_le2_collinear'):
            getattr(self, name)
        return self

    def record(self, label=None):
        computed = self.__dict__
        factorization = computed.get('factorization')
        return PlaneInvariantRecord(
            point_od=self.point_od,
            nucleus_meet_dim=self.nucleus_meet_dim,
            cubic=computed.get('cubic'),
            cubic_type=factorization.kind if factorization else None,
            rank_le2_collinear=computed.get('rank_le2_collinear'),
            inflexion_count=computed.get('inflexion_count'),
            label=label,
        )


def _decide(probe):
    F = probe.spec
    q = F.q
    od = probe.point_od

    if od.r1 == 0:
        raise OutOfScopeError('out of scope: no rank-1 point')
    if q == 2:
        from geometry.orbits import q2_label

        return q2_label(probe.plane)

    if od.r1 == q + 1:
        return L.S1
    if od.r1 == 3:
        return L.S2
    if od.r1 == 2:
        if od.r2n == 0:
            return L.S5
        p0, p1 = probe.parameters(0)
        secant = normalize(F, cross(F, p0, p1))
        others = [k for k, _ in probe.factorization.lines if k != secant]
        if any(not dot(F, k, p) for k in others for p in (p0, p1)):
            return L.S3
        return L.S4
    if od.r1 != 1:
        raise InternalInvariantError(
            f'{od.r1} rank-1 points in a plane', record=probe.record(),
        )

    if probe.cubic.is_zero():
        return L.S7
    if od == PointOrbitDistribution(1, q + 1, q - 1, q * q - q):
        return L.S8
    if od == PointOrbitDistribution(1, 1, 2 * q - 1, q * q - q):
        kind = probe.factorization.kind
        if kind is FactorizationType.DOUBLE_LINE_PLUS_LINE:
            return L.S9
        if kind is FactorizationType.LINE_TIMES_IRREDUCIBLE_CONIC:
            return L.S10
    elif od == PointOrbitDistribution(1, 1, q - 1, q * q):
        return L.S15 if probe.rank_le2_collinear else L.S11
    elif od.r2n == 0:
        # q+1 > 3 collinear points put a line inside the cubic
        if od.r2s == q + 1 and probe.rank2_collinear:
            return L.S6
        if probe.inflexion_count == 3:
            return L.S14 if q > 4 else L.S14P
        h = F.h
        if od.r2s == q + 1:
            label, expected = L.S12, (1 if h % 2 == 0 else 0)
        elif od.r2s == q - 1:
            label, expected = L.S13, (0 if h % 2 == 0 else 1)
        else:
            label, expected = None, None
        if label is not None and probe.inflexion_count == expected:
            return label

    raise InternalInvariantError(
        f'no orbit matches point distribution {od}', record=probe.record(),
    )


def classify_probe(probe):
    """(label, record) for a probe; records only what the tree computed."""
    label = _decide(probe)
    return label, probe.record(label)


def classify_plane(plane):
    label = _decide(PlaneProbe(plane))
    logger.debug('%r -> %s', plane, label)
    return label


def classify_plane_record(plane):
    """Label plus a full record (cubic and factorization always present)."""
    probe = PlaneProbe(plane)
    label = _decide(probe)
    return label, probe.complete().record(label)


def invariants_of(plane):
    probe = PlaneProbe(plane)
    if probe.point_od.r1 == 0:
        raise OutOfScopeError('out of scope: no rank-1 point')
    return probe.complete().record()


def full_record(plane):
    """Record with the line-orbit distribution as well (q > 2)."""
    label, record = classify_plane_record(plane)
    if plane.spec.q > 2:
        record.line_od = line_od(plane)
        record.inflexion_count = _inflexions_or_none(record.cubic)
    return label, record


def _inflexions_or_none(cubic):
    if cubic is None or not cubic.a012:
        return None
    return len(cubics.inflexion_points(cubic))


PENCILS = {
    L.S1: 'x y . ; y z . ; . . .',
    L.S2: 'x . . ; . y . ; . . z',
    L.S3: 'x . z ; . y . ; z . .',
    L.S4: 'x . z ; . y z ; z z .',
    L.S5: 'x . z ; . y z ; z z z',
    L.S7: 'x y z ; y . . ; z . .',
    L.S8: 'x y . ; y . z ; . z .',
    L.S9: 'x y . ; y z z ; . z .',
    L.S10: 'x y . ; y z . ; . . z',
    L.S11: 'x y . ; y z z ; . z x+z',
    L.S14P: 'x+z z z ; z y+z z ; z z y',
    L.S15: 'x y z ; y z . ; z . .',
    L.S15P: 'x y z ; y z . ; z . y',
}


def sigma6_plane(F, c):
    return parse_pencil(F, f'x . . ; . y+{c:x}z z ; . z y')


def pi_c(F, c):
    """The family of planes carrying Σ12, Σ13 and Σ14."""
    c2 = F.square(c)
    return parse_pencil(F, f'x y {c:x}x ; y y+z . ; {c:x}x . {c2:x}x+z')


def pi_bc(F, b, c):
    """Planes through the o14 representative and nu(1, b, c)."""
    mul, sq = F.mul, F.square
    return parse_pencil(
        F,
        f'x+y {b:x}x {c:x}x ; '
        f'{b:x}x {sq(b):x}x+y+z {mul(b, c):x}x ; '
        f'{c:x}x {mul(b, c):x}x {sq(c):x}x+z',
    )


def _witnesses(F, label):
    """Candidate c in field order for the parametric rows."""
    trace = F.trace
    for c in range(1, F.q):
        if label is L.S6 and trace(F.inv(c)) == 1:
            yield c
        elif label is L.S12 and trace(c) == 1:
            yield c
        elif label is L.S13 and trace(c) == 0:
            yield c
        elif label is L.S14 and trace(c) == trace(1):
            yield c


@lru_cache(maxsize=None)
def representative(label, F):
    """A plane in the orbit; parametric rows take the first fitting c."""
    label = PlaneOrbitLabel.parse(label) if not isinstance(
        label, PlaneOrbitLabel
    ) else label
    if label not in valid_labels(F.q):
        raise InvalidLabelError(f'{label} does not exist at q={F.q}')
    if label in PENCILS:
        return parse_pencil(F, PENCILS[label])

    build = sigma6_plane if label is L.S6 else pi_c
    for c in _witnesses(F, label):
        plane = build(F, c)
        # at q=2 the orbit table is built from these planes
        if F.q == 2 or classify_plane(plane) is label:
            logger.debug('%s at q=%d: c=%#x', label, F.q, c)
            return plane
    raise InternalInvariantError(f'no witness c for {label} at q={F.q}')


def representative_for_q(label, q):
    return representative(label, field_for(q))


class HyperplaneOrbit(enum.Enum):
    H1 = 'H1'
    H2R = 'H2r'
    H2I = 'H2i'
    H3 = 'H3'

    def __str__(self):
        return self.value


def hyperplane_conic(F, h):
    """The conic sum h_i m_i with m = (X^2, XY, XZ, Y^2, YZ, Z^2)."""
    monomials = (
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
    )
    return Form(F, 3, dict(zip(monomials, h)))


def hyperplane_orbit(F, h):
    if not (h[1] or h[2] or h[4]):
        return HyperplaneOrbit.H1
    conic = hyperplane_conic(F, h)
    if conic_is_nonsingular(conic):
        return HyperplaneOrbit.H3
    lines, _ = cubics.linear_factors(conic)
    return HyperplaneOrbit.H2R if lines else HyperplaneOrbit.H2I


def hyperplanes_through(plane):
    F = plane.spec
    basis = null_space(F, plane.generators)
    for c in projective_points(F, len(basis) - 1):
        h = [0] * 6
        for coef, b in zip(c, basis):
            if coef:
                for j, x in enumerate(b):
                    h[j] ^= F.mul(coef, x)
        yield tuple(h)


def hyperplane_od(plane):
    """[H1, H2r, H2i, H3] over the hyperplanes containing the plane."""
    counts = {orbit: 0 for orbit in HyperplaneOrbit}
    for h in hyperplanes_through(plane):
        counts[hyperplane_orbit(plane.spec, h)] += 1
    return [counts[orbit] for orbit in HyperplaneOrbit]
