"""
The Veronese surface of PG(5,q), point ranks and the lifted PGL(3,q) action.

A point (y0,...,y5) is read as the symmetric matrix
[[y0,y1,y2],[y1,y3,y4],[y2,y4,y5]].
"""
import enum
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from geometry.exceptions import DomainError
from geometry.projective import (
    Plane,
    ProjectivePoint,
    Subspace,
    cross,
    det3,
    line_basis,
    mat_inv,
    mat_mul,
    normalize,
    pg2_points,
    points_on_line,
    projective_points,
)

logger = logging.getLogger(__name__)

PAIRS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))
SYM_INDEX = ((0, 1, 2), (1, 3, 4), (2, 4, 5))

# largest q for which every vector of F_q^6 gets a precomputed class
TABLE_MAX_Q = 8


class PointClass(enum.Enum):
    """The four K-orbits of points of PG(5,q), q even."""
    RANK1 = 'Rank1'
    RANK2_NUCLEUS = 'Rank2Nucleus'
    RANK2_SECANT = 'Rank2Secant'
    RANK3 = 'Rank3'


CLASS_BY_CODE = (
    PointClass.RANK1,
    PointClass.RANK2_NUCLEUS,
    PointClass.RANK2_SECANT,
    PointClass.RANK3,
)
CODE_BY_CLASS = {c: i for i, c in enumerate(CLASS_BY_CODE)}


def sym_det(F, y):
    """Determinant of the symmetric matrix of y (characteristic 2)."""
    mul, sq = F.mul, F.square
    return (
        mul(mul(y[0], y[3]), y[5])
        ^ mul(y[0], sq(y[4]))
        ^ mul(y[5], sq(y[1]))
        ^ mul(y[3], sq(y[2]))
    )


def _minors_vanish(F, y):
    mul, sq = F.mul, F.square
    return (
        mul(y[0], y[3]) == sq(y[1])
        and mul(y[0], y[5]) == sq(y[2])
        and mul(y[3], y[5]) == sq(y[4])
        and mul(y[0], y[4]) == mul(y[1], y[2])
        and mul(y[1], y[4]) == mul(y[2], y[3])
        and mul(y[1], y[5]) == mul(y[2], y[4])
    )


def sym_rank(F, y):
    if not any(y):
        raise DomainError('the zero matrix has no projective rank')
    if sym_det(F, y):
        return 3
    if _minors_vanish(F, y):
        return 1
    return 2


def class_code(F, y):
    r = sym_rank(F, y)
    if r == 1:
        return 0
    if r == 3:
        return 3
    if y[0] or y[3] or y[5]:
        return 2
    return 1


@dataclass(frozen=True)
class SymMat3:
    """Symmetric 3x3 matrix view of a point of PG(5,q)."""
    spec: object
    y: tuple

    @classmethod
    def from_matrix(cls, F, M):
        return cls(F, tuple(M[i][j] for i, j in PAIRS))

    @classmethod
    def from_point(cls, P):
        return cls(P.spec, tuple(P))

    @property
    def matrix(self):
        return tuple(
            tuple(self.y[SYM_INDEX[i][j]] for j in range(3)) for i in range(3)
        )

    def rank(self):
        return sym_rank(self.spec, self.y)

    def det(self):
        return sym_det(self.spec, self.y)


def _vector_of(X):
    if isinstance(X, SymMat3):
        return X.spec, X.y
    return X.spec, tuple(X)


def rank(M):
    """Matrix rank (1..3) of a nonzero symmetric matrix or PG(5,q) point."""
    F, y = _vector_of(M)
    return sym_rank(F, y)


def classify_point(P):
    F, y = _vector_of(P)
    return CLASS_BY_CODE[class_code(F, y)]


def veronese_vector(F, u):
    return tuple(F.mul(u[i], u[j]) for i, j in PAIRS)


def veronese_map(p):
    """nu(u0,u1,u2) = (u0^2, u0u1, u0u2, u1^2, u1u2, u2^2)."""
    return ProjectivePoint.of(p.spec, veronese_vector(p.spec, tuple(p)))


@lru_cache(maxsize=None)
def veronese_points(F):
    """Images of the points of PG(2,q), in pg2_points order."""
    return tuple(veronese_vector(F, u) for u in pg2_points(F))


def preimage(F, y):
    """The point u of PG(2,q) with nu(u) = y, for a rank-1 y."""
    M = SymMat3(F, tuple(y)).matrix
    for row in M:
        if any(row):
            return normalize(F, row)
    raise DomainError('zero vector')


@dataclass(frozen=True)
class Conic:
    """Conic nu(l) of V(F_q) for a line l (dual coordinates) of PG(2,q)."""
    spec: object
    line: tuple

    @cached_property
    def points(self):
        return tuple(
            veronese_vector(self.spec, u)
            for u in points_on_line(self.spec, self.line)
        )

    @cached_property
    def plane(self):
        u, v = line_basis(self.line)
        F = self.spec
        w = tuple(F.mul(u[i], v[j]) ^ F.mul(u[j], v[i]) for i, j in PAIRS)
        return Plane(F, (veronese_vector(F, u), veronese_vector(F, v), w))

    @property
    def nucleus(self):
        return nucleus_of_conic(ProjectivePoint(self.line, self.spec))


def nucleus_of_conic(line):
    """
    Nucleus of nu(l) for the line l with dual coordinates k.

    For points p, r spanning l the nucleus is p r^T + r p^T, which is
    (0, k2, k1, 0, k0, 0).
    """
    F = line.spec
    k = tuple(line)
    return ProjectivePoint.of(F, (0, k[2], k[1], 0, k[0], 0))


def conic_of(R):
    """The conic C(R) of a rank-2 point R, with its preimage line."""
    F, y = _vector_of(R)
    if sym_rank(F, y) != 2:
        raise DomainError('conic_of needs a rank-2 point')
    rows = SymMat3(F, y).matrix
    # the kernel of M_R is the preimage line in dual coordinates
    for i in range(3):
        for j in range(i + 1, 3):
            k = cross(F, rows[i], rows[j])
            if any(k):
                return Conic(F, normalize(F, k))
    raise DomainError('matrix has rank below 2')


def conic_of_line(line):
    return Conic(line.spec, tuple(line))


def _lift_matrix(F, A):
    mul = F.mul
    L = []
    for i, j in PAIRS:
        row = []
        for k, m in PAIRS:
            if i == j:
                row.append(F.square(A[i][k]) if k == m else 0)
            elif k == m:
                row.append(mul(A[i][k], A[j][k]))
            else:
                row.append(mul(A[i][k], A[j][m]) ^ mul(A[i][m], A[j][k]))
        L.append(tuple(row))
    return tuple(L)


@dataclass(frozen=True)
class Collineation:
    """Element of PGL(3,q) acting on PG(5,q) by M -> A M A^T."""
    spec: object
    A: tuple

    def __post_init__(self):
        if not det3(self.spec, self.A):
            raise DomainError('collineation matrix is singular')

    @classmethod
    def identity(cls, F):
        return cls(F, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @cached_property
    def lifted(self):
        """The induced 6x6 matrix on coordinates y0..y5."""
        return _lift_matrix(self.spec, self.A)

    def apply_vector(self, y):
        F = self.spec
        out = []
        for row in self.lifted:
            value = 0
            for a, b in zip(row, y):
                if a and b:
                    value ^= F.mul(a, b)
            out.append(value)
        return tuple(out)

    def apply_pg2(self, u):
        F = self.spec
        return normalize(F, tuple(
            F.mul(a0, u[0]) ^ F.mul(a1, u[1]) ^ F.mul(a2, u[2])
            for a0, a1, a2 in self.A
        ))

    def compose(self, other):
        """self after other."""
        return Collineation(self.spec, mat_mul(self.spec, self.A, other.A))

    def inverse(self):
        return Collineation(self.spec, mat_inv(self.spec, self.A))


def apply(g, X):
    """Image of a point, matrix, line or plane under g."""
    F = g.spec
    if isinstance(X, SymMat3):
        return SymMat3(F, g.apply_vector(X.y))
    if isinstance(X, ProjectivePoint):
        if len(X) == 3:
            return ProjectivePoint(g.apply_pg2(tuple(X)), F)
        return ProjectivePoint.of(F, g.apply_vector(tuple(X)))
    if isinstance(X, Subspace):
        gens = [g.apply_vector(v) for v in X.generators]
        return type(X)(F, gens)
    raise TypeError(f'cannot apply a collineation to {type(X).__name__}')


def random_collineation(F, rng):
    """Uniformly random element of GL(3,q) as a collineation."""
    while True:
        A = tuple(
            tuple(int(x) for x in row)
            for row in rng.integers(0, F.q, size=(3, 3))
        )
        if det3(F, A):
            return Collineation(F, A)


def pack(F, y):
    value = 0
    for i, x in enumerate(y):
        value |= x << (F.h * i)
    return value


class PointClassTable:
    """Class code of every vector of F_q^6, indexed by its packed form."""

    def __init__(self, F):
        if F.q > TABLE_MAX_Q:
            raise DomainError(f'no class table above q={TABLE_MAX_Q}')
        q, h = F.q, F.h
        elements = F.gf.elements
        mt = np.asarray(elements[:, np.newaxis] * elements[np.newaxis, :])
        idx = np.arange(q**6, dtype=np.int64)
        y = [(idx >> (h * i)) & (q - 1) for i in range(6)]
        sq = [mt[v, v] for v in y]

        det = (
            mt[mt[y[0], y[3]], y[5]]
            ^ mt[y[0], sq[4]]
            ^ mt[y[5], sq[1]]
            ^ mt[y[3], sq[2]]
        )
        rank1 = (
            (mt[y[0], y[3]] == sq[1])
            & (mt[y[0], y[5]] == sq[2])
            & (mt[y[3], y[5]] == sq[4])
            & (mt[y[0], y[4]] == mt[y[1], y[2]])
            & (mt[y[1], y[4]] == mt[y[2], y[3]])
            & (mt[y[1], y[5]] == mt[y[2], y[4]])
        )
        nucleus = (y[0] == 0) & (y[3] == 0) & (y[5] == 0)

        codes = np.full(q**6, 2, dtype=np.uint8)
        codes[nucleus] = 1
        codes[rank1] = 0
        codes[det != 0] = 3
        codes[0] = 255
        self._codes = codes.tobytes()
        logger.debug('point class table for %r: %d entries', F, q**6)

    def __getitem__(self, packed):
        return self._codes[packed]


@lru_cache(maxsize=None)
def point_class_table(F):
    if F.q > TABLE_MAX_Q:
        return None
    return PointClassTable(F)


def points_of_class(F, point_class):
    """Full sweep of PG(5,q) for one class (q <= 8)."""
    code = CODE_BY_CLASS[point_class]
    return [y for y in projective_points(F, 5) if class_code(F, y) == code]

