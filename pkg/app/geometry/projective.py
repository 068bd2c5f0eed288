"""
Points, lines and planes of PG(2,q) and PG(5,q).

Coordinates are tuples of field-element bit patterns; a subspace keeps the
generators it was built from and compares by its reduced row echelon form.
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from geometry.exceptions import DependenceError, DomainError


def normalize(F, v):
    """Scale v so that its first nonzero coordinate is 1."""
    for x in v:
        if x:
            if x == 1:
                return tuple(v)
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    raise DomainError('the zero vector is not a projective point')


def scale(F, c, v):
    return tuple(F.mul(c, x) for x in v)


def add(u, v):
    return tuple(a ^ b for a, b in zip(u, v))


def combine(F, coeffs, rows):
    """Linear combination sum(c_i * row_i)."""
    out = [0] * len(rows[0])
    for c, row in zip(coeffs, rows):
        if c:
            for j, x in enumerate(row):
                if x:
                    out[j] ^= F.mul(c, x)
    return tuple(out)


def dot(F, u, v):
    value = 0
    for a, b in zip(u, v):
        if a and b:
            value ^= F.mul(a, b)
    return value


def cross(F, u, v):
    """Cross product; in characteristic 2 signs vanish."""
    return (
        F.mul(u[1], v[2]) ^ F.mul(u[2], v[1]),
        F.mul(u[0], v[2]) ^ F.mul(u[2], v[0]),
        F.mul(u[0], v[1]) ^ F.mul(u[1], v[0]),
    )


def rref(F, rows):
    """Reduced row echelon form; returns (nonzero rows, rank)."""
    m = [list(r) for r in rows]
    if not m:
        return (), 0
    n = len(m[0])
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = F.inv(m[rank][col])
        m[rank] = [F.mul(inv, x) for x in m[rank]]
        for i in range(len(m)):
            c = m[i][col]
            if i != rank and c:
                m[i] = [x ^ F.mul(c, y) for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return tuple(tuple(r) for r in m[:rank]), rank


def mat_mul(F, A, B):
    cols = list(zip(*B))
    return tuple(tuple(dot(F, row, col) for col in cols) for row in A)


def transpose(A):
    return tuple(zip(*A))


def det3(F, A):
    mul = F.mul
    return (
        mul(A[0][0], mul(A[1][1], A[2][2]) ^ mul(A[1][2], A[2][1]))
        ^ mul(A[0][1], mul(A[1][0], A[2][2]) ^ mul(A[1][2], A[2][0]))
        ^ mul(A[0][2], mul(A[1][0], A[2][1]) ^ mul(A[1][1], A[2][0]))
    )


def mat_inv(F, A):
    """Inverse of a square matrix over F_q."""
    try:
        inverse = np.linalg.inv(F.gf(np.asarray(A, dtype=np.int64)))
    except np.linalg.LinAlgError as exc:
        raise DomainError('matrix is singular') from exc
    return tuple(tuple(row) for row in inverse.tolist())


def mat_vec(F, A, v):
    return tuple(dot(F, row, v) for row in A)


@lru_cache(maxsize=None)
def projective_points(F, n):
    """Normalized points of PG(n,q) in a fixed order."""
    points = []
    for p in range(n + 1):
        head = (0,) * p + (1,)
        for tail in itertools.product(range(F.q), repeat=n - p):
            points.append(head + tail)
    return tuple(points)


def pg2_points(F):
    return projective_points(F, 2)


@lru_cache(maxsize=None)
def pg2_index(F):
    return {p: i for i, p in enumerate(pg2_points(F))}


def line_basis(k):
    """Two points spanning the line k.X = 0 of PG(2,q); k normalized."""
    pivot = next(i for i, x in enumerate(k) if x)
    basis = []
    for j in range(3):
        if j == pivot:
            continue
        v = [0, 0, 0]
        v[j] = 1
        v[pivot] = k[j]
        basis.append(tuple(v))
    return basis


def points_on_line(F, k):
    """Normalized points of PG(2,q) on the line k."""
    return [p for p in pg2_points(F) if not dot(F, k, p)]


def iter_rref(F, k, n):
    """Every k x n matrix in reduced row echelon form of rank k."""
    for pivots in itertools.combinations(range(n), k):
        free = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivots
        ]
        for values in itertools.product(range(F.q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), value in zip(free, values):
                rows[i][j] = value
            yield tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class ProjectivePoint:
    """Normalized homogeneous coordinates in PG(2,q) or PG(5,q)."""
    coords: tuple
    spec: object

    def __post_init__(self):
        if normalize(self.spec, self.coords) != tuple(self.coords):
            raise DomainError(f'{self.coords} is not normalized')

    @classmethod
    def of(cls, F, coords):
        return cls(normalize(F, coords), F)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    @property
    def dimension(self):
        return len(self.coords) - 1


class Subspace:
    """Projective subspace with generators and a canonical RREF."""
    dimension = None

    def __init__(self, spec, generators):
        gens = tuple(tuple(g) for g in generators)
        if len(gens) != self.dimension + 1:
            raise DomainError(
                f'{type(self).__name__} needs {self.dimension + 1} generators'
            )
        if any(len(g) != 6 for g in gens):
            raise DomainError('generators must lie in PG(5,q)')
        canonical, rank = rref(spec, gens)
        if rank != len(gens):
            raise DependenceError(rank)
        self.spec = spec
        self.generators = gens
        self.canonical = canonical

    def __repr__(self):
        return f'{type(self).__name__}({self.canonical})'

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.spec, self.canonical) == (other.spec, other.canonical)

    def __hash__(self):
        return hash((self.spec, self.canonical))

    @property
    def key(self):
        """Deduplication key: the canonical matrix as bytes."""
        return b''.join(
            x.to_bytes(2, 'big') for row in self.canonical for x in row
        )

    def parameters(self):
        """Normalized parameter vectors, one per point."""
        return projective_points(self.spec, self.dimension)

    def vectors(self):
        """Normalized coordinate vectors of the points."""
        for c in self.parameters():
            yield combine(self.spec, c, self.canonical)

    def contains(self, v):
        _, rank = rref(self.spec, self.canonical + (tuple(v),))
        return rank == len(self.canonical)

    def lift(self, parameter):
        """Point of the subspace with these coordinates in its generators."""
        return combine(self.spec, parameter, self.generators)


class LinePG5(Subspace):
    """Line of PG(5,q)."""
    dimension = 1


class Plane(Subspace):
    """Plane of PG(5,q)."""
    dimension = 2

    @classmethod
    def from_rows(cls, F, rows):
        return cls(F, rows)


def span(points):
    """Line or plane spanned by 2 or 3 points of PG(5,q)."""
    points = list(points)
    if not points:
        raise DomainError('nothing to span')
    spec = points[0].spec
    if any(len(p) != 6 for p in points):
        raise DomainError('points must lie in PG(5,q)')
    _, rank = rref(spec, [tuple(p) for p in points])
    if rank != len(points):
        raise DependenceError(rank)
    if len(points) == 2:
        return LinePG5(spec, points)
    if len(points) == 3:
        return Plane(spec, points)
    raise DomainError('only lines and planes are supported')


def points_of(subspace):
    """The q+1 or q^2+q+1 points of a line or plane."""
    for v in subspace.vectors():
        yield ProjectivePoint(v, subspace.spec)


@dataclass(frozen=True)
class SubFlat:
    """Intersection with the nucleus plane; dimension -1 when empty."""
    dimension: int
    points: tuple


NUCLEUS_ZERO_COORDS = (0, 3, 5)


def in_nucleus_plane(v):
    return not (v[0] or v[3] or v[5])


def meet_with_nucleus_plane(plane):
    """plane meet Z(Y0, Y3, Y5)."""
    F = plane.spec
    points = tuple(
        ProjectivePoint(v, F) for v in plane.vectors() if in_nucleus_plane(v)
    )
    sizes = {0: -1, 1: 0, F.q + 1: 1, F.q * F.q + F.q + 1: 2}
    return SubFlat(sizes[len(points)], points)


def quotient_lines(F, pivot):
    """Lifts of the lines of PG(4,q) on the coordinates other than pivot."""
    others = [j for j in range(6) if j != pivot]
    for rows in iter_rref(F, 2, 5):
        lifted = []
        for row in rows:
            v = [0] * 6
            for j, x in zip(others, row):
                v[j] = x
            lifted.append(tuple(v))
        yield tuple(lifted)


def enumerate_planes_through(P):
    """Every plane through P exactly once."""
    F = P.spec
    p = tuple(P)
    pivot = next(i for i, x in enumerate(p) if x)
    for a, b in quotient_lines(F, pivot):
        yield Plane(F, (p, a, b))


def lines_of_plane(plane):
    """Yield (dual vector in the parameter plane, LinePG5)."""
    F = plane.spec
    for k in pg2_points(F):
        u, v = line_basis(k)
        yield k, LinePG5(F, (plane.lift(u), plane.lift(v)))


def iter_lines(F):
    """Every line of PG(5,q) in canonical enumeration order."""
    for rows in iter_rref(F, 2, 6):
        yield LinePG5(F, rows)


def iter_planes(F):
    for rows in iter_rref(F, 3, 6):
        yield Plane(F, rows)


def null_space(F, rows):
    """Basis of {h : h.r = 0 for every row r}."""
    basis = F.gf(np.asarray(rows, dtype=np.int64)).null_space()
    return [tuple(h) for h in basis.tolist()]


def collinear(F, points):
    """True when the PG(2,q) points lie on a common line."""
    points = list(points)
    if len(points) <= 2:
        return True
    _, rank = rref(F, points)
    return rank <= 2
