"""
Plane cubics over GF(2^h): the determinantal cubic of a plane, rational
and singular points, the Phi operator, Hessian, inflexions and
factorization type.
"""
import enum
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from geometry.exceptions import DomainError, PreconditionError
from geometry.projective import (
    det3,
    line_basis,
    pg2_points,
    projective_points,
)

logger = logging.getLogger(__name__)

# a000, a011, a022, a100, a111, a122, a200, a211, a222, a012
CUBIC_MONOMIALS = (
    (3, 0, 0), (1, 2, 0), (1, 0, 2),
    (2, 1, 0), (0, 3, 0), (0, 1, 2),
    (2, 0, 1), (0, 2, 1), (0, 0, 3),
    (1, 1, 1),
)
CUBIC_NAMES = (
    'a000', 'a011', 'a022', 'a100', 'a111', 'a122',
    'a200', 'a211', 'a222', 'a012',
)
XYZ = (1, 1, 1)


def _matrix_monomial(i, j):
    """A[i][j] is the coefficient of x_i x_j^2 (x_i^3 when i = j)."""
    e = [0, 0, 0]
    e[i] += 1
    e[j] += 2
    return tuple(e)


class Form:
    """Homogeneous polynomial; terms map exponent tuples to coefficients."""

    def __init__(self, spec, nvars, terms=None):
        self.spec = spec
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def linear(cls, F, coeffs):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(F, n, terms)

    @classmethod
    def constant(cls, F, nvars, c=1):
        return cls(F, nvars, {(0,) * nvars: c})

    def __repr__(self):
        if not self.terms:
            return 'Form(0)'
        names = 'XYZ' if self.nvars == 3 else 'ST'
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = ''.join(
                n + (str(k) if k > 1 else '') for n, k in zip(names, e) if k
            )
            coef = '' if c == 1 and mono else f'{c:#x}'
            parts.append(coef + mono)
        return f"Form({' + '.join(parts)})"

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return (self.spec, self.nvars, self.terms) == (
            other.spec, other.nvars, other.terms
        )

    def __hash__(self):
        return hash((self.spec, self.nvars, frozenset(self.terms.items())))

    @property
    def degree(self):
        for e in self.terms:
            return sum(e)
        return None

    def is_zero(self):
        return not self.terms

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def __add__(self, other):
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) ^ c
        return Form(self.spec, self.nvars, terms)

    def __mul__(self, other):
        F = self.spec
        if isinstance(other, int):
            return Form(F, self.nvars, {
                e: F.mul(c, other) for e, c in self.terms.items()
            })
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) ^ F.mul(c1, c2)
        return Form(F, self.nvars, terms)

    def square(self):
        F = self.spec
        return Form(F, self.nvars, {
            tuple(2 * k for k in e): F.square(c) for e, c in self.terms.items()
        })

    def monic(self):
        """Scale so the leading term (in sorted order) has coefficient 1."""
        if not self.terms:
            return self
        lead = self.terms[max(self.terms)]
        return self * self.spec.inv(lead)

    def evaluate(self, point):
        F = self.spec
        value = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = F.mul(term, F.pow(x, k))
                    if not term:
                        break
            value ^= term
        return value

    def partial(self, i):
        """Formal derivative; in characteristic 2 odd exponents survive."""
        terms = {}
        for e, c in self.terms.items():
            if e[i] % 2:
                d = list(e)
                d[i] -= 1
                terms[tuple(d)] = c
        return Form(self.spec, self.nvars, terms)

    def compose(self, forms):
        """Substitute variable i by forms[i]."""
        F = self.spec
        nvars = forms[0].nvars
        powers = [{0: Form.constant(F, nvars)} for _ in forms]
        result = Form(F, nvars)
        for e, c in self.terms.items():
            term = Form.constant(F, nvars, c)
            for i, k in enumerate(e):
                if k:
                    if k not in powers[i]:
                        p = powers[i][0]
                        for _ in range(k):
                            p = p * forms[i]
                        powers[i][k] = p
                    term = term * powers[i][k]
            result = result + term
        return result

    def substitute(self, T):
        """f(T x) for a 3x3 matrix T."""
        return self.compose([Form.linear(self.spec, row) for row in T])

    def restrict(self, u, v):
        """Binary form g(s, t) = f(s u + t v)."""
        F = self.spec
        return self.compose([
            Form(F, 2, {(1, 0): a, (0, 1): b}) for a, b in zip(u, v)
        ])

    def divide_linear(self, k):
        """Exact quotient by the linear form k.x, or None."""
        F = self.spec
        p = next(i for i, x in enumerate(k) if x)
        inv = F.inv(k[p])
        rest = [(j, F.mul(inv, k[j])) for j in range(self.nvars)
                if j != p and k[j]]
        terms = dict(self.terms)
        quotient = {}
        while True:
            pending = [e for e in terms if e[p]]
            if not pending:
                break
            e = max(pending, key=lambda e: e[p])
            c = terms.pop(e)
            d = list(e)
            d[p] -= 1
            d = tuple(d)
            quotient[d] = quotient.get(d, 0) ^ F.mul(c, inv)
            for j, kj in rest:
                m = list(d)
                m[j] += 1
                m = tuple(m)
                value = terms.get(m, 0) ^ F.mul(c, kj)
                if value:
                    terms[m] = value
                else:
                    terms.pop(m, None)
        if terms:
            return None
        return Form(F, self.nvars, quotient)

    def embedded(self, embedding):
        return Form(embedding.ext, self.nvars, {
            e: embedding.embed(c) for e, c in self.terms.items()
        })


@lru_cache(maxsize=None)
def _monomial_table(F, exps):
    """Values of one monomial at every point of PG(2,q)."""
    return tuple(
        _power_product(F, p, exps) for p in pg2_points(F)
    )


def _power_product(F, p, exps):
    value = 1
    for x, k in zip(p, exps):
        if k:
            value = F.mul(value, F.pow(x, k))
    return value


def zero_indices(form):
    """Indices into pg2_points of the zeros of a ternary form."""
    F = form.spec
    columns = [
        (c, _monomial_table(F, e)) for e, c in form.terms.items()
    ]
    mul = F.mul
    zeros = []
    for i in range(len(pg2_points(F))):
        value = 0
        for c, column in columns:
            m = column[i]
            if m:
                value ^= mul(c, m)
        if not value:
            zeros.append(i)
    return zeros


class _AllPoints:
    """Sentinel: the identically zero cubic vanishes everywhere."""

    def __repr__(self):
        return 'ALL_POINTS'

    def __bool__(self):
        return True


ALL_POINTS = _AllPoints()


@dataclass(frozen=True)
class CubicCurve:
    """Cubic C(A, a012); see CUBIC_MONOMIALS for the layout of A."""
    spec: object
    A: tuple
    a012: int

    @classmethod
    def from_form(cls, form):
        A = tuple(
            tuple(form.coefficient(_matrix_monomial(i, j)) for j in range(3))
            for i in range(3)
        )
        return cls(form.spec, A, form.coefficient(XYZ))

    @classmethod
    def from_coefficients(cls, F, coeffs):
        """From the ten coefficients in CUBIC_NAMES order."""
        return cls.from_form(Form(F, 3, dict(zip(CUBIC_MONOMIALS, coeffs))))

    @cached_property
    def form(self):
        terms = {XYZ: self.a012}
        for i in range(3):
            for j in range(3):
                terms[_matrix_monomial(i, j)] = self.A[i][j]
        return Form(self.spec, 3, terms)

    def coefficients(self):
        return tuple(self.form.coefficient(e) for e in CUBIC_MONOMIALS)

    def is_zero(self):
        return self.form.is_zero()

    def evaluate(self, point):
        return self.form.evaluate(point)


def determinant_form(F, generators):
    """det(x M1 + y M2 + z M3) as a ternary cubic."""
    L = [
        Form.linear(F, tuple(g[i] for g in generators)) for i in range(6)
    ]
    return (
        L[0] * L[3] * L[5]
        + L[0] * L[4].square()
        + L[5] * L[1].square()
        + L[3] * L[2].square()
    )


def cubic_of_plane(plane):
    return CubicCurve.from_form(determinant_form(plane.spec, plane.generators))


def rational_points(C):
    """Zeros of C in PG(2,q); ALL_POINTS for the zero cubic."""
    if C.is_zero():
        return ALL_POINTS
    points = pg2_points(C.spec)
    return [points[i] for i in zero_indices(C.form)]


def phi(F, A, a012):
    """(Phi(A), a012^2): cofactor matrix plus a012 times the swap pattern."""
    mul = F.mul
    out = []
    for i in range(3):
        r0, r1 = [r for r in range(3) if r != i]
        row = []
        for j in range(3):
            c0, c1 = [c for c in range(3) if c != j]
            cofactor = mul(A[r0][c0], A[r1][c1]) ^ mul(A[r0][c1], A[r1][c0])
            if i != j:
                cofactor ^= mul(a012, A[i][3 - i - j])
            row.append(cofactor)
        out.append(tuple(row))
    return tuple(out), F.square(a012)


def hessian(C):
    """C(Phi^2(A), a012^4); needs a012 != 0."""
    if not C.a012:
        raise PreconditionError('the Hessian route needs a012 != 0')
    F = C.spec
    A1, b1 = phi(F, C.A, C.a012)
    A2, b2 = phi(F, A1, b1)
    return CubicCurve(F, A2, b2)


def _gradient(form):
    return [form.partial(i) for i in range(3)]


def is_singular_at(form, point, gradient=None):
    gradient = gradient or _gradient(form)
    return not form.evaluate(point) and not any(
        g.evaluate(point) for g in gradient
    )


def singular_points(C):
    if C.is_zero():
        raise DomainError('the zero cubic has no singular locus')
    gradient = _gradient(C.form)
    return [
        p for p in rational_points(C)
        if is_singular_at(C.form, p, gradient)
    ]


def inflexion_points(C):
    """Non-singular rational points of C on its Hessian."""
    H = hessian(C)
    gradient = _gradient(C.form)
    return [
        p for p in rational_points(C)
        if not H.evaluate(p) and not is_singular_at(C.form, p, gradient)
    ]


def pg1_points(F):
    return projective_points(F, 1)


def inflexions_on_line(C, u, v, embedding=None):
    """
    Inflexion points of C on the line spanned by the parameter points
    u, v, counted over F_q or over the extension field of embedding.
    """
    H = hessian(C)
    f, h = C.form, H.form
    if embedding is not None:
        f, h = f.embedded(embedding), h.embedded(embedding)
        u = tuple(embedding.embed(x) for x in u)
        v = tuple(embedding.embed(x) for x in v)
    E = f.spec
    gradient = _gradient(f)
    found = []
    for s, t in pg1_points(E):
        p = tuple(E.mul(s, a) ^ E.mul(t, b) for a, b in zip(u, v))
        if f.evaluate(p) or h.evaluate(p):
            continue
        if any(g.evaluate(p) for g in gradient):
            found.append(p)
    return found


def conic_is_nonsingular(form):
    """a00 a12^2 + a11 a02^2 + a22 a01^2 + a01 a02 a12 != 0."""
    F = form.spec
    c = form.coefficient
    a00, a11, a22 = c((2, 0, 0)), c((0, 2, 0)), c((0, 0, 2))
    a01, a02, a12 = c((1, 1, 0)), c((1, 0, 1)), c((0, 1, 1))
    mul, sq = F.mul, F.square
    delta = (
        mul(a00, sq(a12)) ^ mul(a11, sq(a02)) ^ mul(a22, sq(a01))
        ^ mul(mul(a01, a02), a12)
    )
    return bool(delta)


class FactorizationType(enum.Enum):
    IDENTICALLY_ZERO = 'IdenticallyZero'
    TRIPLE_LINE = 'TripleLine'
    DOUBLE_LINE_PLUS_LINE = 'DoubleLinePlusLine'
    THREE_CONCURRENT_LINES = 'ThreeConcurrentLines'
    THREE_NONCONCURRENT_LINES = 'ThreeNonConcurrentLines'
    LINE_TIMES_IRREDUCIBLE_CONIC = 'LineTimesIrreducibleConic'
    LINE_PLUS_CONJUGATE_PAIR = 'LinePlusConjugatePair'
    IRREDUCIBLE_CUBIC = 'IrreducibleCubic'


@dataclass(frozen=True)
class Factorization:
    """Rational linear components (dual vector, multiplicity) and residual."""
    kind: FactorizationType
    lines: tuple
    residual: Form
    tangent: bool = None

    def product(self):
        result = self.residual
        for k, multiplicity in self.lines:
            for _ in range(multiplicity):
                result = result * Form.linear(result.spec, k)
        return result

    def simple_lines(self):
        return [k for k, m in self.lines if m == 1]

    def multiple_lines(self):
        return [k for k, m in self.lines if m > 1]


def linear_factors(form):
    """Split off every rational linear factor by exact division."""
    F = form.spec
    lines = []
    residual = form
    for k in pg2_points(F):
        multiplicity = 0
        while residual.degree:
            quotient = residual.divide_linear(k)
            if quotient is None:
                break
            residual = quotient
            multiplicity += 1
        if multiplicity:
            lines.append((k, multiplicity))
        if not residual.degree:
            break
    return lines, residual


def factorization_type(C):
    F = C.spec
    form = C.form if isinstance(C, CubicCurve) else C
    if form.is_zero():
        return Factorization(
            FactorizationType.IDENTICALLY_ZERO, (), form,
        )
    lines, residual = linear_factors(form)
    lines = tuple(lines)
    multiplicities = sorted((m for _, m in lines), reverse=True)
    degree = residual.degree

    if degree == 0:
        if multiplicities == [3]:
            kind = FactorizationType.TRIPLE_LINE
        elif multiplicities == [2, 1]:
            kind = FactorizationType.DOUBLE_LINE_PLUS_LINE
        elif det3(F, [k for k, _ in lines]):
            kind = FactorizationType.THREE_NONCONCURRENT_LINES
        else:
            kind = FactorizationType.THREE_CONCURRENT_LINES
        return Factorization(kind, lines, residual)

    if degree == 2:
        (k, _), = lines
        if not conic_is_nonsingular(residual):
            return Factorization(
                FactorizationType.LINE_PLUS_CONJUGATE_PAIR, lines, residual,
            )
        u, v = line_basis(k)
        section = residual.restrict(u, v)
        tangent = not section.coefficient((1, 1))
        return Factorization(
            FactorizationType.LINE_TIMES_IRREDUCIBLE_CONIC, lines, residual,
            tangent,
        )

    return Factorization(FactorizationType.IRREDUCIBLE_CUBIC, lines, residual)
