"""
Arithmetic and equation solving over GF(2^h).

Fields are built and verified with galois; the hot paths work on plain
integers (the polynomial-basis bit patterns) through log/exp tables.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import galois
import numpy as np

from geometry import conf
from geometry.exceptions import (
    DegenerateInputError,
    DomainError,
    InternalInvariantError,
    InvalidModulusError,
    NotReducibleError,
    UnsupportedFieldError,
)

logger = logging.getLogger(__name__)

MAX_H = 16

DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


class FieldSpec:
    """GF(2^h) with a fixed irreducible modulus."""

    def __init__(self, h, modulus):
        if not 1 <= h <= MAX_H:
            raise InvalidModulusError(f'h={h} outside 1..{MAX_H}')
        poly = galois.Poly.Int(modulus)
        if poly.degree != h or not poly.is_irreducible():
            raise InvalidModulusError(
                f'{modulus:b} is not an irreducible polynomial of degree {h}'
            )
        self.h = h
        self.q = 1 << h
        self.modulus = modulus
        if h == 1:
            self.gf = galois.GF(2)
        else:
            self.gf = galois.GF(2**h, irreducible_poly=poly, verify=False)

        alpha = self.gf.primitive_element
        powers = np.asarray(alpha ** np.arange(self.q - 1)).tolist()
        self.primitive = int(alpha)
        self._exp = powers + powers
        self._log = [0] * self.q
        for i, value in enumerate(powers):
            self._log[value] = i
        self._trace = np.asarray(self.gf.elements.field_trace()).tolist()
        logger.debug('built %r', self)

    def __repr__(self):
        return f'GF(2^{self.h}) mod {self.modulus:b}'

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.h, self.modulus) == (other.h, other.modulus)

    def __hash__(self):
        return hash((self.h, self.modulus))

    def __reduce__(self):
        return (_build_field, (self.h, self.modulus))

    @property
    def modulus_bits(self):
        return format(self.modulus, 'b')

    def elements(self):
        return range(self.q)

    def element(self, bits):
        return FieldElement(bits, self)

    def mul(self, a, b):
        if a and b:
            return self._exp[self._log[a] + self._log[b]]
        return 0

    def square(self, a):
        if a:
            return self._exp[2 * self._log[a]]
        return 0

    def inv(self, a):
        if not a:
            raise DomainError('zero has no inverse')
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if not a:
            if n < 0:
                raise DomainError('zero has no inverse')
            return 0 if n else 1
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def sqrt(self, a):
        """Square root as the inverse Frobenius x^(q/2)."""
        return self.pow(a, self.q // 2)

    def trace(self, a):
        return self._trace[a]

    def log(self, a):
        if not a:
            raise DomainError('log of zero')
        return self._log[a]


@dataclass(frozen=True)
class FieldElement:
    """Value type for an element of a FieldSpec."""
    bits: int
    spec: FieldSpec

    def __post_init__(self):
        if not 0 <= self.bits < self.spec.q:
            raise DomainError(f'{self.bits} is not an element of {self.spec}')

    def __repr__(self):
        return f'FieldElement({self.bits:#x})'

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise DomainError('elements of different fields')
            return other.bits
        if isinstance(other, int):
            return FieldElement(other, self.spec).bits
        return NotImplemented

    def __add__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return value
        return FieldElement(self.bits ^ value, self.spec)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return value
        return FieldElement(self.spec.mul(self.bits, value), self.spec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = self._other(other)
        if value is NotImplemented:
            return value
        return FieldElement(self.spec.div(self.bits, value), self.spec)

    def __pow__(self, n):
        return FieldElement(self.spec.pow(self.bits, n), self.spec)

    def __neg__(self):
        return self

    def __bool__(self):
        return bool(self.bits)

    def __int__(self):
        return self.bits

    def __index__(self):
        return self.bits

    def inverse(self):
        return FieldElement(self.spec.inv(self.bits), self.spec)

    def sqrt(self):
        return FieldElement(self.spec.sqrt(self.bits), self.spec)


def exponent_of(q):
    """Return h with q = 2^h."""
    if not isinstance(q, int) or q < 2 or q & (q - 1):
        raise UnsupportedFieldError(f'q={q} is not a power of two')
    h = q.bit_length() - 1
    if h > MAX_H:
        raise UnsupportedFieldError(f'q={q} exceeds 2^{MAX_H}')
    return h


def default_modulus(h):
    overrides = conf.moduli_overrides()
    if h in overrides:
        return overrides[h]
    try:
        return DEFAULT_MODULI[h]
    except KeyError:
        raise InvalidModulusError(f'no modulus configured for h={h}')


@lru_cache(maxsize=None)
def _build_field(h, modulus):
    return FieldSpec(h, modulus)


def field_for(q=None, *, h=None, modulus=None):
    """Return the (cached) field of order q, or of exponent h."""
    if h is None:
        h = exponent_of(q)
    if modulus is None:
        modulus = default_modulus(h)
    elif isinstance(modulus, str):
        try:
            modulus = int(modulus, 2)
        except ValueError:
            raise InvalidModulusError(f'{modulus!r} is not a bit string')
    return _build_field(h, modulus)


def _sweep_roots(F, coeffs):
    """Roots of a univariate polynomial by evaluation at every element."""
    poly = galois.Poly(coeffs, field=F.gf)
    values = np.asarray(poly(F.gf.elements))
    return np.flatnonzero(values == 0).tolist()


def _spec_of(*elements):
    spec = elements[0].spec
    for x in elements[1:]:
        if x.spec != spec:
            raise DomainError('elements of different fields')
    return spec


def trace(x):
    """Absolute trace Tr(x) = x + x^2 + ... + x^(2^(h-1)) in {0, 1}."""
    return x.spec.trace(x.bits)


def solve_quadratic(alpha, beta, gamma):
    """Roots of alpha X^2 + beta X + gamma, sorted by bit pattern."""
    F = _spec_of(alpha, beta, gamma)
    a, b, c = alpha.bits, beta.bits, gamma.bits
    if not a:
        raise DegenerateInputError('leading coefficient is zero')

    if not b:
        roots = [F.sqrt(F.div(c, a))]
    else:
        # X = (b/a) u turns the equation into u^2 + u = a c / b^2
        delta = F.div(F.mul(a, c), F.square(b))
        expected = 0 if F.trace(delta) else 2
        us = np.asarray(galois.Poly([1, 1, delta], field=F.gf).roots())
        us = us.tolist()
        if len(us) != expected:
            raise InternalInvariantError(
                f'u^2+u={delta:#x} has {len(us)} roots, expected {expected}'
            )
        scale = F.div(b, a)
        roots = sorted(F.mul(scale, u) for u in us)

    for r in roots:
        if F.mul(a, F.square(r)) ^ F.mul(b, r) ^ c:
            raise InternalInvariantError(f'{r:#x} is not a root')
    return [F.element(r) for r in roots]


@lru_cache(maxsize=None)
def admissible_scalars(F):
    """All a = (v+1/v)/(1+v+1/v)^3 with v outside GF(4)."""
    if F.q == 2:
        raise UnsupportedFieldError('admissibility needs q > 2')
    v = F.gf.elements
    one = F.gf(1)
    in_f4 = np.asarray(v**4 == v)
    v = v[~in_f4]
    v2 = v**2
    values = (v2 * (v2 + one)) / (v2 + v + one) ** 3
    return frozenset(np.unique(np.asarray(values)).tolist())


def is_admissible(a):
    F = a.spec
    if not a.bits:
        raise DomainError('admissibility is defined for a != 0')
    return a.bits in admissible_scalars(F)


def count_cubic_roots_depressed(a):
    """
    Roots of theta^3 + theta + a over F_q.

    Returns (count, roots); the count predicted from the trace and
    admissibility of a is checked against an exhaustive sweep.
    """
    F = a.spec
    if not a.bits:
        raise DomainError('theta^3 + theta needs separate handling')
    if F.q == 2:
        raise UnsupportedFieldError('root counting needs q > 2')

    if F.trace(F.inv(a.bits)) != F.trace(1):
        predicted = 1
    elif F.q != 4 and is_admissible(a):
        predicted = 3
    else:
        predicted = 0

    roots = _sweep_roots(F, [1, 0, 1, a.bits])
    if len(roots) != predicted:
        raise InternalInvariantError(
            f'theta^3+theta+{a.bits:#x}: {len(roots)} roots, '
            f'predicted {predicted}'
        )
    if predicted == 3:
        product = F.mul(F.mul(roots[0], roots[1]), roots[2])
        if product != a.bits:
            raise InternalInvariantError('root product differs from a')
    return predicted, [F.element(r) for r in roots]


@dataclass(frozen=True)
class DepressedCubic:
    """theta^3 + theta + a with X = scale * theta + shift."""
    a: FieldElement
    scale: FieldElement
    shift: FieldElement

    def to_original(self, theta):
        return self.scale * theta + self.shift


def reduce_cubic(a1, a2, a3):
    """Depress X^3 + a1 X^2 + a2 X + a3."""
    F = _spec_of(a1, a2, a3)
    s2 = a2.bits ^ F.square(a1.bits)
    if not s2:
        raise NotReducibleError('a2 = a1^2')
    s = F.sqrt(s2)
    a = F.div(a3.bits ^ F.mul(a2.bits, a1.bits), F.mul(s2, s))
    return DepressedCubic(F.element(a), F.element(s), a1)


def cubic_roots(a1, a2, a3):
    """Distinct roots of X^3 + a1 X^2 + a2 X + a3 over F_q."""
    F = _spec_of(a1, a2, a3)
    try:
        depressed = reduce_cubic(a1, a2, a3)
    except NotReducibleError:
        depressed = None
    if depressed is None or not depressed.a or F.q == 2:
        roots = _sweep_roots(F, [1, a1.bits, a2.bits, a3.bits])
        return [F.element(r) for r in roots]

    _, thetas = count_cubic_roots_depressed(depressed.a)
    roots = sorted(
        (depressed.to_original(t) for t in thetas), key=lambda r: r.bits,
    )
    for r in roots:
        if r**3 + a1 * r**2 + a2 * r + a3:
            raise InternalInvariantError(f'{r!r} is not a root')
    return roots


class ExtensionEmbedding:
    """
    GF(q) inside GF(q^k), k in {2, 3}, via a root of the base modulus.
    """

    def __init__(self, base, degree):
        if degree not in (2, 3):
            raise DomainError('extension degree must be 2 or 3')
        self.base = base
        self.degree = degree
        self.ext = field_for(h=base.h * degree)

        coeffs = [(base.modulus >> i) & 1 for i in range(base.h, -1, -1)]
        roots = _sweep_roots(self.ext, coeffs)
        if not roots:
            raise InternalInvariantError(
                f'{base} modulus has no root in {self.ext}'
            )
        self.generator_image = roots[0]

        powers = [1]
        for _ in range(base.h - 1):
            powers.append(self.ext.mul(powers[-1], self.generator_image))
        self._image = []
        for x in range(base.q):
            value = 0
            for i, p in enumerate(powers):
                if (x >> i) & 1:
                    value ^= p
            self._image.append(value)
        self._preimage = {v: x for x, v in enumerate(self._image)}

    def __repr__(self):
        return f'ExtensionEmbedding({self.base} -> {self.ext})'

    def embed(self, x):
        if isinstance(x, FieldElement):
            return self.ext.element(self._image[x.bits])
        return self._image[x]

    def restrict(self, y):
        bits = y.bits if isinstance(y, FieldElement) else y
        try:
            x = self._preimage[bits]
        except KeyError:
            raise DomainError(f'{bits:#x} is not in the image of {self.base}')
        if isinstance(y, FieldElement):
            return self.base.element(x)
        return x

    def _conjugates(self, y):
        out = [y]
        for _ in range(self.degree - 1):
            out.append(self.ext.pow(out[-1], self.base.q))
        return out

    def relative_trace(self, y):
        value = 0
        for c in self._conjugates(y):
            value ^= c
        return value

    def relative_norm(self, y):
        value = 1
        for c in self._conjugates(y):
            value = self.ext.mul(value, c)
        return value


@lru_cache(maxsize=None)
def extension(base, degree):
    return ExtensionEmbedding(base, degree)
