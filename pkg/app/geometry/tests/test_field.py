"""
Tests for GF(2^h) arithmetic and the equation solvers.
"""
import itertools
import json
import tempfile
from pathlib import Path

import numpy as np

from django.test import SimpleTestCase, override_settings

from geometry import conf
from geometry.exceptions import (
    DegenerateInputError,
    DomainError,
    InvalidModulusError,
    NotReducibleError,
    UnsupportedFieldError,
)
from geometry.field import (
    admissible_scalars,
    count_cubic_roots_depressed,
    cubic_roots,
    extension,
    field_for,
    is_admissible,
    reduce_cubic,
    solve_quadratic,
    trace,
)


def brute_roots(F, coeffs):
    """Distinct roots of a polynomial (coefficients high to low)."""
    roots = []
    for x in range(F.q):
        value = 0
        for c in coeffs:
            value = F.mul(value, x) ^ c
        if not value:
            roots.append(x)
    return roots


class FieldConstructionTests(SimpleTestCase):
    """Test building fields."""

    def test_default_moduli(self):
        """Test every built-in modulus gives a field of order 2^h."""
        for h in list(range(1, 11)) + [16]:
            F = field_for(h=h)
            self.assertEqual(F.q, 2**h)
            self.assertEqual(len(F.modulus_bits), h + 1)

    def test_fields_are_cached(self):
        self.assertIs(field_for(8), field_for(h=3))

    def test_q_not_a_power_of_two(self):
        """Test q outside 2^1..2^16 is unsupported."""
        for q in (0, 1, 3, 6, 12, 2**17):
            with self.assertRaises(UnsupportedFieldError):
                field_for(q)

    def test_bad_moduli(self):
        """Test reducible, wrong-degree and malformed moduli."""
        for q, modulus in ((4, '101'), (8, '111'), (8, '1111'), (4, '1x1')):
            with self.assertRaises(InvalidModulusError):
                field_for(q, modulus=modulus)

    def test_moduli_file(self):
        """Test a moduli file overrides the built-in table."""
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        path = Path(tmp.name) / 'moduli.json'
        path.write_text(json.dumps({'3': '1101'}))
        conf.moduli_overrides.cache_clear()
        self.addCleanup(conf.moduli_overrides.cache_clear)

        with override_settings(GEOMETRY={'MODULI_FILE': str(path)}):
            F = field_for(8)

        self.assertEqual(F.modulus, 0b1101)
        self.assertEqual(F.modulus_bits, '1101')

    def test_moduli_file_bad_entry(self):
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        path = Path(tmp.name) / 'moduli.json'
        path.write_text(json.dumps({'3': '12'}))
        conf.moduli_overrides.cache_clear()
        self.addCleanup(conf.moduli_overrides.cache_clear)

        with override_settings(GEOMETRY={'MODULI_FILE': str(path)}):
            with self.assertRaises(InvalidModulusError):
                field_for(8)


class ArithmeticTests(SimpleTestCase):
    """Test the table arithmetic against galois."""

    def setUp(self):
        self.F = field_for(16)

    def test_mul_matches_galois(self):
        F = self.F
        for a in range(F.q):
            for b in range(F.q):
                self.assertEqual(F.mul(a, b), int(F.gf(a) * F.gf(b)))

    def test_inverse_division_and_sqrt(self):
        F = self.F
        for a in range(1, F.q):
            self.assertEqual(F.mul(a, F.inv(a)), 1)
            self.assertEqual(F.mul(F.div(7, a), a), 7)
            self.assertEqual(F.square(F.sqrt(a)), a)
            self.assertEqual(F.pow(a, F.q - 1), 1)

    def test_trace_is_additive(self):
        F = self.F
        self.assertEqual(F.trace(1), 0)
        self.assertEqual(field_for(8).trace(1), 1)
        for a in range(F.q):
            for b in (1, 2, 9):
                self.assertEqual(
                    F.trace(a ^ b), F.trace(a) ^ F.trace(b),
                )
        self.assertEqual(sum(F.trace(a) for a in range(F.q)), F.q // 2)

    def test_field_elements(self):
        """Test the operator wrapper agrees with the tables."""
        F = self.F
        x, y = F.element(3), F.element(5)
        self.assertEqual((x + y).bits, 6)
        self.assertEqual((x * y).bits, F.mul(3, 5))
        self.assertEqual(x / y * y, x)
        self.assertEqual((x * x.inverse()).bits, 1)
        self.assertEqual(trace(x), F.trace(3))


class QuadraticTests(SimpleTestCase):
    """Test solve_quadratic against exhaustive root search."""

    def test_agrees_with_brute_force(self):
        for q in (4, 8, 16):
            F = field_for(q)
            for a in (1, F.primitive):
                for b in range(q):
                    for c in range(q):
                        roots = solve_quadratic(
                            F.element(a), F.element(b), F.element(c),
                        )
                        self.assertEqual(
                            [r.bits for r in roots],
                            brute_roots(F, [a, b, c]),
                        )

    def test_every_quadratic_over_small_fields(self):
        for q in (2, 4, 8):
            F = field_for(q)
            for a in range(1, q):
                for b in range(q):
                    for c in range(q):
                        roots = solve_quadratic(
                            F.element(a), F.element(b), F.element(c),
                        )
                        self.assertEqual(
                            [r.bits for r in roots],
                            brute_roots(F, [a, b, c]),
                            (q, a, b, c),
                        )

    def test_root_count_follows_trace(self):
        """Test two roots iff Tr(ac/b^2) = 0."""
        F = field_for(32)
        one = F.element(1)
        for c in range(F.q):
            roots = solve_quadratic(one, one, F.element(c))
            self.assertEqual(len(roots), 0 if F.trace(c) else 2)

    def test_degenerate(self):
        F = field_for(8)
        with self.assertRaises(DegenerateInputError):
            solve_quadratic(F.element(0), F.element(1), F.element(1))

    def test_mixed_fields(self):
        with self.assertRaises(DomainError):
            solve_quadratic(
                field_for(8).element(1),
                field_for(16).element(1),
                field_for(8).element(1),
            )


class CubicSolverTests(SimpleTestCase):
    """Test the depressed cubic trichotomy and general cubic roots."""

    def test_admissible_count(self):
        for q in (4, 8, 16, 32, 64):
            self.assertEqual(
                len(admissible_scalars(field_for(q))), (q - 2) // 6,
            )

    def test_admissible_domain(self):
        with self.assertRaises(UnsupportedFieldError):
            admissible_scalars(field_for(2))
        with self.assertRaises(DomainError):
            is_admissible(field_for(8).element(0))

    def test_depressed_counts_agree_with_brute_force(self):
        for q in (4, 8, 16, 32, 64):
            F = field_for(q)
            seen = set()
            for a in range(1, q):
                count, roots = count_cubic_roots_depressed(F.element(a))
                self.assertEqual(count, len(brute_roots(F, [1, 0, 1, a])))
                self.assertEqual(len(roots), count)
                seen.add(count)
            expected = {0, 1, 3} if q >= 8 else {0, 1}
            self.assertEqual(seen, expected)

    def test_depressed_domain(self):
        with self.assertRaises(DomainError):
            count_cubic_roots_depressed(field_for(8).element(0))
        with self.assertRaises(UnsupportedFieldError):
            count_cubic_roots_depressed(field_for(2).element(1))

    def test_cubic_roots_random(self):
        rng = np.random.default_rng(20240601)
        for q in (8, 16, 32):
            F = field_for(q)
            for a1, a2, a3 in rng.integers(0, q, size=(200, 3)):
                a1, a2, a3 = int(a1), int(a2), int(a3)
                roots = cubic_roots(
                    F.element(a1), F.element(a2), F.element(a3),
                )
                self.assertEqual(
                    sorted(r.bits for r in roots),
                    brute_roots(F, [1, a1, a2, a3]),
                )

    def test_every_cubic(self):
        for q in (8, 16):
            F = field_for(q)
            for a1, a2, a3 in itertools.product(range(q), repeat=3):
                roots = cubic_roots(
                    F.element(a1), F.element(a2), F.element(a3),
                )
                bits = [r.bits for r in roots]
                self.assertEqual(bits, sorted(bits))
                self.assertEqual(
                    bits, brute_roots(F, [1, a1, a2, a3]), (q, a1, a2, a3),
                )

    def test_three_roots_come_back_sorted(self):
        F = field_for(8)
        roots = cubic_roots(F.element(0), F.element(1), F.element(1))
        self.assertEqual(
            [r.bits for r in roots], brute_roots(F, [1, 0, 1, 1]),
        )

    def test_reduce_cubic_not_reducible(self):
        F = field_for(8)
        with self.assertRaises(NotReducibleError):
            reduce_cubic(F.element(2), F.element(4), F.element(1))


class ExtensionTests(SimpleTestCase):
    """Test embeddings of GF(q) into GF(q^2) and GF(q^3)."""

    def test_embedding_is_a_field_homomorphism(self):
        for q, degree in ((4, 2), (4, 3), (8, 2)):
            F = field_for(q)
            emb = extension(F, degree)
            E = emb.ext
            self.assertEqual(E.q, q**degree)
            for a in range(q):
                self.assertEqual(emb.restrict(emb.embed(a)), a)
                for b in range(q):
                    self.assertEqual(
                        emb.embed(F.mul(a, b)),
                        E.mul(emb.embed(a), emb.embed(b)),
                    )
                    self.assertEqual(
                        emb.embed(a ^ b), emb.embed(a) ^ emb.embed(b),
                    )

    def test_relative_trace_and_norm(self):
        F = field_for(8)
        emb = extension(F, 3)
        for a in range(F.q):
            y = emb.embed(a)
            self.assertEqual(emb.relative_trace(y), y)
            self.assertEqual(emb.relative_norm(y), emb.embed(F.pow(a, 3)))

    def test_restrict_outside_image(self):
        F = field_for(4)
        emb = extension(F, 2)
        outside = next(
            y for y in range(emb.ext.q) if y not in
            {emb.embed(a) for a in range(F.q)}
        )
        with self.assertRaises(DomainError):
            emb.restrict(outside)

    def test_unsupported_degree(self):
        with self.assertRaises(DomainError):
            extension(field_for(4), 4)
