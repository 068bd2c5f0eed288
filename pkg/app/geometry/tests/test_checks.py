"""
Tests for the named verification checks.
"""
from unittest import mock

from django.conf import settings
from django.test import SimpleTestCase

from geometry import checks
from geometry.exceptions import UnsupportedFieldError
from geometry.field import admissible_scalars, field_for
from geometry.orbits import OrbitCensus


class RunCheckTests(SimpleTestCase):

    def test_unknown_check(self):
        with self.assertRaises(UnsupportedFieldError):
            checks.run_check('table2', field_for(4))

    def test_unsupported_field_is_a_failed_check(self):
        result = checks.run_check('nonexistence', field_for(8))
        self.assertFalse(result.passed)
        self.assertIn('q <= 4', result.details['error'])

    def test_table1(self):
        for q in (2, 4, 8):
            result = checks.run_check('table1', field_for(q))
            self.assertTrue(result.passed, result.details)
            self.assertEqual(len(result.details), 15)

    def test_solvers(self):
        qs = (2, 4, 8, 16, 32, 64) if settings.GEOMETRY['SLOW_SUITE'] else (
            2, 4, 8, 16, 32,
        )
        for q in qs:
            result = checks.run_check('solvers', field_for(q))
            self.assertTrue(result.passed, result.details)

    def test_sigma6_hyperplanes(self):
        for q in (4, 8):
            result = checks.run_check('sigma6-hyperplanes', field_for(q))
            self.assertTrue(result.passed, result.details)

    def test_given_census_is_used(self):
        census = OrbitCensus(
            q=8, modulus='1011', group='pgl3', counts={},
            representatives={}, total=0, complete=False,
            distributions={(1, 0, 72): 1},
        )
        with mock.patch('geometry.checks.census') as patched:
            result = checks.run_check(
                'nonexistence', field_for(8), census=census,
            )
        patched.assert_not_called()
        self.assertFalse(result.passed)


class InflexionTrichotomyTests(SimpleTestCase):

    def test_trichotomy(self):
        for q in (8, 16, 32):
            result = checks.run_check('inflexion-trichotomy', field_for(q))
            self.assertTrue(result.passed, result.details)

    def test_counts_follow_the_scalar(self):
        F = field_for(16)
        admissible = admissible_scalars(F)
        for c in range(1, F.q):
            expected = checks.expected_inflexions(F, c)
            if F.trace(c) != F.trace(1):
                self.assertEqual(expected, 1)
            elif F.inv(c) in admissible:
                self.assertEqual(expected, 3)
            else:
                self.assertEqual(expected, 0)

    def test_needs_q8(self):
        result = checks.run_check('inflexion-trichotomy', field_for(4))
        self.assertFalse(result.passed)
