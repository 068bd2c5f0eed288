"""
Tests for the plane classifier and the orbit representatives.
"""
import numpy as np

from django.conf import settings
from django.test import SimpleTestCase

from geometry import cubics
from geometry.cubics import FactorizationType
from geometry.exceptions import InvalidLabelError, OutOfScopeError
from geometry.field import field_for
from geometry.lines import PointOrbitDistribution, point_od
from geometry.parsing import parse_pencil
from geometry.planes import (
    HyperplaneOrbit,
    PlaneOrbitLabel,
    PlaneProbe,
    classify_plane,
    classify_plane_record,
    full_record,
    hyperplane_od,
    hyperplane_orbit,
    invariants_of,
    pi_bc,
    pi_c,
    plane_ods,
    representative,
    sigma6_plane,
    valid_labels,
)
from geometry.projective import collinear
from geometry.veronese import apply, random_collineation

L = PlaneOrbitLabel
NUCLEUS_PLANE = '. x y ; x . z ; y z .'


class LabelTests(SimpleTestCase):

    def test_parse(self):
        for text in ('Σ14′', 'S14P', "S14'", '14p', 's14p'):
            self.assertIs(L.parse(text), L.S14P)
        self.assertIs(L.parse('Σ1'), L.S1)
        self.assertIs(L.parse('s10'), L.S10)

    def test_parse_unknown(self):
        for text in ('Σ99', 'Σ', 'o15'):
            with self.assertRaises(InvalidLabelError):
                L.parse(text)

    def test_fifteen_orbits_for_every_q(self):
        self.assertNotIn(L.S14, valid_labels(2))
        self.assertNotIn(L.S13, valid_labels(2))
        self.assertNotIn(L.S14, valid_labels(4))
        self.assertNotIn(L.S15P, valid_labels(4))
        self.assertNotIn(L.S14P, valid_labels(8))
        for q in (2, 4, 8, 16):
            self.assertEqual(len(valid_labels(q)), 15)

    def test_distributions_cover_the_plane(self):
        for q in (4, 8, 16, 32):
            for label, od in plane_ods(q).items():
                self.assertEqual(od.total, q * q + q + 1, label)


class ClassifyPlaneTests(SimpleTestCase):
    """Test the decision tree on known planes."""

    def test_representatives(self):
        for q in (4, 8):
            F = field_for(q)
            expected = plane_ods(q)
            for label in valid_labels(q):
                plane = representative(label, F)
                self.assertIs(classify_plane(plane), label)
                self.assertEqual(point_od(plane), expected[label], label)

    def test_known_distributions(self):
        F = field_for(4)
        od = PointOrbitDistribution
        self.assertEqual(
            point_od(representative(L.S10, F)), od(1, 1, 7, 12),
        )
        self.assertEqual(
            point_od(representative(L.S14P, F)), od(1, 0, 3, 17),
        )
        self.assertEqual(
            point_od(parse_pencil(F, 'x y . ; y z . ; . . .')),
            od(5, 1, 15, 0),
        )

    def test_sigma6_and_sigma14p_are_separated(self):
        """Test three collinear rank-2 points alone do not give Σ6."""
        F = field_for(4)
        sigma14p = PlaneProbe(representative(L.S14P, F))
        self.assertEqual(sigma14p.point_od.as_list(), [1, 0, 3, 17])
        self.assertTrue(sigma14p.rank2_collinear)
        self.assertIs(classify_plane(sigma14p.plane), L.S14P)

        sigma6 = PlaneProbe(representative(L.S6, F))
        self.assertEqual(sigma6.point_od.as_list(), [1, 0, 5, 15])
        self.assertTrue(sigma6.rank2_collinear)
        self.assertIs(classify_plane(sigma6.plane), L.S6)

    def test_representatives_at_q2(self):
        F = field_for(2)
        for label in valid_labels(2):
            self.assertIs(classify_plane(representative(label, F)), label)

    def test_missing_orbit(self):
        with self.assertRaises(InvalidLabelError):
            representative(L.S14, field_for(4))
        with self.assertRaises(InvalidLabelError):
            representative(L.S14P, field_for(8))

    def test_out_of_scope(self):
        F = field_for(4)
        plane = parse_pencil(F, NUCLEUS_PLANE)
        with self.assertRaises(OutOfScopeError) as cm:
            classify_plane(plane)
        self.assertEqual(str(cm.exception), 'out of scope: no rank-1 point')
        with self.assertRaises(OutOfScopeError):
            invariants_of(plane)

    def test_record(self):
        F = field_for(4)
        label, record = classify_plane_record(representative(L.S2, F))
        self.assertIs(label, L.S2)
        self.assertEqual(record.point_od.as_list(), [3, 0, 9, 9])
        self.assertIs(
            record.cubic_type, FactorizationType.THREE_NONCONCURRENT_LINES,
        )
        self.assertEqual(record.cubic.a012, 1)

    def test_full_record(self):
        F = field_for(4)
        _, record = full_record(representative(L.S10, F))
        self.assertEqual(sum(record.line_od.values()), 21)
        self.assertIsNone(record.inflexion_count)

        _, record = full_record(representative(L.S12, F))
        self.assertEqual(record.inflexion_count, 1)

    def test_equivariance(self):
        """Classification is constant on orbits of random collineations."""
        rng = np.random.default_rng(settings.GEOMETRY['SEED'])
        samples = 100 if settings.GEOMETRY['SLOW_SUITE'] else 10
        for q in (4, 8):
            F = field_for(q)
            for label in valid_labels(q):
                plane = representative(label, F)
                for _ in range(samples):
                    g = random_collineation(F, rng)
                    self.assertIs(classify_plane(apply(g, plane)), label)


class InflexionFamilyTests(SimpleTestCase):
    """Test how the planes pi_c split into Σ12, Σ13 and Σ14."""

    def inflexions(self, plane):
        return len(cubics.inflexion_points(cubics.cubic_of_plane(plane)))

    def test_sigma12_and_sigma13_swap_with_parity(self):
        F4, F8 = field_for(4), field_for(8)
        self.assertEqual(self.inflexions(representative(L.S12, F4)), 1)
        self.assertEqual(self.inflexions(representative(L.S13, F4)), 0)
        self.assertEqual(self.inflexions(representative(L.S12, F8)), 0)
        self.assertEqual(self.inflexions(representative(L.S13, F8)), 1)
        self.assertEqual(self.inflexions(representative(L.S14, F8)), 3)

    def test_sigma14_inflexions_are_collinear(self):
        plane = pi_bc(field_for(8), 1, 1)
        self.assertIs(classify_plane(plane), L.S14)
        points = cubics.inflexion_points(cubics.cubic_of_plane(plane))
        self.assertEqual(set(points), {(0, 1, 0), (0, 0, 1), (0, 1, 1)})
        self.assertTrue(collinear(plane.spec, points))

    def test_pi_c_labels(self):
        F = field_for(8)
        for c in range(1, F.q):
            self.assertIn(
                classify_plane(pi_c(F, c)), {L.S12, L.S13, L.S14},
            )


class HyperplaneTests(SimpleTestCase):

    def test_hyperplane_orbits(self):
        F = field_for(8)
        self.assertIs(hyperplane_orbit(F, (1, 0, 0, 0, 0, 0)),
                      HyperplaneOrbit.H1)
        self.assertIs(hyperplane_orbit(F, (0, 1, 0, 0, 0, 0)),
                      HyperplaneOrbit.H2R)
        self.assertIs(hyperplane_orbit(F, (0, 0, 0, 1, 1, 1)),
                      HyperplaneOrbit.H2I)
        self.assertIs(hyperplane_orbit(F, (0, 0, 1, 1, 0, 0)),
                      HyperplaneOrbit.H3)

    def test_sigma6_hyperplane_distribution(self):
        self.assertEqual(
            hyperplane_od(representative(L.S6, field_for(4))),
            [0, 5, 1, 15],
        )
        F = field_for(8)
        c = next(c for c in range(1, F.q) if F.trace(F.inv(c)) == 1)
        self.assertEqual(hyperplane_od(sigma6_plane(F, c)), [0, 9, 1, 63])
