"""
Tests for the Veronese surface, point classes and the lifted action.
"""
import itertools

import numpy as np

from django.conf import settings
from django.test import SimpleTestCase

from geometry.exceptions import DomainError
from geometry.field import field_for
from geometry.projective import ProjectivePoint, dot, pg2_points, span
from geometry.veronese import (
    Collineation,
    PointClass,
    SymMat3,
    apply,
    class_code,
    classify_point,
    conic_of,
    conic_of_line,
    nucleus_of_conic,
    pack,
    point_class_table,
    points_of_class,
    preimage,
    random_collineation,
    rank,
    veronese_map,
    veronese_points,
    veronese_vector,
)


def random_point(F, rng):
    while True:
        y = tuple(int(x) for x in rng.integers(0, F.q, 6))
        if any(y):
            return ProjectivePoint.of(F, y)


class VeroneseTests(SimpleTestCase):
    """Test the Veronese map and point ranks."""

    def test_veronese_points_have_rank_one(self):
        for q in (2, 4, 8):
            F = field_for(q)
            points = veronese_points(F)
            self.assertEqual(len(set(points)), q * q + q + 1)
            for u, y in zip(pg2_points(F), points):
                self.assertEqual(rank(ProjectivePoint.of(F, y)), 1)
                self.assertEqual(preimage(F, y), u)

    def test_point_class_sizes(self):
        """Test rank-1 and nucleus classes both have q^2+q+1 points."""
        for q in (2, 4):
            F = field_for(q)
            sizes = {c: len(points_of_class(F, c)) for c in PointClass}
            self.assertEqual(sizes[PointClass.RANK1], q * q + q + 1)
            self.assertEqual(sizes[PointClass.RANK2_NUCLEUS], q * q + q + 1)
            self.assertEqual(
                sum(sizes.values()), (q**6 - 1) // (q - 1),
            )

    def test_nucleus_points_are_rank_two(self):
        F = field_for(4)
        P = ProjectivePoint.of(F, (0, 1, 2, 0, 3, 0))
        self.assertEqual(classify_point(P), PointClass.RANK2_NUCLEUS)
        self.assertEqual(SymMat3.from_point(P).rank(), 2)

    def test_class_table_matches_direct_computation(self):
        F = field_for(4)
        table = point_class_table(F)
        for y in itertools.islice(
            itertools.product(range(F.q), repeat=6), 1, None, 7,
        ):
            self.assertEqual(table[pack(F, y)], class_code(F, y))

    def test_no_class_table_above_eight(self):
        self.assertIsNone(point_class_table(field_for(16)))


class ConicTests(SimpleTestCase):
    """Test conics of the surface and their nuclei."""

    def setUp(self):
        self.F = field_for(8)

    def test_conic_of_secant_point(self):
        F = self.F
        u, v = (1, 0, 3), (0, 1, 5)
        R = ProjectivePoint.of(F, tuple(
            a ^ b for a, b in zip(veronese_vector(F, u),
                                  veronese_vector(F, v))
        ))
        conic = conic_of(R)
        self.assertEqual(dot(F, conic.line, u), 0)
        self.assertEqual(dot(F, conic.line, v), 0)
        self.assertEqual(len(conic.points), F.q + 1)
        self.assertTrue(all(conic.plane.contains(y) for y in conic.points))
        self.assertTrue(conic.plane.contains(tuple(R)))

    def test_nucleus_lies_in_nucleus_plane(self):
        F = self.F
        conic = conic_of(ProjectivePoint.of(F, (0, 1, 1, 0, 1, 0)))
        N = conic.nucleus
        self.assertEqual((N[0], N[3], N[5]), (0, 0, 0))
        self.assertTrue(conic.plane.contains(tuple(N)))

    def test_nucleus_lies_on_every_tangent(self):
        F = field_for(4)
        line = ProjectivePoint.of(F, (0, 0, 1))
        N = nucleus_of_conic(line)
        self.assertEqual(tuple(N), (0, 1, 0, 0, 0, 0))
        conic = conic_of_line(line)
        for y in conic.points:
            tangent = span([ProjectivePoint.of(F, y), N])
            on = [z for z in conic.points if tangent.contains(z)]
            self.assertEqual(on, [y])

    def test_conic_of_needs_rank_two(self):
        F = self.F
        with self.assertRaises(DomainError):
            conic_of(ProjectivePoint.of(F, veronese_vector(F, (1, 2, 3))))


class EquivarianceTests(SimpleTestCase):
    """Random collineations preserve ranks, classes and the surface."""

    samples = 1000 if settings.GEOMETRY['SLOW_SUITE'] else 100

    def test_rank_and_class_equivariance(self):
        rng = np.random.default_rng(settings.GEOMETRY['SEED'])
        for q in (4, 8):
            F = field_for(q)
            for _ in range(self.samples):
                g = random_collineation(F, rng)
                P = random_point(F, rng)
                self.assertEqual(classify_point(apply(g, P)),
                                 classify_point(P))

    def test_veronese_map_equivariance(self):
        rng = np.random.default_rng(settings.GEOMETRY['SEED'])
        F = field_for(8)
        for _ in range(self.samples):
            g = random_collineation(F, rng)
            u = ProjectivePoint.of(
                F, pg2_points(F)[int(rng.integers(0, 73))],
            )
            self.assertEqual(
                apply(g, veronese_map(u)), veronese_map(apply(g, u)),
            )

    def test_inverse(self):
        rng = np.random.default_rng(settings.GEOMETRY['SEED'])
        F = field_for(4)
        g = random_collineation(F, rng)
        identity = g.compose(g.inverse())
        P = random_point(F, rng)
        self.assertEqual(apply(identity, P), P)

    def test_singular_collineation(self):
        F = field_for(4)
        with self.assertRaises(DomainError):
            Collineation(F, ((1, 0, 0), (1, 0, 0), (0, 0, 1)))
