"""
Tests for points, lines and planes of PG(2,q) and PG(5,q).
"""
from django.test import SimpleTestCase

from geometry.exceptions import DependenceError, DomainError
from geometry.field import field_for
from geometry.parsing import parse_pencil
from geometry.projective import (
    LinePG5,
    Plane,
    ProjectivePoint,
    collinear,
    dot,
    enumerate_planes_through,
    iter_lines,
    lines_of_plane,
    mat_inv,
    mat_mul,
    meet_with_nucleus_plane,
    normalize,
    null_space,
    pg2_points,
    points_of,
    rref,
    span,
)


class ProjectivePointTests(SimpleTestCase):

    def test_pg2_points(self):
        for q in (2, 4, 8):
            F = field_for(q)
            points = pg2_points(F)
            self.assertEqual(len(points), q * q + q + 1)
            self.assertEqual(len(set(points)), len(points))
            self.assertTrue(all(normalize(F, p) == p for p in points))

    def test_normalize_zero_vector(self):
        with self.assertRaises(DomainError):
            normalize(field_for(4), (0, 0, 0))

    def test_point_equality_is_projective(self):
        F = field_for(4)
        self.assertEqual(
            ProjectivePoint.of(F, (2, 2, 0)),
            ProjectivePoint.of(F, (1, 1, 0)),
        )


class SubspaceTests(SimpleTestCase):
    """Test lines and planes of PG(5,q)."""

    def setUp(self):
        self.F = field_for(4)

    def test_span_dependent_points(self):
        F = self.F
        p = ProjectivePoint.of(F, (1, 0, 0, 0, 0, 0))
        r = ProjectivePoint.of(F, (0, 1, 0, 0, 0, 0))
        s = ProjectivePoint.of(F, (1, 1, 0, 0, 0, 0))

        self.assertIsInstance(span([p, r]), LinePG5)
        with self.assertRaises(DependenceError) as cm:
            span([p, r, s])
        self.assertEqual(cm.exception.rank, 2)

    def test_plane_equality_ignores_generators(self):
        F = self.F
        a = Plane(F, [(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0),
                      (0, 0, 1, 0, 0, 0)])
        b = Plane(F, [(1, 1, 0, 0, 0, 0), (0, 2, 0, 0, 0, 0),
                      (3, 0, 1, 0, 0, 0)])
        self.assertEqual(a, b)
        self.assertEqual(a.key, b.key)

    def test_points_of_subspaces(self):
        F = self.F
        plane = parse_pencil(F, 'x y . ; y z . ; . . .')
        self.assertEqual(len(list(points_of(plane))), 21)
        for _, line in lines_of_plane(plane):
            points = list(points_of(line))
            self.assertEqual(len(points), 5)
            self.assertTrue(all(plane.contains(tuple(p)) for p in points))

    def test_meet_with_nucleus_plane(self):
        F = self.F
        nucleus = parse_pencil(F, '. x y ; x . z ; y z .')
        sigma1 = parse_pencil(F, 'x y . ; y z . ; . . .')
        self.assertEqual(meet_with_nucleus_plane(nucleus).dimension, 2)
        self.assertEqual(meet_with_nucleus_plane(sigma1).dimension, 0)

    def test_null_space(self):
        F = self.F
        rows = [(1, 2, 0, 3, 0, 1), (0, 1, 1, 0, 2, 0), (0, 0, 0, 1, 1, 1)]
        basis = null_space(F, rows)
        self.assertEqual(len(basis), 3)
        for h in basis:
            for r in rows:
                self.assertEqual(dot(F, h, r), 0)

    def test_collinear(self):
        F = self.F
        self.assertTrue(collinear(F, [(1, 0, 0), (0, 1, 0), (1, 1, 0)]))
        self.assertFalse(collinear(F, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))

    def test_matrix_inverse(self):
        F = self.F
        A = ((1, 2, 0), (0, 1, 0), (1, 0, 1))
        identity = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        self.assertEqual(mat_mul(F, A, mat_inv(F, A)), identity)
        with self.assertRaises(DomainError):
            mat_inv(F, ((1, 1, 0), (1, 1, 0), (0, 0, 1)))

    def test_matrix_inverse_6x6(self):
        F = field_for(8)
        A = tuple(
            tuple(0 if j < i else (i + 2 * j) % F.q or 1 for j in range(6))
            for i in range(6)
        )
        identity = tuple(
            tuple(int(i == j) for j in range(6)) for i in range(6)
        )
        self.assertEqual(mat_mul(F, A, mat_inv(F, A)), identity)
        self.assertEqual(mat_mul(F, mat_inv(F, A), A), identity)

    def test_null_space_of_a_plane(self):
        F = field_for(8)
        plane = parse_pencil(F, 'x y . ; y z . ; . . z')
        basis = null_space(F, plane.generators)
        self.assertEqual(len(basis), 3)
        self.assertEqual(rref(F, basis)[1], 3)
        for h in basis:
            for g in plane.generators:
                self.assertEqual(dot(F, h, g), 0)


class EnumerationTests(SimpleTestCase):
    """Test the canonical enumerations at q=2."""

    def setUp(self):
        self.F = field_for(2)

    def test_line_count(self):
        self.assertEqual(sum(1 for _ in iter_lines(self.F)), 651)

    def test_planes_through_a_point(self):
        F = self.F
        P = ProjectivePoint.of(F, (0, 1, 0, 1, 1, 0))
        planes = list(enumerate_planes_through(P))
        self.assertEqual(len(planes), 155)
        self.assertEqual(len({plane.key for plane in planes}), 155)
        self.assertTrue(all(plane.contains(tuple(P)) for plane in planes))
