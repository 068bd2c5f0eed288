"""
Tests for the line orbits of PG(5,q).
"""
from django.test import SimpleTestCase

from geometry.exceptions import UnsupportedFieldError
from geometry.field import field_for
from geometry.lines import (
    CANDIDATE_LINES,
    LineOrbitLabel,
    PointOrbitDistribution,
    classify_line,
    determinant_zeros_over_extension,
    line_od,
    line_ods,
    point_od,
    representative_line,
)
from geometry.orbits import pgl3_order, stabilizer_report
from geometry.parsing import parse_pencil
from geometry.projective import LinePG5


class LineDistributionTests(SimpleTestCase):

    def test_distributions_cover_the_line(self):
        for q in (4, 8, 16):
            for label, od in line_ods(q).items():
                self.assertEqual(od.total, q + 1, label)

    def test_distribution_helpers(self):
        od = PointOrbitDistribution(1, 1, 7, 12)
        self.assertEqual(od.as_list(), [1, 1, 7, 12])
        self.assertEqual(od.r2, 8)
        self.assertEqual(str(od), '[1,1,7,12]')


class ClassifyLineTests(SimpleTestCase):
    """Test the line classifier."""

    def test_candidate_lines(self):
        for q in (4, 8):
            F = field_for(q)
            for label, rows in CANDIDATE_LINES.items():
                L = LinePG5(F, rows)
                self.assertIs(classify_line(L), label)
                self.assertEqual(point_od(L), line_ods(q)[label])

    def test_every_orbit_has_a_representative(self):
        F = field_for(4)
        for label in LineOrbitLabel:
            L = representative_line(label, F)
            self.assertIs(classify_line(L), label)

    def test_o15_and_o16_2_split_over_the_quadratic_extension(self):
        F = field_for(4)
        o15 = representative_line(LineOrbitLabel.O15, F)
        o16 = representative_line(LineOrbitLabel.O16_2, F)
        self.assertEqual(point_od(o15), point_od(o16))
        self.assertEqual(len(determinant_zeros_over_extension(o15)), 3)
        self.assertEqual(len(determinant_zeros_over_extension(o16)), 1)

    def test_lines_undefined_at_q2(self):
        F = field_for(2)
        with self.assertRaises(UnsupportedFieldError):
            classify_line(LinePG5(F, CANDIDATE_LINES[LineOrbitLabel.O5]))
        with self.assertRaises(UnsupportedFieldError):
            line_od(parse_pencil(F, 'x . . ; . y . ; . . z'))

    def test_line_od_of_a_plane(self):
        F = field_for(4)
        od = line_od(parse_pencil(F, 'x y . ; y z . ; . . z'))
        self.assertEqual(sum(od.values()), 21)
        self.assertTrue(all(isinstance(k, LineOrbitLabel) for k in od))


class LineOrbitSizeTests(SimpleTestCase):
    """The fifteen line orbits partition the lines of PG(5,4)."""

    def test_orbit_sizes_sum_to_all_lines(self):
        q = 4
        F = field_for(q)
        total = 0
        for label in LineOrbitLabel:
            report = stabilizer_report(label, F)
            self.assertEqual(
                report.stabilizer_order * report.orbit_size, pgl3_order(q),
            )
            total += report.orbit_size
        lines = (q**6 - 1) * (q**5 - 1) // ((q**2 - 1) * (q - 1))
        self.assertEqual(total, lines)
