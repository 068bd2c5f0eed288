"""
Tests for models.
"""
from django.test import TestCase

from core import models
from geometry.orbits import OrbitCensus


def sample_census(**params):
    """Create and return a small census result."""
    defaults = {
        'q': 2,
        'modulus': '111',
        'group': 'pgl3',
        'counts': {'Σ1': 21, 'Σ2': 28},
        'representatives': {
            'Σ1': ((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0),
                   (0, 0, 0, 1, 0, 0)),
            'Σ2': ((1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0),
                   (0, 0, 0, 0, 0, 1)),
        },
        'total': 49,
        'complete': True,
        'runtime_seconds': 0.25,
    }
    defaults.update(params)
    return OrbitCensus(**defaults)


class ModelTests(TestCase):
    """Test models."""

    def test_create_census_run_from_census(self):
        """Test saving a census keeps its counts and configuration."""
        census = sample_census()
        run = models.CensusRun.objects.create_from_census(
            census, shards=4, output_path='/tmp/census.json',
        )

        run.refresh_from_db()
        self.assertEqual(run.q, 2)
        self.assertEqual(run.group, 'pgl3')
        self.assertEqual(run.shards, 4)
        self.assertEqual(run.counts, {'Σ1': 21, 'Σ2': 28})
        self.assertEqual(run.total, 49)
        self.assertEqual(run.checksum, census.checksum)
        self.assertEqual(run.output_path, '/tmp/census.json')
        self.assertEqual(run.label_count, 2)

    def test_representatives_stored_as_bit_strings(self):
        """Test representative generators are saved as h-bit strings."""
        run = models.CensusRun.objects.create_from_census(sample_census())

        self.assertEqual(
            run.representatives['Σ2'][0], ['1', '0', '0', '0', '0', '0'],
        )

    def test_census_run_str(self):
        """Test the census run string representation."""
        run = models.CensusRun.objects.create_from_census(sample_census())

        self.assertEqual(str(run), 'q=2 pgl3: 49 planes')

    def test_checksum_depends_on_configuration_only(self):
        """Test the checksum ignores counts and runtime."""
        a = sample_census()
        b = sample_census(counts={}, runtime_seconds=9.0)
        c = sample_census(group='sym7')

        self.assertEqual(a.checksum, b.checksum)
        self.assertNotEqual(a.checksum, c.checksum)
