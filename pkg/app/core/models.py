"""
Database models.
"""
from django.db import models

from geometry.orbits import GROUPS
from geometry.reports import bit_rows


class CensusRunManager(models.Manager):
    """Manager for census runs."""

    def create_from_census(self, census, shards=1, output_path=''):
        """Create, save and return a run for a finished census."""
        h = census.q.bit_length() - 1
        return self.create(
            q=census.q,
            modulus=census.modulus,
            group=census.group,
            shards=shards,
            complete=census.complete,
            checksum=census.checksum,
            counts=dict(census.counts),
            representatives={
                label: bit_rows(rows, h)
                for label, rows in census.representatives.items()
            },
            total=census.total,
            runtime_seconds=census.runtime_seconds,
            output_path=str(output_path),
        )


class CensusRun(models.Model):
    """One census of the planes of PG(5,q) meeting the Veronese surface."""
    q = models.PositiveIntegerField()
    modulus = models.CharField(max_length=32)
    group = models.CharField(
        max_length=8,
        choices=[(g, g) for g in GROUPS],
        default='pgl3',
    )
    shards = models.PositiveIntegerField(default=1)
    complete = models.BooleanField(default=True)
    checksum = models.CharField(max_length=64)
    counts = models.JSONField(default=dict)
    representatives = models.JSONField(default=dict)
    total = models.PositiveBigIntegerField(default=0)
    runtime_seconds = models.FloatField(default=0.0)
    output_path = models.CharField(max_length=255, blank=True)
    created = models.DateTimeField(auto_now_add=True)

    objects = CensusRunManager()

    class Meta:
        ordering = ['-created', '-id']

    def __str__(self):
        return f'q={self.q} {self.group}: {self.total} planes'

    @property
    def label_count(self):
        return len(self.counts)
